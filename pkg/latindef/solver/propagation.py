from dataclasses import dataclass, field
from typing import Optional

from latindef._logger import logger
from latindef._types import ColorId
from latindef.core.partial_coloring import PartialColoring, Position
from latindef.solver._enums import PropagationStatus, TraceReason
from latindef.solver.board import Board


@dataclass(frozen=True)
class TraceStep:
    position: Position
    color: ColorId
    pass_number: int
    reason: TraceReason = TraceReason.FORCED_SINGLETON

    def __str__(self) -> str:
        return f"{self.position} <- {self.color}"


@dataclass
class PropagationTrace:
    """
    The cells colored by singleton propagation, in the order they were
    colored, and how propagation ended.
    """

    steps: list[TraceStep] = field(default_factory=list)
    status: PropagationStatus = PropagationStatus.FIXPOINT
    contradiction: Optional[Position] = None

    @property
    def passes(self) -> int:
        return self.steps[-1].pass_number if self.steps else 0

    def steps_in_pass(self, pass_number: int) -> list[TraceStep]:
        return [
            step for step in self.steps if step.pass_number == pass_number
        ]

    def to_text(self) -> str:
        """One "(row,col) <- color" line per step, then the end marker."""
        lines = [str(step) for step in self.steps]
        if self.status is PropagationStatus.CONTRADICTION:
            lines.append(f"contradiction at {self.contradiction}")
        return "\n".join(lines)


def propagate_singletons(
    pc: PartialColoring,
) -> tuple[PartialColoring, PropagationTrace]:
    """
    Repeatedly color every Empty cell that has exactly one available color.

    Args:
        pc (PartialColoring): A proper partial coloring.

    Returns:
        tuple[PartialColoring, PropagationTrace]: The coloring reached and
            the trace of forced colorings. On a contradiction the trace
            names the cell that ran out of colors and the returned coloring
            is the (still proper) state reached before it.
    """
    board = Board(pc)
    trace = PropagationTrace()

    def record(index: int, color: int, pass_number: int) -> None:
        row, col = divmod(index, board.order)
        trace.steps.append(
            TraceStep(Position(row + 1, col + 1), color, pass_number)
        )

    conflict = board.propagate([], on_step=record)
    if conflict is not None:
        row, col = divmod(conflict, board.order)
        trace.status = PropagationStatus.CONTRADICTION
        trace.contradiction = Position(row + 1, col + 1)
    logger.debug(
        f"Propagation colored {len(trace.steps)} cells in {trace.passes} "
        f"passes ({trace.status.value})"
    )
    return board.to_coloring(), trace
