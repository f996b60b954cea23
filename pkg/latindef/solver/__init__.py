from collections.abc import Generator
from typing import Optional

from latindef._config import load_settings
from latindef.core.partial_coloring import PartialColoring
from latindef.solver._enums import PropagationStatus, TraceReason, Verdict
from latindef.solver.board import Board
from latindef.solver.extension_solver import ExtensionReport, ExtensionSolver
from latindef.solver.propagation import (
    PropagationTrace,
    TraceStep,
    propagate_singletons,
)

__all__ = [
    "Board",
    "ExtensionReport",
    "ExtensionSolver",
    "PropagationStatus",
    "PropagationTrace",
    "TraceReason",
    "TraceStep",
    "Verdict",
    "count_extensions",
    "enumerate_extensions",
    "initialize_solver",
    "iter_extensions",
    "propagate_singletons",
]


def initialize_solver(
    node_budget: Optional[int] = None, workers: Optional[int] = None
) -> ExtensionSolver:
    """
    Initializes an ExtensionSolver, filling unset options from the
    environment settings.

    Args:
        node_budget (Optional[int]): Search node limit; falls back to
            LATINDEF_NODE_BUDGET.
        workers (Optional[int]): Worker processes; falls back to
            LATINDEF_WORKERS.
    Returns:
        ExtensionSolver: A configured solver.
    """
    settings = load_settings()
    return ExtensionSolver(
        node_budget=(
            node_budget if node_budget is not None else settings.node_budget
        ),
        workers=workers if workers is not None else settings.workers,
    )


def count_extensions(
    pc: PartialColoring, cap: int = 2, *, node_budget: Optional[int] = None
) -> ExtensionReport:
    """
    A convenience function that runs a sequential ExtensionSolver on `pc`.

    Args:
        pc (PartialColoring): A proper partial coloring.
        cap (int): Stop after this many completions; 2 settles uniqueness.
        node_budget (Optional[int]): Optional search node limit.

    Returns:
        ExtensionReport: None, Unique (with the completion), Multiple (with
            two witnesses) or Aborted.
    """
    return ExtensionSolver(node_budget=node_budget).count_extensions(pc, cap)


def enumerate_extensions(
    pc: PartialColoring, cap: int
) -> list[PartialColoring]:
    return ExtensionSolver().enumerate_extensions(pc, cap)


def iter_extensions(
    pc: PartialColoring,
) -> Generator[PartialColoring, None, None]:
    yield from ExtensionSolver().iter_extensions(pc)
