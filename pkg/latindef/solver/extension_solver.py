from collections.abc import Callable, Generator, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from typing import Any, Optional

from latindef._logger import logger
from latindef.core.color_set import mask_colors
from latindef.core.partial_coloring import PartialColoring
from latindef.solver._enums import Verdict
from latindef.solver.board import Board

CellChooser = Callable[[Board], Optional[int]]


class _NodeBudgetReached(Exception):
    pass


@dataclass
class _Frame:
    """One open node of the search: its trail and untried colors."""

    trail: list[int]
    index: Optional[int] = None
    colors: Iterator[int] = field(default_factory=lambda: iter(()))
    assigned: bool = False
    dead: bool = False

    @property
    def is_leaf(self) -> bool:
        return not self.dead and self.index is None


@dataclass(frozen=True)
class ExtensionReport:
    """
    Verdict of the uniqueness search.

    `completion` is set for Unique, `witnesses` holds two distinct
    completions for Multiple. Aborted means the node budget ran out before
    the verdict was known.
    """

    verdict: Verdict
    completion: Optional[PartialColoring] = None
    witnesses: tuple[PartialColoring, ...] = field(default_factory=tuple)
    nodes_explored: int = 0
    solutions_found: int = 0

    @property
    def is_unique(self) -> bool:
        return self.verdict is Verdict.UNIQUE

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "nodes": self.nodes_explored,
            "solutions_found": self.solutions_found,
            "completion": (
                self.completion.to_rows() if self.completion else None
            ),
            "witnesses": [witness.to_rows() for witness in self.witnesses],
        }


def _verdict_for(solutions: int, aborted: bool) -> Verdict:
    if solutions >= 2:
        return Verdict.MULTIPLE
    if aborted:
        return Verdict.ABORTED
    return Verdict.UNIQUE if solutions == 1 else Verdict.NONE


def _build_report(
    solutions: list[PartialColoring], nodes: int, aborted: bool
) -> ExtensionReport:
    verdict = _verdict_for(len(solutions), aborted)
    return ExtensionReport(
        verdict=verdict,
        completion=solutions[0] if verdict is Verdict.UNIQUE else None,
        witnesses=(
            tuple(solutions[:2]) if verdict is Verdict.MULTIPLE else ()
        ),
        nodes_explored=nodes,
        solutions_found=len(solutions),
    )


class ExtensionSolver:
    """
    Exact search for the completions of a partial coloring.

    The search interleaves singleton propagation with backtracking. Counting
    branches on the most constrained cell (row-major tie-break); enumeration
    branches on the first Empty cell in row-major order so completions come
    out in lexicographic order. Colors are always tried in ascending order.

    Args:
        node_budget (Optional[int]): Abort after this many search nodes.
            In parallel runs the root takes one node and the rest is
            split evenly among the root branches.
        workers (int): Worker processes for `count_extensions`; the root
            branching is split among them. Verdicts match the sequential
            run, Multiple witnesses may differ.
    """

    def __init__(
        self, node_budget: Optional[int] = None, workers: int = 1
    ) -> None:
        self.node_budget = node_budget
        self.workers = max(1, workers)
        self.nodes: int = 0

    def _tick(self) -> None:
        if self.node_budget is not None and self.nodes >= self.node_budget:
            raise _NodeBudgetReached
        self.nodes += 1

    def _enter(self, board: Board, choose: CellChooser) -> _Frame:
        """Open a search node: propagate, then pick the branching cell."""
        self._tick()
        frame = _Frame(trail=[])
        if board.propagate(frame.trail) is not None:
            frame.dead = True
            return frame
        frame.index = choose(board)
        if frame.index is not None:
            frame.colors = iter(mask_colors(board.available(frame.index)))
        return frame

    def _walk(
        self, board: Board, choose: CellChooser
    ) -> Generator[PartialColoring, None, None]:
        # Explicit stack; depth grows with the number of Empty cells.
        stack = [self._enter(board, choose)]
        if stack[-1].is_leaf:
            yield board.to_coloring()
        while stack:
            frame = stack[-1]
            if frame.assigned:
                board.unassign(frame.index)
                frame.assigned = False
            color = next(frame.colors, None)
            if color is None:
                board.undo(frame.trail)
                stack.pop()
                continue
            board.assign(frame.index, color)
            frame.assigned = True
            child = self._enter(board, choose)
            if child.is_leaf:
                yield board.to_coloring()
            stack.append(child)

    def iter_extensions(
        self, pc: PartialColoring
    ) -> Generator[PartialColoring, None, None]:
        """
        Lazily yield every completion of `pc` in lexicographic row-major
        order.
        """
        self.nodes = 0
        yield from self._walk(Board(pc), Board.first_empty)

    def enumerate_extensions(
        self, pc: PartialColoring, cap: int
    ) -> list[PartialColoring]:
        """
        Return up to `cap` distinct completions, lexicographically first.

        Raises:
            ValueError: If cap is smaller than 1.
        """
        if cap < 1:
            raise ValueError(f"cap must be at least 1, got {cap}")
        return list(islice(self.iter_extensions(pc), cap))

    def _collect(
        self, pc: PartialColoring, cap: int
    ) -> tuple[list[PartialColoring], bool]:
        self.nodes = 0
        solutions: list[PartialColoring] = []
        try:
            for solution in self._walk(Board(pc), Board.most_constrained):
                solutions.append(solution)
                if len(solutions) >= cap:
                    break
        except _NodeBudgetReached:
            logger.warning(
                f"Node budget of {self.node_budget} reached after "
                f"{len(solutions)} completions"
            )
            return solutions, True
        return solutions, False

    def count_extensions(
        self, pc: PartialColoring, cap: int = 2
    ) -> ExtensionReport:
        """
        Decide whether `pc` has no, exactly one, or several completions.

        Args:
            pc (PartialColoring): A proper partial coloring.
            cap (int): Stop after this many completions (at least 2).

        Returns:
            ExtensionReport: The verdict with its completion or witnesses.

        Raises:
            ValueError: If cap is smaller than 2.
        """
        if cap < 2:
            raise ValueError(f"cap must be at least 2, got {cap}")
        if self.workers > 1:
            return self._count_parallel(pc, cap)
        solutions, aborted = self._collect(pc, cap)
        report = _build_report(solutions, self.nodes, aborted)
        logger.debug(
            f"Search over {pc.uncolored_count} Empty cells: "
            f"{report.verdict.value} after {report.nodes_explored} nodes"
        )
        return report

    def _count_parallel(
        self, pc: PartialColoring, cap: int
    ) -> ExtensionReport:
        board = Board(pc)
        if board.propagate([]) is not None:
            return ExtensionReport(Verdict.NONE, nodes_explored=1)
        index = board.most_constrained()
        if index is None:
            completion = board.to_coloring()
            return ExtensionReport(
                Verdict.UNIQUE,
                completion=completion,
                nodes_explored=1,
                solutions_found=1,
            )
        branches = []
        for color in mask_colors(board.available(index)):
            board.assign(index, color)
            branches.append(board.to_coloring())
            board.unassign(index)
        share = _branch_budget(self.node_budget, len(branches))
        if share == 0:
            logger.warning(
                f"Node budget of {self.node_budget} is too small to split "
                f"among {len(branches)} branches"
            )
            return ExtensionReport(Verdict.ABORTED, nodes_explored=1)

        solutions: list[PartialColoring] = []
        nodes, aborted = 1, False
        with ProcessPoolExecutor(max_workers=self.workers) as executor:
            results = executor.map(
                _count_branch,
                branches,
                [cap] * len(branches),
                [share] * len(branches),
            )
            for branch_solutions, branch_nodes, branch_aborted in results:
                solutions.extend(branch_solutions)
                nodes += branch_nodes
                aborted = aborted or branch_aborted
        return _build_report(solutions[:cap], nodes, aborted)


def _branch_budget(
    node_budget: Optional[int], branches: int
) -> Optional[int]:
    """Even share of the budget left after the root node, per branch."""
    if node_budget is None:
        return None
    return max(0, node_budget - 1) // branches


def _count_branch(
    pc: PartialColoring, cap: int, node_budget: Optional[int]
) -> tuple[list[PartialColoring], int, bool]:
    solver = ExtensionSolver(node_budget=node_budget)
    solutions, aborted = solver._collect(pc, cap)
    return solutions, solver.nodes, aborted
