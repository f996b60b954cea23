from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import perm
from pathlib import Path
from typing import Any, Optional

from latindef._config import load_settings
from latindef._exceptions import (
    BudgetExceededError,
    NotFullyColoredError,
    WrongColorCountError,
)
from latindef._logger import logger
from latindef.core.partial_coloring import PartialColoring, Position
from latindef.patterns.detectors import detect_rectangle, detect_three_in_line
from latindef.search._enums import ValueSource
from latindef.search.canonical import (
    canonical_representatives,
    iter_all_squares,
)
from latindef.solver.extension_solver import ExtensionSolver


def known_defining_number(order: int, num_colors: int) -> Optional[int]:
    """
    The closed-form value of d(L(n, k)) where one is known.

    Returns:
        Optional[int]: n^2 for k > 2n-1; n^2 - n for k = 2n-1 and n even,
            n^2 - n + 1 for k = 2n-1 and n odd above 1; n^2 - 8n/5 for
            k = 2n-2 when n = 5 or 10 divides n; 0 for n = k = 1; None
            otherwise.
    """
    n, k = order, num_colors
    if n == 1 and k == 1:
        return 0
    if k > 2 * n - 1:
        return n * n
    if k == 2 * n - 1:
        return n * n - n if n % 2 == 0 else n * n - n + 1
    if k == 2 * n - 2 and (n == 5 or n % 10 == 0):
        return n * n - 8 * n // 5
    return None


@dataclass(frozen=True)
class SearchOptions:
    """
    Args:
        symmetry (bool): Search one square per equivalence class instead
            of every square.
        prune (bool): Skip candidate sets whose Empty cells hold three in a
            line or a rectangle. Only applied when k >= 2n-2.
        workers (int): Worker processes over the squares searched.
        budget (Optional[int]): Work budget; falls back to
            LATINDEF_SEARCH_BUDGET.
    """

    symmetry: bool = True
    prune: bool = True
    workers: int = 1
    budget: Optional[int] = None


@dataclass(frozen=True)
class SearchResult:
    n: int
    k: int
    d_value: int
    witness: PartialColoring
    squares_examined: int
    subsets_examined: int

    @property
    def known_value(self) -> Optional[int]:
        return known_defining_number(self.n, self.k)

    @property
    def source(self) -> ValueSource:
        """KNOWN when a closed form gives the same value, else COMPUTED."""
        if self.known_value == self.d_value:
            return ValueSource.KNOWN
        return ValueSource.COMPUTED

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d_value,
            "source": self.source.value,
            "witness": self.witness.to_rows(),
            "squares_examined": self.squares_examined,
            "subsets_examined": self.subsets_examined,
        }

    def table_row(self, witness_file: Optional[Path] = None) -> str:
        """The "n k d witness-file" summary line."""
        witness = str(witness_file) if witness_file else "-"
        return f"{self.n} {self.k} {self.d_value} {witness}"


@dataclass(frozen=True)
class SquareMinimum:
    size: int
    witness: PartialColoring


def estimate_work(order: int, num_colors: int, symmetry: bool) -> int:
    """
    Upper estimate of solver calls: the product of row counts for the
    squares searched times the 2^(n^2) subsets of each.
    """
    rows = perm(num_colors, order)
    squares = rows ** (order - 1) if symmetry else rows**order
    return squares * 2 ** (order * order)


def _is_pruned(candidate: PartialColoring) -> bool:
    return (
        detect_three_in_line(candidate) is not None
        or detect_rectangle(candidate) is not None
    )


def _square_minimum(
    square: PartialColoring, prune: bool, limit: Optional[int] = None
) -> tuple[Optional[SquareMinimum], int]:
    """
    Find the smallest defining set of `square` with at most `limit`
    colored cells.

    Candidate sets are tried by increasing colored count and, within a
    count, with Empty cells in lexicographic order. Every smaller count has
    been exhausted when the first Unique candidate turns up, so the search
    stops there and that candidate is the lexicographically least minimum.

    Returns:
        tuple[Optional[SquareMinimum], int]: The minimum (None when every
            set within `limit` fails) and the number of candidates tried.
    """
    n, k = square.order, square.num_colors
    cells = [
        Position(row, col)
        for row in range(1, n + 1)
        for col in range(1, n + 1)
    ]
    prune = prune and k >= 2 * n - 2
    solver = ExtensionSolver()
    examined = 0
    top = len(cells) if limit is None else min(limit, len(cells))
    for colored_count in range(top + 1):
        empty_count = len(cells) - colored_count
        for empties in combinations(range(len(cells)), empty_count):
            empty_set = set(empties)
            kept = [
                cell for i, cell in enumerate(cells) if i not in empty_set
            ]
            candidate = square.keep_only(kept)
            examined += 1
            if prune and _is_pruned(candidate):
                continue
            if solver.count_extensions(candidate).is_unique:
                return SquareMinimum(colored_count, candidate), examined
    return None, examined


def min_defining_set_for_square(
    square: PartialColoring, *, prune: bool = True
) -> tuple[int, PartialColoring]:
    """
    Find a minimum defining set of a completed square.

    Args:
        square (PartialColoring): A fully colored square of L(n, k).
        prune (bool): Skip candidates ruled out by the three-in-line and
            rectangle configurations when k >= 2n-2.

    Returns:
        tuple[int, PartialColoring]: The size and the lexicographically
            least defining set of that size.

    Raises:
        NotFullyColoredError: If the square has Empty cells.
    """
    if not square.is_complete():
        logger.error(f"{square!r} is not fully colored")
        raise NotFullyColoredError(
            f"square has {square.uncolored_count} Empty cells"
        )
    minimum, _ = _square_minimum(square, prune)
    # The whole square always defines itself.
    assert minimum is not None
    return minimum.size, minimum.witness


def _better(
    candidate: SquareMinimum, best: Optional[SquareMinimum]
) -> bool:
    if best is None or candidate.size < best.size:
        return True
    return (
        candidate.size == best.size
        and candidate.witness.sort_key() < best.witness.sort_key()
    )


def _search_sequential(
    squares: list[PartialColoring], prune: bool
) -> tuple[Optional[SquareMinimum], int]:
    best: Optional[SquareMinimum] = None
    examined = 0
    for number, square in enumerate(squares, start=1):
        limit = best.size if best is not None else None
        minimum, tried = _square_minimum(square, prune, limit)
        examined += tried
        if minimum is None:
            logger.debug(f"Square {number}/{len(squares)}: above {limit}")
            continue
        logger.debug(
            f"Square {number}/{len(squares)}: minimum {minimum.size}"
        )
        if _better(minimum, best):
            best = minimum
    return best, examined


def _search_parallel(
    squares: list[PartialColoring], prune: bool, workers: int
) -> tuple[Optional[SquareMinimum], int]:
    best: Optional[SquareMinimum] = None
    examined = 0
    with ProcessPoolExecutor(max_workers=workers) as executor:
        for minimum, tried in executor.map(
            _square_minimum, squares, [prune] * len(squares)
        ):
            examined += tried
            if minimum is not None and _better(minimum, best):
                best = minimum
    return best, examined


def defining_number(
    order: int, num_colors: int, options: Optional[SearchOptions] = None
) -> SearchResult:
    """
    Compute d(L(n, k)) by exhaustive search.

    With symmetry on, only one square per class under row permutations,
    column permutations and color relabeling is searched; all three maps
    send L(n, k) to itself and preserve unique extension, so the minimum is
    unchanged.

    Args:
        order (int): n.
        num_colors (int): k, at least n.
        options (Optional[SearchOptions]): Symmetry, pruning, workers and
            budget.

    Returns:
        SearchResult: d with its lexicographically least witness.

    Raises:
        WrongColorCountError: If k < n, where L(n, k) is empty.
        BudgetExceededError: If the work estimate exceeds the budget.
    """
    options = options or SearchOptions()
    if num_colors < order:
        logger.error(f"L({order},{num_colors}) is empty")
        raise WrongColorCountError(
            f"L(n, k) needs k >= n, got n={order}, k={num_colors}"
        )
    budget = (
        options.budget
        if options.budget is not None
        else load_settings().search_budget
    )
    estimate = estimate_work(order, num_colors, options.symmetry)
    if estimate > budget:
        logger.error(
            f"Estimated work {estimate} for L({order},{num_colors}) "
            f"exceeds budget {budget}"
        )
        raise BudgetExceededError(
            f"estimated work {estimate} exceeds budget {budget}"
        )

    if options.symmetry:
        squares = canonical_representatives(order, num_colors)
    else:
        squares = list(iter_all_squares(order, num_colors))
    logger.info(
        f"Searching {len(squares)} squares of L({order},{num_colors})"
    )
    if options.workers > 1:
        best, examined = _search_parallel(
            squares, options.prune, options.workers
        )
    else:
        best, examined = _search_sequential(squares, options.prune)
    assert best is not None

    result = SearchResult(
        n=order,
        k=num_colors,
        d_value=best.size,
        witness=best.witness,
        squares_examined=len(squares),
        subsets_examined=examined,
    )
    known = result.known_value
    if known is not None and known != result.d_value:
        logger.warning(
            f"Computed d={result.d_value} differs from the closed form "
            f"{known} for L({order},{num_colors})"
        )
    logger.info(
        f"d(L({order},{num_colors})) = {result.d_value} "
        f"({result.source.value})"
    )
    return result
