"""
Canonical forms of completed squares under row permutations, column
permutations and color relabeling.
"""

from collections.abc import Generator, Iterable
from itertools import permutations

import numpy as np

from latindef._logger import logger
from latindef.core.partial_coloring import PartialColoring
from latindef.solver.extension_solver import ExtensionSolver

CanonicalKey = tuple[int, ...]


def relabel_by_first_appearance(values: Iterable[int]) -> CanonicalKey:
    """
    Rename colors 1, 2, ... in order of first appearance, the
    lexicographically least relabeling of `values`. Zeros stay zeros.
    """
    names: dict[int, int] = {}
    relabeled = []
    for value in values:
        if value and value not in names:
            names[value] = len(names) + 1
        relabeled.append(names.get(value, 0))
    return tuple(relabeled)


def canonical_form(pc: PartialColoring) -> CanonicalKey:
    """
    The least row-major tuple over every row permutation, column
    permutation and color relabeling of `pc`. Transposition is not part of
    the group.
    """
    cells = pc.cells
    order = range(pc.order)
    return min(
        relabel_by_first_appearance(
            cells[np.ix_(row_perm, col_perm)].ravel().tolist()
        )
        for row_perm in permutations(order)
        for col_perm in permutations(order)
    )


def is_reduced(square: PartialColoring) -> bool:
    """First row reads 1..n and the first column is ascending."""
    cells = square.cells
    first_row = cells[0].tolist()
    first_col = cells[:, 0].tolist()
    return first_row == list(range(1, square.order + 1)) and all(
        above < below for above, below in zip(first_col, first_col[1:])
    )


def iter_all_squares(
    order: int, num_colors: int
) -> Generator[PartialColoring, None, None]:
    """Every member of L(n, k), in lexicographic order."""
    yield from ExtensionSolver().iter_extensions(
        PartialColoring.empty(order, num_colors)
    )


def iter_reduced_squares(
    order: int, num_colors: int
) -> Generator[PartialColoring, None, None]:
    """
    Every reduced member of L(n, k), in lexicographic order. Each square is
    a row permutation and color relabeling away from a reduced one.
    """
    first_row = [list(range(1, order + 1))]
    seed = PartialColoring.from_rows(
        first_row + [[None] * order for _ in range(order - 1)], num_colors
    )
    for square in ExtensionSolver().iter_extensions(seed):
        if is_reduced(square):
            yield square


def canonical_representatives(
    order: int, num_colors: int
) -> list[PartialColoring]:
    """
    One square per equivalence class of L(n, k), the lexicographically
    first reduced square of each class.
    """
    seen: set[CanonicalKey] = set()
    representatives = []
    for square in iter_reduced_squares(order, num_colors):
        key = canonical_form(square)
        if key not in seen:
            seen.add(key)
            representatives.append(square)
    logger.debug(
        f"L({order},{num_colors}) has {len(representatives)} classes"
    )
    return representatives
