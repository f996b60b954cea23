"""
Detectors for configurations of Empty cells that rule out a unique
extension to L(n, 2n-2). Every detector is closed under row and column
permutations and returns the first witness in a fixed lexicographic scan
order, or None.
"""

from collections.abc import Callable
from typing import Optional

import numpy as np

from latindef._logger import logger
from latindef.core.color_set import ColorSet
from latindef.core.partial_coloring import EMPTY, PartialColoring, Position
from latindef.patterns._enums import Orientation, PatternKind
from latindef.patterns.pattern_witness import PatternWitness

Detector = Callable[[PartialColoring], Optional[PatternWitness]]


class _EmptyIndex:
    """1-based Empty cells of each row and column, ascending."""

    def __init__(self, pc: PartialColoring) -> None:
        empty = pc.cells == EMPTY
        self.order = pc.order
        self.by_row: list[list[int]] = [[]] + [
            [int(col) + 1 for col in np.flatnonzero(line)] for line in empty
        ]
        self.by_col: list[list[int]] = [[]] + [
            [int(row) + 1 for row in np.flatnonzero(line)]
            for line in empty.T
        ]
        self.count = int(empty.sum())


def _report(witness: PatternWitness) -> PatternWitness:
    logger.debug(f"Found {witness}")
    return witness


def detect_three_in_line(pc: PartialColoring) -> Optional[PatternWitness]:
    """
    Find three Empty cells in one row, or failing that in one column.

    Returns:
        Optional[PatternWitness]: The first three Empty cells of the first
            such row (row-form) or column (transposed), or None.
    """
    index = _EmptyIndex(pc)
    for row in range(1, pc.order + 1):
        cols = index.by_row[row]
        if len(cols) >= 3:
            return _report(
                PatternWitness(
                    PatternKind.THREE_IN_LINE,
                    tuple(Position(row, col) for col in cols[:3]),
                )
            )
    for col in range(1, pc.order + 1):
        rows = index.by_col[col]
        if len(rows) >= 3:
            return _report(
                PatternWitness(
                    PatternKind.THREE_IN_LINE,
                    tuple(Position(row, col) for row in rows[:3]),
                    orientation=Orientation.TRANSPOSED,
                )
            )
    return None


def detect_rectangle(pc: PartialColoring) -> Optional[PatternWitness]:
    """
    Find rows a < b and columns x < y with all four corners Empty.
    """
    empty = pc.cells == EMPTY
    for a in range(pc.order):
        for b in range(a + 1, pc.order):
            shared = np.flatnonzero(empty[a] & empty[b])
            if len(shared) >= 2:
                x, y = int(shared[0]) + 1, int(shared[1]) + 1
                return _report(
                    PatternWitness(
                        PatternKind.RECTANGLE,
                        (
                            Position(a + 1, x),
                            Position(a + 1, y),
                            Position(b + 1, x),
                            Position(b + 1, y),
                        ),
                    )
                )
    return None


def _scan_chain(
    pc: PartialColoring,
) -> Optional[tuple[tuple[Position, ...], tuple[ColorSet, ...]]]:
    """
    Search rows r1 != r2 and distinct columns c1, c2, c3 for
    a(r1,c1) = {a}, a(r1,c2) = {a,b}, a(r2,c2) = {b,c} with (r2,c3) Empty.
    The scan order is r1, c1, c2, r2, c3.
    """
    index = _EmptyIndex(pc)
    if index.count < 4:
        return None
    available: dict[tuple[int, int], ColorSet] = {
        (row, col): pc.available_colors(Position(row, col))
        for row in range(1, pc.order + 1)
        for col in index.by_row[row]
    }
    for r1 in range(1, pc.order + 1):
        for c1 in index.by_row[r1]:
            first = available[r1, c1]
            if not first.is_singleton():
                continue
            for c2 in index.by_row[r1]:
                second = available[r1, c2]
                if c2 == c1 or len(second) != 2 or not first <= second:
                    continue
                linking = second - first
                for r2 in index.by_col[c2]:
                    third = available[r2, c2]
                    if r2 == r1 or len(third) != 2 or not linking <= third:
                        continue
                    for c3 in index.by_row[r2]:
                        if c3 in (c1, c2):
                            continue
                        positions = (
                            Position(r1, c1),
                            Position(r1, c2),
                            Position(r2, c2),
                            Position(r2, c3),
                        )
                        return positions, (first, second, third)
    return None


def detect_lemma3_chain(pc: PartialColoring) -> Optional[PatternWitness]:
    """
    Find the chain of Empty cells whose available sets are {a}, {a,b} and
    {b,c}, followed by one more Empty cell.

    The row-form has the first two cells in a row r1, the third below the
    second in row r2 and the fourth Empty cell elsewhere in r2. The
    transposed form swaps the roles of rows and columns. Row-form matches
    are reported first.

    Args:
        pc (PartialColoring): A proper partial coloring.

    Returns:
        Optional[PatternWitness]: The witness with the three available sets
            in chain order, or None.
    """
    found = _scan_chain(pc)
    if found is not None:
        positions, sets = found
        return _report(
            PatternWitness(PatternKind.LEMMA3_CHAIN, positions, sets)
        )
    found = _scan_chain(pc.transpose())
    if found is not None:
        positions, sets = found
        return _report(
            PatternWitness(
                PatternKind.LEMMA3_CHAIN,
                tuple(Position(col, row) for row, col in positions),
                sets,
                Orientation.TRANSPOSED,
            )
        )
    return None


def detect_config2(pc: PartialColoring) -> Optional[PatternWitness]:
    """
    Find the five-cell staircase (r1,c1), (r1,c2), (r2,c2), (r2,c3),
    (r3,c3) of Empty cells over distinct rows and distinct columns.

    The staircase also covers its transpose, which is the same shape read
    from the other end. The scan order is r1, c1, c2, r2, c3, r3.
    """
    index = _EmptyIndex(pc)
    if index.count < 5:
        return None
    for r1 in range(1, pc.order + 1):
        for c1 in index.by_row[r1]:
            for c2 in index.by_row[r1]:
                if c2 == c1:
                    continue
                for r2 in index.by_col[c2]:
                    if r2 == r1:
                        continue
                    for c3 in index.by_row[r2]:
                        if c3 in (c1, c2):
                            continue
                        for r3 in index.by_col[c3]:
                            if r3 in (r1, r2):
                                continue
                            return _report(
                                PatternWitness(
                                    PatternKind.CONFIG2,
                                    (
                                        Position(r1, c1),
                                        Position(r1, c2),
                                        Position(r2, c2),
                                        Position(r2, c3),
                                        Position(r3, c3),
                                    ),
                                )
                            )
    return None


DETECTORS: tuple[Detector, ...] = (
    detect_three_in_line,
    detect_rectangle,
    detect_lemma3_chain,
    detect_config2,
)


def detect_all(pc: PartialColoring) -> list[PatternWitness]:
    """Run every detector and return the witnesses found, in order."""
    witnesses = []
    for detector in DETECTORS:
        witness = detector(pc)
        if witness is not None:
            witnesses.append(witness)
    return witnesses
