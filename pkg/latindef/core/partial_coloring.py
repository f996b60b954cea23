from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

import numpy as np

from latindef._config import MAX_COLORS, MAX_ORDER
from latindef._exceptions import (
    CellAlreadyColoredError,
    ColClashError,
    DuplicateCellError,
    EntryOutOfRangeError,
    NotAPermutationError,
    RowClashError,
)
from latindef._logger import logger
from latindef._types import ColorId, Grid, Permutation, Row
from latindef.core.color_set import ColorSet, full_mask

# Empty cells are stored as 0 in the dense grid; the public API uses None.
EMPTY: int = 0


class Position(NamedTuple):
    """A 1-based (row, col) cell address."""

    row: int
    col: int

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


@dataclass(frozen=True)
class RowColUnion:
    """The 2n-1 cells of row `center.row` and column `center.col`."""

    center: Position
    cells: tuple[Position, ...]


def row_col_union(order: int, center: Position) -> RowColUnion:
    """
    Build u(i, j): the center, the rest of its row, then the rest of its
    column.
    """
    row_cells = [Position(center.row, col) for col in range(1, order + 1)]
    col_cells = [
        Position(row, center.col)
        for row in range(1, order + 1)
        if row != center.row
    ]
    return RowColUnion(center=center, cells=tuple(row_cells + col_cells))


def _check_dimensions(order: int, num_colors: int) -> None:
    if not 1 <= order <= MAX_ORDER:
        raise EntryOutOfRangeError(
            f"order must be in 1..{MAX_ORDER}, got {order}"
        )
    if not 1 <= num_colors <= MAX_COLORS:
        raise EntryOutOfRangeError(
            f"number of colors must be in 1..{MAX_COLORS}, got {num_colors}"
        )


def _line_masks(cells: Grid, axis: int) -> tuple[int, ...]:
    """
    Collect the used-color mask of every row (axis=0) or column (axis=1).

    Raises:
        RowClashError: If a row repeats a color.
        ColClashError: If a column repeats a color.
    """
    lines = cells if axis == 0 else cells.T
    masks = []
    for index, line in enumerate(lines.tolist(), start=1):
        mask = 0
        for color in line:
            if color == EMPTY:
                continue
            bit = 1 << color
            if mask & bit:
                line_name = "Row" if axis == 0 else "Column"
                logger.error(f"{line_name} {index} repeats color {color}")
                if axis == 0:
                    raise RowClashError(f"row {index} repeats color {color}")
                raise ColClashError(f"column {index} repeats color {color}")
            mask |= bit
        masks.append(mask)
    return tuple(masks)


class PartialColoring:
    """
    An n x n grid whose cells are either Empty or colored with one of the
    colors 1..k, with no color repeated in any row or column.

    Instances are immutable: every transformation returns a new coloring.
    The used colors of each row and column are kept as bitmasks so that
    available-color queries are O(1).
    """

    __slots__ = ("order", "num_colors", "_cells", "_row_masks", "_col_masks")

    def __init__(self, cells: Grid, num_colors: int) -> None:
        """
        Args:
            cells (Grid): A square integer array, 0 for Empty cells.
            num_colors (int): k, the number of colors.

        Raises:
            EntryOutOfRangeError: If the grid is not square, its order or
                k is outside the supported limits, or a color is not in
                1..k.
            RowClashError, ColClashError: If the coloring is not proper.
        """
        raw = np.asarray(cells)
        if raw.ndim != 2 or raw.shape[0] != raw.shape[1]:
            raise EntryOutOfRangeError(
                f"grid must be square, got shape {raw.shape}"
            )
        _check_dimensions(raw.shape[0], num_colors)
        if raw.size and (raw.min() < EMPTY or raw.max() > num_colors):
            raise EntryOutOfRangeError(
                f"colors must be in 1..{num_colors}"
            )
        # Values are within 0..MAX_COLORS, so the narrowing is exact.
        grid = raw.astype(np.int16)
        self.order: int = grid.shape[0]
        self.num_colors: int = num_colors
        self._row_masks = _line_masks(grid, axis=0)
        self._col_masks = _line_masks(grid, axis=1)
        grid.setflags(write=False)
        self._cells: Grid = grid

    @classmethod
    def empty(cls, order: int, num_colors: int) -> "PartialColoring":
        _check_dimensions(order, num_colors)
        return cls(np.zeros((order, order), dtype=np.int16), num_colors)

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[Optional[int]]], num_colors: int
    ) -> "PartialColoring":
        """Build a coloring from rows of colors, None marking Empty."""
        order = len(rows)
        if any(len(row) != order for row in rows):
            raise EntryOutOfRangeError("every row must have n entries")
        _check_dimensions(order, num_colors)
        for row in rows:
            for color in row:
                if color is not None and not 1 <= color <= num_colors:
                    raise EntryOutOfRangeError(
                        f"color {color} not in 1..{num_colors}"
                    )
        grid = [
            [EMPTY if color is None else color for color in row]
            for row in rows
        ]
        cells = np.array(grid, dtype=np.int64).reshape(order, order)
        return cls(cells, num_colors)

    @property
    def cells(self) -> Grid:
        """Read-only dense grid, 0 marking Empty cells."""
        return self._cells

    def _check_position(self, position: Position) -> None:
        row, col = position
        if not (1 <= row <= self.order and 1 <= col <= self.order):
            raise EntryOutOfRangeError(
                f"position {position} outside a grid of order {self.order}"
            )

    def color_at(self, position: Position) -> Optional[ColorId]:
        self._check_position(position)
        color = int(self._cells[position[0] - 1, position[1] - 1])
        return None if color == EMPTY else color

    def is_empty(self, position: Position) -> bool:
        return self.color_at(position) is None

    def entries(self) -> list[tuple[Position, ColorId]]:
        """Colored cells in row-major order."""
        return [
            (Position(row + 1, col + 1), color)
            for row, line in enumerate(self._cells.tolist())
            for col, color in enumerate(line)
            if color != EMPTY
        ]

    def uncolored_cells(self) -> list[Position]:
        """Positions of all Empty cells in row-major order."""
        rows, cols = np.nonzero(self._cells == EMPTY)
        return [
            Position(int(row) + 1, int(col) + 1)
            for row, col in zip(rows, cols)
        ]

    @property
    def uncolored_count(self) -> int:
        return int(np.count_nonzero(self._cells == EMPTY))

    @property
    def colored_count(self) -> int:
        return self.order * self.order - self.uncolored_count

    def is_complete(self) -> bool:
        return self.uncolored_count == 0

    def to_rows(self) -> list[Row]:
        return [
            [None if color == EMPTY else color for color in line]
            for line in self._cells.tolist()
        ]

    def flat(self) -> list[int]:
        """Row-major cell list with 0 for Empty; the solver's working copy."""
        return self._cells.ravel().tolist()

    def row_colors(self, row: int) -> ColorSet:
        return ColorSet.from_bits(self._row_masks[row - 1])

    def col_colors(self, col: int) -> ColorSet:
        return ColorSet.from_bits(self._col_masks[col - 1])

    def available_mask(self, row: int, col: int) -> int:
        return full_mask(self.num_colors) & ~(
            self._row_masks[row - 1] | self._col_masks[col - 1]
        )

    def available_colors(self, position: Position) -> ColorSet:
        """
        Return a(i, j): the colors missing from the colored cells of
        u(i, j).

        Raises:
            CellAlreadyColoredError: If the cell is colored.
        """
        if not self.is_empty(position):
            raise CellAlreadyColoredError(f"cell {position} is colored")
        return ColorSet.from_bits(self.available_mask(*position))

    def row_col_union(self, position: Position) -> RowColUnion:
        self._check_position(position)
        return row_col_union(self.order, Position(*position))

    def with_color(
        self, position: Position, color: ColorId
    ) -> "PartialColoring":
        """Return a copy with one more colored cell."""
        if not self.is_empty(position):
            raise CellAlreadyColoredError(f"cell {position} is colored")
        grid = self._cells.copy()
        grid[position[0] - 1, position[1] - 1] = color
        return PartialColoring(grid, self.num_colors)

    def keep_only(self, positions: Iterable[Position]) -> "PartialColoring":
        """Return a copy where only the given cells stay colored."""
        grid = np.zeros_like(self._cells)
        for row, col in positions:
            grid[row - 1, col - 1] = self._cells[row - 1, col - 1]
        return PartialColoring(grid, self.num_colors)

    def permute(
        self, row_perm: Permutation, col_perm: Permutation
    ) -> "PartialColoring":
        """
        Move row r to row row_perm[r-1] and column c to column
        col_perm[c-1].

        Raises:
            NotAPermutationError: If either argument is not a bijection on
                1..n.
        """
        inverse_rows = _inverse(row_perm, self.order)
        inverse_cols = _inverse(col_perm, self.order)
        grid = self._cells[np.ix_(inverse_rows, inverse_cols)]
        return PartialColoring(grid, self.num_colors)

    def transpose(self) -> "PartialColoring":
        return PartialColoring(self._cells.T, self.num_colors)

    def relabel(
        self, color_map: Union[Mapping[int, int], Sequence[int]]
    ) -> "PartialColoring":
        """
        Recolor every cell through a bijection of 1..k, given either as a
        mapping or as a sequence whose (c-1)-th item is the image of c.

        Raises:
            NotAPermutationError: If the map is not a bijection on 1..k.
        """
        if isinstance(color_map, Mapping):
            images = [
                color_map.get(c, EMPTY)
                for c in range(1, self.num_colors + 1)
            ]
        else:
            images = list(color_map)
        if sorted(images) != list(range(1, self.num_colors + 1)):
            raise NotAPermutationError(
                f"{images} is not a bijection on 1..{self.num_colors}"
            )
        lookup = np.array([EMPTY] + images, dtype=np.int16)
        return PartialColoring(lookup[self._cells], self.num_colors)

    def sort_key(self) -> tuple[int, ...]:
        return tuple(self.flat())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialColoring):
            return NotImplemented
        return self.num_colors == other.num_colors and np.array_equal(
            self._cells, other._cells
        )

    def __hash__(self) -> int:
        return hash((self.num_colors, self._cells.tobytes()))

    def __repr__(self) -> str:
        return (
            f"PartialColoring(order={self.order}, "
            f"num_colors={self.num_colors}, uncolored={self.uncolored_count})"
        )

    def __str__(self) -> str:
        return "\n".join(
            " ".join("." if color is None else str(color) for color in row)
            for row in self.to_rows()
        )

    def __reduce__(self):
        return (PartialColoring, (self._cells.copy(), self.num_colors))


def _inverse(perm: Permutation, order: int) -> list[int]:
    """0-based inverse of a 1-based permutation."""
    values = list(perm)
    if sorted(values) != list(range(1, order + 1)):
        raise NotAPermutationError(
            f"{values} is not a permutation of 1..{order}"
        )
    inverse = [0] * order
    for source, target in enumerate(values):
        inverse[target - 1] = source
    return inverse


def new_partial(
    order: int,
    num_colors: int,
    entries: Iterable[tuple[Position, ColorId]],
) -> PartialColoring:
    """
    Build a proper partial coloring from explicit (position, color) pairs.

    Args:
        order (int): n, the side of the square.
        num_colors (int): k, the number of colors.
        entries: The colored cells; every other cell is Empty.

    Returns:
        PartialColoring: The coloring with exactly the given cells colored.

    Raises:
        DuplicateCellError: If a position is listed twice.
        EntryOutOfRangeError: If a position or color is out of range.
        RowClashError, ColClashError: If a line repeats a color.
    """
    _check_dimensions(order, num_colors)
    grid = np.zeros((order, order), dtype=np.int16)
    seen: set[tuple[int, int]] = set()
    for position, color in entries:
        row, col = position
        if not (1 <= row <= order and 1 <= col <= order):
            logger.error(f"Position {position} outside order {order}")
            raise EntryOutOfRangeError(f"position {position} out of range")
        if not 1 <= color <= num_colors:
            logger.error(f"Color {color} outside 1..{num_colors}")
            raise EntryOutOfRangeError(f"color {color} out of range")
        if (row, col) in seen:
            logger.error(f"Position {position} listed twice")
            raise DuplicateCellError(f"position {position} listed twice")
        seen.add((row, col))
        grid[row - 1, col - 1] = color
    return PartialColoring(grid, num_colors)


def available_colors(pc: PartialColoring, position: Position) -> ColorSet:
    return pc.available_colors(position)


def uncolored_cells(pc: PartialColoring) -> list[Position]:
    return pc.uncolored_cells()


def permute(
    pc: PartialColoring, row_perm: Permutation, col_perm: Permutation
) -> PartialColoring:
    return pc.permute(row_perm, col_perm)
