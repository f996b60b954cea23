from collections.abc import Callable
from typing import Optional

import numpy as np

from latindef.core.color_set import full_mask
from latindef.core.partial_coloring import EMPTY, PartialColoring

StepCallback = Callable[[int, int, int], None]


class Board:
    """
    Mutable working copy of a partial coloring used by the search.

    Cells are addressed by their row-major index. Row and column used-color
    masks are updated on every assignment so availability is two ORs and a
    mask.
    """

    __slots__ = (
        "order",
        "num_colors",
        "cells",
        "row_masks",
        "col_masks",
        "_full",
    )

    def __init__(self, pc: PartialColoring) -> None:
        self.order: int = pc.order
        self.num_colors: int = pc.num_colors
        self.cells: list[int] = pc.flat()
        self.row_masks: list[int] = [
            pc.row_colors(row).bits for row in range(1, pc.order + 1)
        ]
        self.col_masks: list[int] = [
            pc.col_colors(col).bits for col in range(1, pc.order + 1)
        ]
        self._full: int = full_mask(pc.num_colors)

    def empty_indices(self) -> list[int]:
        return [i for i, color in enumerate(self.cells) if color == EMPTY]

    def available(self, index: int) -> int:
        row, col = divmod(index, self.order)
        return self._full & ~(self.row_masks[row] | self.col_masks[col])

    def assign(self, index: int, color: int) -> None:
        row, col = divmod(index, self.order)
        bit = 1 << color
        self.cells[index] = color
        self.row_masks[row] |= bit
        self.col_masks[col] |= bit

    def unassign(self, index: int) -> None:
        row, col = divmod(index, self.order)
        bit = ~(1 << self.cells[index])
        self.cells[index] = EMPTY
        self.row_masks[row] &= bit
        self.col_masks[col] &= bit

    def undo(self, trail: list[int]) -> None:
        while trail:
            self.unassign(trail.pop())

    def propagate(
        self, trail: list[int], on_step: Optional[StepCallback] = None
    ) -> Optional[int]:
        """
        Color forced cells pass by pass until a fixpoint.

        Each pass first collects every Empty cell with exactly one
        available color, then colors them in row-major order. Assigned
        indices are pushed on `trail` so the caller can undo them.

        Args:
            trail (list[int]): Receives the indices colored here.
            on_step: Called with (index, color, pass number) per coloring.

        Returns:
            Optional[int]: None at a fixpoint, otherwise the index of a cell
                left with no available color.
        """
        pass_number = 0
        while True:
            forced = []
            for index in self.empty_indices():
                mask = self.available(index)
                if not mask:
                    return index
                if not mask & (mask - 1):
                    forced.append((index, mask))
            if not forced:
                return None
            pass_number += 1
            for index, mask in forced:
                if not self.available(index) & mask:
                    return index
                color = mask.bit_length() - 1
                self.assign(index, color)
                trail.append(index)
                if on_step is not None:
                    on_step(index, color, pass_number)

    def most_constrained(self) -> Optional[int]:
        """Empty cell with the fewest available colors, row-major ties."""
        best, best_size = None, self.num_colors + 1
        for index in self.empty_indices():
            size = self.available(index).bit_count()
            if size < best_size:
                best, best_size = index, size
        return best

    def first_empty(self) -> Optional[int]:
        for index, color in enumerate(self.cells):
            if color == EMPTY:
                return index
        return None

    def to_coloring(self) -> PartialColoring:
        grid = np.array(self.cells, dtype=np.int16).reshape(
            self.order, self.order
        )
        return PartialColoring(grid, self.num_colors)
