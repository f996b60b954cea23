from dataclasses import dataclass

import numpy as np

from latindef._exceptions import ConstructionError, NotMultipleOfTenError
from latindef._types import Grid
from latindef.constructions.five_eight import construct_five_eight
from latindef.constructions.two_n_minus_one import construct_2n_minus_1
from latindef.core.partial_coloring import PartialColoring

BLOCK = 5
SEED_COLORS = 8


@dataclass(frozen=True)
class ColorCorrespondence:
    """
    Maps each color 1..2m-1 of the m x m base square (m = n/5) to the
    ascending colors of [2n-2] that replace it: eight colors for m, five for
    every other base color.
    """

    order: int
    images: dict[int, tuple[int, ...]]

    @property
    def base_order(self) -> int:
        return self.order // BLOCK

    def __getitem__(self, base_color: int) -> tuple[int, ...]:
        return self.images[base_color]

    def validate(self) -> None:
        """
        Raises:
            ConstructionError: If the images overlap, miss a color of
                [2n-2] or the image of m is not {1..8}.
        """
        seen: set[int] = set()
        for base_color, image in self.images.items():
            if seen.intersection(image):
                raise ConstructionError(
                    f"image of {base_color} overlaps an earlier image"
                )
            seen.update(image)
        if seen != set(range(1, 2 * self.order - 1)):
            raise ConstructionError(
                f"images do not cover 1..{2 * self.order - 2}"
            )
        if self.images[self.base_order] != tuple(range(1, SEED_COLORS + 1)):
            raise ConstructionError("image of n/5 must be 1..8")


def _check_order(n: int) -> None:
    if n <= 0 or n % 10:
        raise NotMultipleOfTenError(
            f"order must be a positive multiple of 10, got {n}"
        )


def make_correspondence(n: int) -> ColorCorrespondence:
    """
    Build the correspondence f for an order n divisible by 10.

    Raises:
        NotMultipleOfTenError: If n is not a positive multiple of 10.
    """
    _check_order(n)
    m = n // BLOCK
    images = {}
    for base_color in range(1, 2 * m):
        if base_color == m:
            images[base_color] = tuple(range(1, SEED_COLORS + 1))
            continue
        # Colors above m skip the slot m would have taken.
        slot = base_color - 1 if base_color < m else base_color - 2
        start = SEED_COLORS + BLOCK * slot
        images[base_color] = tuple(range(start + 1, start + BLOCK + 1))
    correspondence = ColorCorrespondence(order=n, images=images)
    correspondence.validate()
    return correspondence


def cyclic_block(colors: tuple[int, ...]) -> Grid:
    """5 x 5 block whose r-th row is `colors` rotated left by r."""
    return np.array(
        [np.roll(colors, -shift) for shift in range(BLOCK)], dtype=np.int16
    )


def base_square(m: int) -> Grid:
    """
    The m x m square over 2m-1 colors that the blocks are lifted from: the
    transpose of the 2n-1 construction with its diagonal colored m.
    """
    base = construct_2n_minus_1(m).transpose().cells.copy()
    np.fill_diagonal(base, m)
    return base


def construct_block_ten_m(n: int) -> PartialColoring:
    """
    Build the partial coloring of an n x n square, 10 | n, with 8n/5 Empty
    cells that uniquely extends to L(n, 2n-2).

    The square is cut into 5 x 5 blocks indexed by the cells of the base
    square. A block whose base color is c != n/5 is the cyclic block over
    f(c); the blocks on the diagonal repeat the 5 x 5 construction for
    L(5, 8), Empty cells included.

    Args:
        n (int): The order, a positive multiple of 10.

    Returns:
        PartialColoring: The coloring with k = 2n - 2.

    Raises:
        NotMultipleOfTenError: If n is not a positive multiple of 10.
    """
    _check_order(n)
    correspondence = make_correspondence(n)
    m = n // BLOCK
    base = base_square(m)
    seed = construct_five_eight().cells

    grid = np.zeros((n, n), dtype=np.int16)
    for block_row in range(m):
        for block_col in range(m):
            if block_row == block_col:
                block = seed
            else:
                base_color = int(base[block_row, block_col])
                block = cyclic_block(correspondence[base_color])
            rows = slice(BLOCK * block_row, BLOCK * (block_row + 1))
            cols = slice(BLOCK * block_col, BLOCK * (block_col + 1))
            grid[rows, cols] = block
    return PartialColoring(grid, 2 * n - 2)
