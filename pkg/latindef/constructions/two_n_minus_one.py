import numpy as np

from latindef._exceptions import ConstructionError, OddOrderError
from latindef.core.partial_coloring import PartialColoring


def residue(value: int, modulus: int) -> int:
    """Representative of value mod modulus in 1..modulus, 0 maps to modulus."""
    return value % modulus or modulus


def construct_2n_minus_1(n: int) -> PartialColoring:
    """
    Build the partial coloring of an n x n square, n even, that uniquely
    extends to L(n, 2n-1) with exactly n^2 - n colored cells.

    Below the diagonal, cell (i, j) with i != n gets i + j (mod n-1) and
    cell (n, j) gets 2j (mod n-1). Every cell (j, i) above the diagonal gets
    the color of (i, j) plus n. The diagonal is left Empty; each diagonal
    cell then sees every color except n.

    Args:
        n (int): The order; even and at least 2.

    Returns:
        PartialColoring: The coloring with k = 2n - 1.

    Raises:
        OddOrderError: If n is odd.
        ConstructionError: If n is smaller than 2.
    """
    if n % 2:
        raise OddOrderError(f"order must be even, got {n}")
    if n < 2:
        raise ConstructionError(f"order must be at least 2, got {n}")

    lower = np.zeros((n, n), dtype=np.int16)
    for i in range(2, n):
        for j in range(1, i):
            lower[i - 1, j - 1] = residue(i + j, n - 1)
    for j in range(1, n):
        lower[n - 1, j - 1] = residue(2 * j, n - 1)

    mirrored = lower.T
    grid = lower + np.where(mirrored > 0, mirrored + n, 0)
    return PartialColoring(grid, 2 * n - 1)
