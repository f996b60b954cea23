from typing import Optional

from latindef._exceptions import WrongColorCountError
from latindef._logger import logger
from latindef.core.partial_coloring import PartialColoring


def uncolored_limit(order: int, num_colors: int) -> Optional[int]:
    """
    The most Empty cells a uniquely extendable coloring of L(n, k) can have,
    where it is known.

    Returns:
        Optional[int]: 0 for k > 2n-1, n for k = 2n-1, floor(8n/5) for
            k = 2n-2, otherwise None.
    """
    if num_colors > 2 * order - 1:
        return 0
    if num_colors == 2 * order - 1:
        return order
    if num_colors == 2 * order - 2:
        return 8 * order // 5
    return None


def check_uncolored_bound(pc: PartialColoring) -> bool:
    """
    Check that a coloring for L(n, 2n-2) has at most floor(8n/5) Empty
    cells.

    Raises:
        WrongColorCountError: If k is not 2n-2.
    """
    if pc.num_colors != 2 * pc.order - 2:
        logger.error(
            f"Uncolored bound needs k = {2 * pc.order - 2}, "
            f"got {pc.num_colors}"
        )
        raise WrongColorCountError(
            f"bound applies to k = 2n-2 = {2 * pc.order - 2}, "
            f"got k = {pc.num_colors}"
        )
    return pc.uncolored_count <= 8 * pc.order // 5
