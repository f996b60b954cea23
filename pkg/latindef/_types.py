from collections.abc import Sequence
from typing import Optional

import numpy as np
from numpy.typing import NDArray

ColorId = int
Grid = NDArray[np.int16]
Permutation = Sequence[int]
Row = list[Optional[int]]

__all__ = [
    "ColorId",
    "Grid",
    "Permutation",
    "Row",
]
