from typing import Optional, Union

from latindef._exceptions import ConstructionError
from latindef._logger import logger
from latindef.constructions._enums import ConstructionKind
from latindef.constructions.block_ten_m import (
    ColorCorrespondence,
    construct_block_ten_m,
    cyclic_block,
    make_correspondence,
)
from latindef.constructions.construction_spec import ConstructionSpec
from latindef.constructions.five_eight import (
    FIVE_EIGHT_ROWS,
    construct_five_eight,
)
from latindef.constructions.two_n_minus_one import construct_2n_minus_1
from latindef.core.partial_coloring import PartialColoring

__all__ = [
    "FIVE_EIGHT_ROWS",
    "ColorCorrespondence",
    "ConstructionKind",
    "ConstructionSpec",
    "build_construction",
    "construct",
    "construct_2n_minus_1",
    "construct_block_ten_m",
    "construct_five_eight",
    "cyclic_block",
    "make_correspondence",
]


def build_construction(spec: ConstructionSpec) -> PartialColoring:
    """
    Generate the partial coloring a ConstructionSpec describes.

    Args:
        spec (ConstructionSpec): The kind and order to build.

    Returns:
        PartialColoring: The construction.

    Raises:
        ConstructionError: If the order does not suit the kind.
    """
    try:
        spec.validate()
    except ConstructionError as e:
        logger.error(f"Invalid construction {spec}: {e}")
        raise

    match spec.kind:
        case ConstructionKind.TWO_N_MINUS_ONE:
            pc = construct_2n_minus_1(spec.order)
        case ConstructionKind.FIVE_EIGHT:
            pc = construct_five_eight()
        case ConstructionKind.BLOCK_TEN_M:
            pc = construct_block_ten_m(spec.order)
    logger.debug(
        f"Built {spec.kind.value} of order {pc.order} with "
        f"{pc.uncolored_count} Empty cells"
    )
    return pc


def construct(
    kind: Union[ConstructionKind, str], n: Optional[int] = None
) -> PartialColoring:
    """
    A convenience function that accepts the kind by name
    ("two-n-minus-one", "five-eight" or "block-ten-m").
    """
    return build_construction(ConstructionSpec(ConstructionKind(kind), n))
