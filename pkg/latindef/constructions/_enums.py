from enum import Enum


class ConstructionKind(Enum):
    TWO_N_MINUS_ONE = "two-n-minus-one"
    FIVE_EIGHT = "five-eight"
    BLOCK_TEN_M = "block-ten-m"
