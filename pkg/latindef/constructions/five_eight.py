from latindef.core.partial_coloring import PartialColoring

FIVE_EIGHT_ROWS = (
    (None, None, 7, 8, 4),
    (3, None, None, 1, 8),
    (2, 6, 5, 7, None),
    (5, 7, 6, None, None),
    (6, 5, 2, None, 3),
)


def construct_five_eight() -> PartialColoring:
    """
    The 5 x 5 coloring with 8 Empty cells that uniquely extends to L(5, 8).
    """
    return PartialColoring.from_rows(FIVE_EIGHT_ROWS, 8)
