class LatinSquareError(Exception):
    """
    Base class for every error raised by latindef.
    """

    pass


class ImproperColoringError(LatinSquareError):
    """
    Custom exception class for partial colorings that break the rainbow
    row/column rule or reference cells and colors outside the grid.
    """

    pass


class DuplicateCellError(ImproperColoringError):
    pass


class RowClashError(ImproperColoringError):
    """
    Two colored cells of the same row share a color.
    """

    pass


class ColClashError(ImproperColoringError):
    """
    Two colored cells of the same column share a color.
    """

    pass


class EntryOutOfRangeError(ImproperColoringError):
    pass


class CellAlreadyColoredError(LatinSquareError):
    pass


class NotAPermutationError(LatinSquareError):
    pass


class NotFullyColoredError(LatinSquareError):
    pass


class WrongColorCountError(LatinSquareError):
    pass


class GridParseError(LatinSquareError):
    pass


class ConstructionError(LatinSquareError):
    pass


class OddOrderError(ConstructionError):
    pass


class NotMultipleOfTenError(ConstructionError):
    pass


class UnsupportedConstructionError(ConstructionError):
    pass


class BudgetExceededError(LatinSquareError):
    """
    Custom exception class for searches whose estimated work is larger than
    the configured budget. Raised before any work is done.
    """

    pass
