from ._logger import logger, set_logger
from .constructions import construct
from .core import PartialColoring, parse_grid
from .search import defining_number
from .solver import count_extensions
from .VERSION import __version__

__version__ = __version__
__all__ = [
    "PartialColoring",
    "construct",
    "count_extensions",
    "defining_number",
    "logger",
    "parse_grid",
    "set_logger",
]
