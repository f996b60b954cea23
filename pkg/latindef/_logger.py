import logging
from collections.abc import Callable
from typing import Any, Optional

from latindef._config import load_settings

LOGGER_NAME = "latindef"


class LoggerProxy:
    """
    Stands in for the library logger until one is needed, so that
    applications can install their own with `set_logger` before the solver
    or the search first log anything.
    """

    def __init__(self) -> None:
        self._logger: Optional[Any] = None

    def set_logger(self, logger: Any) -> None:
        self._logger = logger

    def _add_default_logger(self) -> None:
        logging.basicConfig()
        default = logging.getLogger(LOGGER_NAME)
        level = logging.getLevelName(load_settings().log_level)
        if isinstance(level, int):
            default.setLevel(level)
        self._logger = default

    def __getattr__(self, name: str) -> Callable:
        if self._logger is None:
            self._add_default_logger()
        return getattr(self._logger, name)


logger = LoggerProxy()


def set_logger(custom_logger: Any) -> None:
    """
    Set the logger for the entire library.

    Args:
        custom_logger: The logger object to be used by the solver, the
            search and the command line alike. Without one, the
            "latindef" logger at LATINDEF_LOG_LEVEL is used.
    """
    logger.set_logger(custom_logger)
