from enum import Enum, IntEnum


class ExitCode(IntEnum):
    OK = 0
    ASSERTION_FAILED = 1
    USAGE = 2
    PARSE_ERROR = 3
    IMPROPER_INPUT = 4
    BUDGET = 5


class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"
