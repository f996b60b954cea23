from enum import Enum


class ValueSource(Enum):
    KNOWN = "known"
    COMPUTED = "computed"
