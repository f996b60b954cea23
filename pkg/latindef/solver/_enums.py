from enum import Enum


class Verdict(Enum):
    NONE = "none"
    UNIQUE = "unique"
    MULTIPLE = "multiple"
    ABORTED = "aborted"


class PropagationStatus(Enum):
    FIXPOINT = "fixpoint"
    CONTRADICTION = "contradiction"


class TraceReason(Enum):
    FORCED_SINGLETON = "forced-singleton"
