from latindef.patterns._enums import Orientation, PatternKind
from latindef.patterns.bounds import check_uncolored_bound, uncolored_limit
from latindef.patterns.detectors import (
    DETECTORS,
    detect_all,
    detect_config2,
    detect_lemma3_chain,
    detect_rectangle,
    detect_three_in_line,
)
from latindef.patterns.pattern_witness import PatternWitness

__all__ = [
    "DETECTORS",
    "Orientation",
    "PatternKind",
    "PatternWitness",
    "check_uncolored_bound",
    "detect_all",
    "detect_config2",
    "detect_lemma3_chain",
    "detect_rectangle",
    "detect_three_in_line",
    "uncolored_limit",
]
