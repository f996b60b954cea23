from latindef.search._enums import ValueSource
from latindef.search.canonical import (
    canonical_form,
    canonical_representatives,
    is_reduced,
    iter_all_squares,
    iter_reduced_squares,
    relabel_by_first_appearance,
)
from latindef.search.defining_number import (
    SearchOptions,
    SearchResult,
    defining_number,
    estimate_work,
    known_defining_number,
    min_defining_set_for_square,
)

__all__ = [
    "SearchOptions",
    "SearchResult",
    "ValueSource",
    "canonical_form",
    "canonical_representatives",
    "defining_number",
    "estimate_work",
    "is_reduced",
    "iter_all_squares",
    "iter_reduced_squares",
    "known_defining_number",
    "min_defining_set_for_square",
    "relabel_by_first_appearance",
]
