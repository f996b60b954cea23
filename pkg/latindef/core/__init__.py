from latindef.core.color_set import ColorSet
from latindef.core.grid_format import (
    format_grid,
    parse_grid,
    read_grid,
    write_grid,
)
from latindef.core.partial_coloring import (
    PartialColoring,
    Position,
    RowColUnion,
    available_colors,
    new_partial,
    permute,
    row_col_union,
    uncolored_cells,
)

__all__ = [
    "ColorSet",
    "PartialColoring",
    "Position",
    "RowColUnion",
    "available_colors",
    "format_grid",
    "new_partial",
    "parse_grid",
    "permute",
    "read_grid",
    "row_col_union",
    "uncolored_cells",
    "write_grid",
]
