from dataclasses import dataclass, field
from typing import Any

from latindef.core.color_set import ColorSet
from latindef.core.partial_coloring import Position
from latindef.patterns._enums import Orientation, PatternKind


def _distinct(values: list[int]) -> list[int]:
    return list(dict.fromkeys(values))


@dataclass(frozen=True)
class PatternWitness:
    """
    A forbidden configuration found in a partial coloring.

    `positions` lists the cells realizing the pattern in the order the
    detector matched them; `available_sets` is parallel to the first
    positions for chain patterns and empty otherwise.
    """

    pattern: PatternKind
    positions: tuple[Position, ...]
    available_sets: tuple[ColorSet, ...] = field(default_factory=tuple)
    orientation: Orientation = Orientation.ROW_FORM

    @property
    def rows(self) -> list[int]:
        """Rows used, in order of first appearance."""
        return _distinct([position.row for position in self.positions])

    @property
    def cols(self) -> list[int]:
        return _distinct([position.col for position in self.positions])

    def to_dict(self) -> dict[str, Any]:
        return {
            "pattern": self.pattern.value,
            "orientation": self.orientation.value,
            "positions": [list(position) for position in self.positions],
            "rows": self.rows,
            "columns": self.cols,
            "available_sets": [
                sorted(colors) for colors in self.available_sets
            ],
        }

    def __str__(self) -> str:
        cells = " ".join(str(position) for position in self.positions)
        text = f"{self.pattern.value} [{self.orientation.value}] {cells}"
        if self.available_sets:
            sets = " ".join(
                "{" + ",".join(map(str, sorted(colors))) + "}"
                for colors in self.available_sets
            )
            text += f" available {sets}"
        return text
