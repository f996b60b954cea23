"""An immutable set of colors stored as the bits of an int."""

from collections.abc import Iterable, Iterator, Set
from typing import Any


class ColorSet(Set):
    """
    An immutable subset of the colors 1..k.

    Color c is stored as bit c of `bits` (bit 0 is never set), so membership,
    union and difference are single integer operations and the size is a
    population count.
    """

    __slots__ = ("bits",)

    def __init__(self, colors: Iterable[int] = ()) -> None:
        bits = 0
        for color in colors:
            if color < 1:
                raise ValueError(f"colors start at 1, got {color}")
            bits |= 1 << color
        self.bits: int = bits

    @classmethod
    def from_bits(cls, bits: int) -> "ColorSet":
        color_set = cls.__new__(cls)
        color_set.bits = bits & ~1
        return color_set

    @classmethod
    def full(cls, num_colors: int) -> "ColorSet":
        """Return {1..num_colors}."""
        return cls.from_bits(full_mask(num_colors))

    def __contains__(self, color: Any) -> bool:
        return (
            isinstance(color, int)
            and color > 0
            and bool(self.bits >> color & 1)
        )

    def __iter__(self) -> Iterator[int]:
        return iter(mask_colors(self.bits))

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ColorSet):
            return self.bits == other.bits
        return super().__eq__(other)

    def __hash__(self) -> int:
        return hash(self.bits)

    def __or__(self, other: Iterable[int]) -> "ColorSet":
        return ColorSet.from_bits(self.bits | _as_bits(other))

    def __and__(self, other: Iterable[int]) -> "ColorSet":
        return ColorSet.from_bits(self.bits & _as_bits(other))

    def __sub__(self, other: Iterable[int]) -> "ColorSet":
        return ColorSet.from_bits(self.bits & ~_as_bits(other))

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({list(self)})"

    def union(self, other: Iterable[int]) -> "ColorSet":
        return self | other

    def difference(self, other: Iterable[int]) -> "ColorSet":
        return self - other

    def is_singleton(self) -> bool:
        return self.bits.bit_count() == 1

    def only(self) -> int:
        """
        Return the single member of a singleton set.

        Raises:
            ValueError: If the set does not have exactly one member.
        """
        if not self.is_singleton():
            raise ValueError(f"{self!r} is not a singleton")
        return self.bits.bit_length() - 1


def full_mask(num_colors: int) -> int:
    """Bits 1..num_colors set."""
    return ((1 << num_colors) - 1) << 1


def mask_colors(bits: int) -> list[int]:
    """Colors of a mask in ascending order."""
    colors = []
    while bits:
        low = bits & -bits
        colors.append(low.bit_length() - 1)
        bits ^= low
    return colors


def _as_bits(other: Iterable[int]) -> int:
    if isinstance(other, ColorSet):
        return other.bits
    return ColorSet(other).bits
