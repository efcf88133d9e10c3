"""Fixed-radix packing of lattice points into integers.

A point ``x`` of N^d is stored as ``sum(x[i] << (width * i))``.  The top bit
of each field is a guard bit that is always zero for a valid key, so
componentwise comparison becomes one subtraction (SWAR), and addition or
subtraction of comparable points is plain integer arithmetic.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def width_for_genus(genus: int) -> int:
    """Field width (including the guard bit) safe for every key the tree walk can produce.

    Holes of a genus-g semigroup satisfy ``h_i <= 2g - 1``, minimal generators
    ``x_i <= 2 M_i + 1 <= 4g - 1``; the walk forms sums of a new hole and a
    generator, or three times a hole, all bounded by ``6g + 3``.
    """
    return (6 * max(genus, 1) + 8).bit_length() + 1


class Packing:
    __slots__ = ("dim", "width", "cap", "guard", "field")

    def __init__(self, dim: int, width: int):
        if dim < 1 or width < 2:
            raise ValueError("dim >= 1 and width >= 2 required")
        self.dim = dim
        self.width = width
        self.cap = 1 << (width - 1)  # exclusive coordinate bound
        self.field = (1 << width) - 1
        self.guard = sum(self.cap << (width * i) for i in range(dim))

    @classmethod
    def for_points(cls, dim: int, points: Iterable[Sequence[int]], genus: int = 0) -> "Packing":
        top = 0
        for p in points:
            if p:
                top = max(top, max(p))
        width = max(width_for_genus(genus), (6 * top + 8).bit_length() + 1)
        return cls(dim, width)

    @property
    def total_bits(self) -> int:
        return self.dim * self.width

    def encode(self, point: Sequence[int]) -> int:
        key = 0
        w = self.width
        for i, v in enumerate(point):
            if not 0 <= v < self.cap:
                raise OverflowError(f"coordinate {v} does not fit in {w - 1} bits")
            key |= v << (w * i)
        return key

    def decode(self, key: int) -> tuple[int, ...]:
        w, f = self.width, self.field
        return tuple((key >> (w * i)) & f for i in range(self.dim))

    def unit(self, i: int) -> int:
        """Key of the 0-based unit vector e_i."""
        return 1 << (self.width * i)

    def le(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b | g) - a) & g == g

    def fits(self, key: int) -> bool:
        return key & self.guard == 0
