"""k-thickenings of a GNS along a new axis, and their iterates.

Axis indices are 1-based positions in the enlarged ambient space; the
coordinates of the original semigroup fill the remaining positions in order.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import BadParameters, DimensionMismatch, RepeatedAxis
from .gns import Gns, Point, add, canonical, fundamental_holes, minimal_generators, validate_hole_set


def _insert(x: Sequence[int], pos: int, value: int) -> Point:
    """Insert ``value`` at 0-based ``pos``."""
    return tuple(x[:pos]) + (value,) + tuple(x[pos:])


def thicken(S: Gns, axis: int, k: int) -> Gns:
    """T_k(S, axis): k+1 stacked copies of S along ``axis``, everything beyond filled in."""
    if not 1 <= axis <= S.dim + 1:
        raise DimensionMismatch(f"axis {axis} outside 1..{S.dim + 1}")
    if k < 0:
        raise BadParameters("k must be non-negative")
    holes = [_insert(h, axis - 1, j) for j in range(k + 1) for h in S.holes]
    return validate_hole_set(S.dim + 1, holes)


def thickening_generators(S: Gns, axis: int, k: int) -> tuple[Point, ...]:
    """Generator set predicted for T_k(S, axis): ``{e_i} ∪ G(S) ∪ ((k+1) e_i + M(S)*)``."""
    pos = axis - 1
    e_i = _insert((0,) * S.dim, pos, 1)
    out = [e_i]
    out += [_insert(g, pos, 0) for g in minimal_generators(S)]
    out += [_insert(m, pos, k + 1) for m in fundamental_holes(S)]
    return canonical(out)


def thicken_iterated(S: Gns, steps: Iterable[tuple[int, int]]) -> Gns:
    """Thicken along every ``(axis, k)`` in ``steps``.

    Axes are positions in the final ambient space N^(d+t).  Each step is
    applied to the current semigroup, with the axis translated to its
    position among the coordinates present at that moment.
    """
    steps = [(int(a), int(k)) for a, k in steps]
    final_dim = S.dim + len(steps)
    axes_ = [a for a, _ in steps]
    if len(set(axes_)) != len(axes_):
        raise RepeatedAxis(f"repeated axis in {axes_}")
    for a in axes_:
        if not 1 <= a <= final_dim:
            raise DimensionMismatch(f"axis {a} outside 1..{final_dim}")
    step_axes = set(axes_)
    present = {p for p in range(1, final_dim + 1) if p not in step_axes}
    out = S
    for a, k in steps:
        position = sum(1 for p in present if p < a) + 1
        out = thicken(out, position, k)
        present.add(a)
    return out


def embed(S: Gns, axes_: Iterable[int]) -> Gns:
    """0-thickening along each of ``axes_`` (the inverse of restriction to the span of the holes)."""
    return thicken_iterated(S, [(a, 0) for a in sorted(axes_)])
