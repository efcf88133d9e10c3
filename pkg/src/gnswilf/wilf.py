"""Generalized and Extended Wilf checks, plus the families that attain or satisfy them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import BadParameters, InvalidNumericalSemigroup
from .gns import (
    Gns,
    Point,
    box,
    canonical,
    classify,
    invariants,
    minimal_generators,
    semigroup_from_generators,
    validate_hole_set,
)
from .orders import MonomialOrder
from .thickening import thicken_iterated


@dataclass(frozen=True)
class WilfReport:
    lhs: int
    rhs: int
    holds: bool
    equality: bool
    slack: int
    context: str

    @classmethod
    def of(cls, lhs: int, rhs: int, context: str) -> "WilfReport":
        return cls(lhs, rhs, lhs >= rhs, lhs == rhs, lhs - rhs, context)


def generalized_wilf(S: Gns) -> WilfReport:
    """``e(S) n(S) >= d c(S)``."""
    inv = invariants(S)
    return WilfReport.of(inv.e * inv.n, S.dim * inv.c, "generalized")


def order_frobenius(S: Gns, order: MonomialOrder) -> tuple[Point, int]:
    """``(Fb, n_order)``: the ``order``-largest hole and the number of elements of S before it.

    For N^d the largest hole is the all-(-1) sentinel and the count is 0.
    Every hole other than Fb precedes it, so the count is the number of
    lattice points before Fb minus ``g - 1``.
    """
    if order.dim != S.dim:
        raise BadParameters(f"order of dimension {order.dim} for a semigroup of dimension {S.dim}")
    if S.genus == 0:
        return (-1,) * S.dim, 0
    fb = max(S.holes, key=order.key)
    return fb, order.count_preceding(fb) - (S.genus - 1)


def extended_wilf(S: Gns, order: MonomialOrder, strict: bool = False) -> WilfReport:
    """``n_order e >= n_order + g`` (the number of points up to Fb).

    ``strict=True`` adds one to the right-hand side, the variant under which
    the classical d = 1 statement is not recovered.
    """
    _, n_ord = order_frobenius(S, order)
    e = len(minimal_generators(S))
    rhs = n_ord + S.genus + (1 if strict else 0)
    return WilfReport.of(n_ord * e, rhs, f"extended{'-strict' if strict else ''}:{order.name}")


def make_ordinary(f: Sequence[int]) -> Gns:
    """``{0} ∪ (N^d minus the box below f)``."""
    f = tuple(f)
    if not f:
        raise BadParameters("f must have at least one coordinate")
    zero = (0,) * len(f)
    return validate_hole_set(len(f), (x for x in box(f) if x != zero))


def _e(dim: int, i: int, scale: int = 1) -> list[int]:
    v = [0] * dim
    v[i - 1] = scale
    return v


def family_axis_generators(d: int, i: int, k: int, h: int) -> tuple[Point, ...]:
    """Generators {e_j (j != i), 2e_i, 3e_i, e_i + h e_k} ∪ {e_i + e_j : j != i, k}."""
    gens = [tuple(_e(d, j)) for j in range(1, d + 1) if j != i]
    gens += [tuple(_e(d, i, 2)), tuple(_e(d, i, 3))]
    v = _e(d, i)
    v[k - 1] = h
    gens.append(tuple(v))
    for j in range(1, d + 1):
        if j not in (i, k):
            w = _e(d, i)
            w[j - 1] = 1
            gens.append(tuple(w))
    return canonical(gens)


def make_family_axis(d: int, i: int, k: int, h: int) -> Gns:
    """Holes ``e_i + j e_k`` for ``0 <= j < h``; cross-checked against the generator list."""
    if d < 2 or i == k or h <= 1 or not (1 <= i <= d and 1 <= k <= d):
        raise BadParameters(f"need d >= 2, distinct i, k in 1..d and h > 1 (got {d}, {i}, {k}, {h})")
    holes = []
    for j in range(h):
        v = _e(d, i)
        v[k - 1] = j
        holes.append(tuple(v))
    S = validate_hole_set(d, holes)
    if minimal_generators(S) != family_axis_generators(d, i, k, h):
        raise RuntimeError("hole set and generator list of the axis family disagree")
    return S


def numerical_semigroup_gaps_valid(gaps: Sequence[int]) -> bool:
    gs = set(gaps)
    if 0 in gs or any(g < 0 for g in gs):
        return False
    return all(a in gs or (g - a) in gs for g in gs for a in range(1, g))


def make_family_box(q_gaps: Sequence[int], j: int, q: Sequence[int]) -> Gns:
    """Holes ``x`` with ``x_j`` a gap of Q and ``x_i <= q_i`` on every other axis.

    ``q`` lists the bounds for the axes other than ``j`` in increasing order;
    ``j`` is 1-based in N^(1 + len(q)).
    """
    gaps = sorted(set(q_gaps))
    if not numerical_semigroup_gaps_valid(gaps):
        raise InvalidNumericalSemigroup(f"{gaps} is not the gap set of a numerical semigroup")
    d = 1 + len(q)
    if not 1 <= j <= d or any(v < 0 for v in q):
        raise BadParameters(f"axis {j} outside 1..{d} or negative bound in {q}")
    others = [i for i in range(1, d + 1) if i != j]
    holes = []
    for gap in gaps:
        for rest in box(tuple(q)):
            x = [0] * d
            x[j - 1] = gap
            for axis, v in zip(others, rest):
                x[axis - 1] = v
            holes.append(tuple(x))
    return validate_hole_set(d, holes)


def family_box_as_thickening(q_gaps: Sequence[int], j: int, q: Sequence[int]) -> Gns:
    """The same semigroup built as iterated thickenings of Q along the other axes."""
    Q = validate_hole_set(1, [(g,) for g in q_gaps])
    d = 1 + len(q)
    others = [i for i in range(1, d + 1) if i != j]
    return thicken_iterated(Q, list(zip(others, q)))


def numerical_gaps(a: int, b: int) -> list[int]:
    """Gaps of the numerical semigroup <a, b> (coprime, > 1)."""
    F = a * b - a - b
    inside = {x * a + y * b for x in range(b + 1) for y in range(a + 1)}
    return [n for n in range(1, F + 1) if n not in inside]


def family_e2d_generators(d: int, i: int, a: int, b: int, h: Sequence[int]) -> tuple[Point, ...]:
    others = [j for j in range(1, d + 1) if j != i]
    gens = [tuple(_e(d, j)) for j in others]
    gens += [tuple(_e(d, i, a)), tuple(_e(d, i, b))]
    for j, hj in zip(others, h):
        v = _e(d, i)
        v[j - 1] = hj
        gens.append(tuple(v))
    return canonical(gens)


def make_family_e2d(d: int, i: int, a: int, b: int, h: Sequence[int]) -> Gns:
    """The GNS spanned by {e_j (j != i), a e_i, b e_i, e_i + h_j e_j}.

    For ``a = 2`` the hole set is checked against the product formula over
    the gaps of <2, b> and the result must be symmetric; for ``a > 2`` it
    must fail to be Frobenius.
    """
    h = tuple(h)
    if d < 1 or not 1 <= i <= d or len(h) != d - 1 or any(v < 1 for v in h):
        raise BadParameters(f"need 1 <= i <= d and d - 1 positive entries in h (got {h})")
    if not (1 < a < b) or math.gcd(a, b) != 1:
        raise BadParameters(f"need 1 < a < b coprime (got {a}, {b})")
    S = semigroup_from_generators(d, family_e2d_generators(d, i, a, b, h))
    cls = classify(S)
    if a == 2:
        others = [j for j in range(1, d + 1) if j != i]
        expected = set()
        for gap in numerical_gaps(2, b):
            for ls in box(tuple(v - 1 for v in h)):
                x = [0] * d
                x[i - 1] = gap
                for j, l in zip(others, ls):
                    x[j - 1] = l
                expected.add(tuple(x))
        if set(S.holes) != expected or not cls.is_symmetric:
            raise RuntimeError(f"a = 2 family member {S!r} is not the expected symmetric GNS")
    elif cls.frobenius_element is not None:
        raise RuntimeError(f"a > 2 family member {S!r} is unexpectedly Frobenius")
    return S


def frobenius_report(S: Gns) -> Optional[WilfReport]:
    """``e n >= d ∏(f_i + 1)`` for a Frobenius GNS, ``None`` otherwise."""
    f = classify(S).frobenius_element
    if f is None:
        return None
    inv = invariants(S)
    return WilfReport.of(inv.e * inv.n, S.dim * math.prod(v + 1 for v in f), "frobenius")
