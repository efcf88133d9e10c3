"""Zero-dimensional monomial ideals and their correspondence with monomial semigroups.

An ideal of k[x_1, ..., x_d] is stored as the canonical set of exponent
vectors of its minimal monomial generators; the coefficient field plays no
role.  The unit ideal is the one generated by the zero vector.  Variable
indices in the public functions are 1-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    BadParameters,
    DimensionMismatch,
    HypothesisFailed,
    InvalidPoint,
    NotContained,
    NotMonomialSemigroup,
    NotZeroDimensional,
)
from .gns import Gns, Point, add, box, canonical, invariants, leq, minimal_generators, validate_hole_set
from .wilf import WilfReport


def minimalize(gens: Iterable[Sequence[int]]) -> tuple[Point, ...]:
    kept: list[Point] = []
    for g in canonical(gens):  # ascending degree: divisors come first
        if not any(leq(k, g) for k in kept):
            kept.append(g)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    vars: int
    gens: tuple[Point, ...]

    def __post_init__(self):
        if self.vars < 0:
            raise DimensionMismatch("number of variables must be non-negative")
        pts = []
        for g in self.gens:
            g = tuple(g)
            if len(g) != self.vars:
                raise DimensionMismatch(f"exponent vector {g} has length {len(g)}, expected {self.vars}")
            if any(not isinstance(v, int) or v < 0 for v in g):
                raise InvalidPoint(f"exponent vector {g} must be non-negative integers")
            pts.append(g)
        object.__setattr__(self, "gens", minimalize(pts))

    @classmethod
    def of(cls, vars: int, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return cls(vars, tuple(tuple(g) for g in gens))

    @classmethod
    def power_of_maximal(cls, vars: int, k: int) -> "MonomialIdeal":
        """All monomials of degree ``k``."""
        return cls(vars, tuple(p for p in box((k,) * vars) if sum(p) == k))

    @property
    def is_unit(self) -> bool:
        return (0,) * self.vars in self.gens

    def pure_powers(self) -> tuple[Optional[int], ...]:
        """Exponent ``a_i`` of the pure power of ``x_i`` among the generators, or ``None``."""
        out = []
        for i in range(self.vars):
            hits = [g[i] for g in self.gens if all(v == 0 for j, v in enumerate(g) if j != i)]
            out.append(min(hits) if hits else None)
        return tuple(out)

    @property
    def is_zero_dimensional(self) -> bool:
        return all(a is not None for a in self.pure_powers())

    def contains(self, mono: Sequence[int]) -> bool:
        return any(leq(g, mono) for g in self.gens)

    def __str__(self) -> str:
        names = "xyzw" if self.vars <= 4 else None

        def mono(g):
            if not any(g):
                return "1"
            parts = []
            for i, v in enumerate(g):
                if v:
                    n = names[i] if names else f"x{i + 1}"
                    parts.append(n if v == 1 else f"{n}^{v}")
            return "*".join(parts)

        return "<" + ", ".join(mono(g) for g in self.gens) + ">"


def _require_zero_dim(I: MonomialIdeal) -> tuple[int, ...]:
    a = I.pure_powers()
    if any(v is None for v in a):
        raise NotZeroDimensional(f"{I} has no pure power of some variable")
    return a  # type: ignore[return-value]


def _same_vars(A: MonomialIdeal, B: MonomialIdeal) -> None:
    if A.vars != B.vars:
        raise DimensionMismatch(f"ideals in {A.vars} and {B.vars} variables")


def standard_monomials(I: MonomialIdeal) -> frozenset:
    """Exponent vectors of the monomials outside ``I`` (the staircase)."""
    a = _require_zero_dim(I)
    return frozenset(m for m in box(tuple(v - 1 for v in a)) if not I.contains(m))


def length(I: MonomialIdeal) -> int:
    """ℓ(R/I)."""
    return len(standard_monomials(I))


def ideal_product(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    _same_vars(A, B)
    return MonomialIdeal(A.vars, tuple(add(a, b) for a in A.gens for b in B.gens))


def square(I: MonomialIdeal) -> MonomialIdeal:
    return ideal_product(I, I)


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    out = MonomialIdeal(I.vars, ((0,) * I.vars,))
    for _ in range(k):
        out = ideal_product(out, I)
    return out


def colon_by_variable(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """I : x_i.  Yields the unit ideal when ``x_i`` itself lies in ``I``."""
    if not 1 <= i <= I.vars:
        raise DimensionMismatch(f"variable {i} outside 1..{I.vars}")
    j = i - 1
    return MonomialIdeal(I.vars, tuple(g[:j] + (max(g[j] - 1, 0),) + g[j + 1:] for g in I.gens))


def eliminate_variable(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """(I + <x_i>) / <x_i> as an ideal in the remaining variables."""
    if not 1 <= i <= I.vars:
        raise DimensionMismatch(f"variable {i} outside 1..{I.vars}")
    j = i - 1
    return MonomialIdeal(I.vars - 1, tuple(g[:j] + g[j + 1:] for g in I.gens if g[j] == 0))


def contained_in(B: MonomialIdeal, A: MonomialIdeal) -> bool:
    """Whether ``B ⊆ A``."""
    _same_vars(A, B)
    return all(A.contains(b) for b in B.gens)


def length_of_quotient(A: MonomialIdeal, B: MonomialIdeal) -> int:
    """ℓ(A/B) for ``B ⊆ A`` with ``B`` zero-dimensional: the monomials in A but not in B."""
    _same_vars(A, B)
    if not contained_in(B, A):
        raise NotContained(f"{B} is not contained in {A}")
    return sum(1 for m in standard_monomials(B) if A.contains(m))


def ci_analysis(I: MonomialIdeal) -> tuple[bool, MonomialIdeal]:
    """``(is complete intersection, J)`` with ``J`` generated by the pure powers of ``I``."""
    a = _require_zero_dim(I)
    J = MonomialIdeal(I.vars, tuple(tuple(v if j == i else 0 for j in range(I.vars))
                                    for i, v in enumerate(a)))
    return J == I, J


def reduction_number(I: MonomialIdeal, J: MonomialIdeal, cap: int = 10) -> Optional[int]:
    """Smallest ``k <= cap`` with ``I^(k+1) = J I^k``, else ``None``."""
    _same_vars(I, J)
    if not contained_in(J, I):
        raise NotContained(f"{J} is not contained in {I}")
    Ik = MonomialIdeal(I.vars, ((0,) * I.vars,))
    for k in range(cap + 1):
        nxt = ideal_product(Ik, I)
        if nxt == ideal_product(J, Ik):
            return k
        Ik = nxt
    return None


def gns_to_ideal(S: Gns) -> MonomialIdeal:
    """The ideal whose monomials are the nonzero elements of a monomial semigroup."""
    inv = invariants(S)
    if S.genus and inv.n != 1:
        raise NotMonomialSemigroup(f"n(S) = {inv.n}, expected 1")
    return MonomialIdeal(S.dim, minimal_generators(S))


def ideal_to_gns(I: MonomialIdeal) -> Gns:
    """The semigroup ``{0} ∪ {exponents of monomials in I}``."""
    if I.vars < 1:
        raise DimensionMismatch("need at least one variable")
    if I.is_unit:
        raise BadParameters("the unit ideal does not correspond to a semigroup")
    std = standard_monomials(I)
    zero = (0,) * I.vars
    return validate_hole_set(I.vars, (m for m in std if m != zero))


def verify_monomial_wilf(I: MonomialIdeal) -> WilfReport:
    """ℓ(I/I²) against d·ℓ(R/I); equality must coincide with ``I`` being a complete intersection."""
    rhs = I.vars * length(I)
    lhs = length_of_quotient(I, square(I))
    is_ci, _ = ci_analysis(I)
    report = WilfReport.of(lhs, rhs, "monomial-wilf")
    if report.equality != is_ci:
        raise RuntimeError(f"equality case disagrees with complete-intersection test for {I}")
    return report


@dataclass(frozen=True)
class ColonReport:
    lhs: int  # ℓ(R̄/Ī)
    rhs: int  # ℓ((I:y)² / (I²:y))
    holds: bool
    product_identity: bool  # I² : y == I (I : y)


def verify_colon_inequality(I: MonomialIdeal, i: int) -> ColonReport:
    _require_zero_dim(I)
    bar = eliminate_variable(I, i)
    colon = colon_by_variable(I, i)
    sq_colon = colon_by_variable(square(I), i)
    lhs = length(bar)
    rhs = length_of_quotient(square(colon), sq_colon)
    return ColonReport(lhs, rhs, lhs <= rhs, sq_colon == ideal_product(I, colon))


@dataclass(frozen=True)
class ReductionSlackReport:
    slack: int  # ℓ(I/I²) - d ℓ(R/I)
    box_excess: int  # ℓ(R/J) - ℓ(R/I)
    box_volume: int  # ∏ a_i
    holds: bool


def verify_prop_ij(I: MonomialIdeal) -> ReductionSlackReport:
    """Check ``ℓ(I/I²) - d ℓ(R/I) = ℓ(R/J) - ℓ(R/I)`` when ``I² = I J``."""
    _, J = ci_analysis(I)
    if square(I) != ideal_product(I, J):
        raise HypothesisFailed(f"I^2 != I J for I = {I}")
    ell = length(I)
    slack = length_of_quotient(I, square(I)) - I.vars * ell
    vol = math.prod(_require_zero_dim(I))
    excess = length(J) - ell
    return ReductionSlackReport(slack, excess, vol, slack == excess == vol - ell)


def random_ideal(rng, vars: int, max_length: int, max_extra: int = 4) -> MonomialIdeal:
    """A random zero-dimensional monomial ideal with ℓ(R/I) at most ``max_length``."""
    while True:
        a = [rng.randint(1, max(1, max_length)) for _ in range(vars)]
        if math.prod(a) > 8 * max_length:
            continue
        gens = [tuple(v if j == i else 0 for j in range(vars)) for i, v in enumerate(a)]
        for _ in range(rng.randint(0, max_extra)):
            gens.append(tuple(rng.randint(0, v - 1) for v in a))
        gens = [g for g in gens if any(g)]
        I = MonomialIdeal(vars, tuple(gens))
        if I.is_zero_dimensional and not I.is_unit and length(I) <= max_length:
            return I


__all__ = [
    "MonomialIdeal", "minimalize", "standard_monomials", "length", "ideal_product", "square",
    "power", "colon_by_variable", "eliminate_variable", "contained_in", "length_of_quotient",
    "ci_analysis", "reduction_number", "gns_to_ideal", "ideal_to_gns", "verify_monomial_wilf",
    "verify_colon_inequality", "verify_prop_ij", "ColonReport", "ReductionSlackReport",
    "random_ideal",
]
