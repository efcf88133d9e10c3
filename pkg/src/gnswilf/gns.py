"""Generalized numerical semigroups represented by their finite hole set.

A GNS ``S`` of N^d is stored as the dimension plus the canonical (graded
lexicographic, ascending) tuple of its holes.  All invariants are derived on
demand and memoized on the instance; instances are immutable and may be
shared freely between threads and processes.
"""

from __future__ import annotations

import itertools
import math
import sys
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import BadParameters, DimensionMismatch, InvalidPoint, NotClosed, ZeroIsHole
from .kernels import backend_for
from .packing import Packing

Point = tuple[int, ...]


def grlex_key(p: Sequence[int]):
    """Sort key of the canonical order: total degree, then lexicographic with x1 first."""
    return (sum(p), tuple(p))


def canonical(points: Iterable[Sequence[int]]) -> tuple[Point, ...]:
    return tuple(sorted({tuple(p) for p in points}, key=grlex_key))


def leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def add(a: Sequence[int], b: Sequence[int]) -> Point:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> Point:
    return tuple(x - y for x, y in zip(a, b))


def box(x: Sequence[int]):
    """Every point ``y <= x`` componentwise, ``0`` and ``x`` included."""
    return itertools.product(*(range(v + 1) for v in x))


def box_size(x: Sequence[int]) -> int:
    return math.prod(v + 1 for v in x)


def unit(dim: int, i: int) -> Point:
    """0-based unit vector."""
    return tuple(1 if j == i else 0 for j in range(dim))


@dataclass(frozen=True)
class InvariantRecord:
    e: int
    g: int
    n: int
    c: int
    m: int


@dataclass(frozen=True)
class Classification:
    frobenius_element: Optional[Point]
    is_symmetric: bool
    is_pseudo_symmetric: bool
    is_irreducible: bool
    is_ordinary: bool
    is_monomial: bool
    has_minimal_multiplicity: bool
    pf: frozenset = field(default_factory=frozenset)
    eh: frozenset = field(default_factory=frozenset)
    span_rank: int = 0
    axes: frozenset = field(default_factory=frozenset)


class Gns:
    """A validated generalized numerical semigroup.

    Build instances with :func:`validate_hole_set` (or :meth:`Gns.full` for
    N^d); the constructor trusts its input.
    """

    __slots__ = ("dim", "holes", "hole_set", "bounds", "_cache")

    def __init__(self, dim: int, holes: Iterable[Sequence[int]], *, _trusted: bool = False):
        if not _trusted:
            raise TypeError("use validate_hole_set() to build a Gns")
        self.dim = dim
        self.holes = canonical(holes)
        self.hole_set = frozenset(self.holes)
        self.bounds = tuple(
            max((h[i] for h in self.holes), default=-1) for i in range(dim)
        )
        self._cache: dict = {}

    @classmethod
    def full(cls, dim: int) -> "Gns":
        if dim < 1:
            raise DimensionMismatch("dimension must be positive")
        return cls(dim, (), _trusted=True)

    @property
    def genus(self) -> int:
        return len(self.holes)

    def __contains__(self, x) -> bool:
        return tuple(x) not in self.hole_set

    def __eq__(self, other) -> bool:
        return isinstance(other, Gns) and self.dim == other.dim and self.holes == other.holes

    def __hash__(self) -> int:
        return hash((self.dim, self.holes))

    def __repr__(self) -> str:
        return f"Gns(dim={self.dim}, holes={list(self.holes)})"

    def __reduce__(self):
        return (_rebuild, (self.dim, self.holes))

    @property
    def packing(self) -> Packing:
        pk = self._cache.get("packing")
        if pk is None:
            pk = Packing.for_points(self.dim, self.holes, self.genus)
            self._cache["packing"] = pk
        return pk


def _rebuild(dim, holes):
    return Gns(dim, holes, _trusted=True)


def _check_point(dim: int, p) -> Point:
    p = tuple(p)
    if len(p) != dim:
        raise DimensionMismatch(f"point {p} has length {len(p)}, expected {dim}")
    for v in p:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise InvalidPoint(f"point {p} must have non-negative integer entries")
    return p


def validate_hole_set(dim: int, holes: Iterable[Sequence[int]]) -> Gns:
    """Check that ``N^dim`` minus ``holes`` is a monoid and wrap it as a :class:`Gns`.

    Raises :class:`ZeroIsHole`, :class:`DimensionMismatch`, :class:`InvalidPoint`
    or :class:`NotClosed` (with the first offending hole in canonical order
    and the grlex-larger of the two parts).
    """
    if not isinstance(dim, int) or dim < 1:
        raise DimensionMismatch(f"dimension must be a positive integer, got {dim!r}")
    pts = canonical(_check_point(dim, h) for h in holes)
    if (0,) * dim in pts:
        raise ZeroIsHole("the zero vector cannot be a hole")
    S = Gns(dim, pts, _trusted=True)
    if not pts:
        return S
    # closure witnesses can exceed the product bound when the set is invalid
    pk = Packing.for_points(dim, pts)
    found = backend_for(pk).closure_witness([pk.encode(h) for h in pts], dim, pk.width)
    if found is not None:
        h, a = (pk.decode(k) for k in found)
        b = sub(h, a)
        raise NotClosed(h, max(a, b, key=grlex_key))
    return S


def contains(S: Gns, x: Sequence[int]) -> bool:
    x = tuple(x)
    if len(x) != S.dim:
        raise DimensionMismatch(f"point {x} has length {len(x)}, expected {S.dim}")
    return x not in S.hole_set


def minimal_generators(S: Gns) -> tuple[Point, ...]:
    """G(S), in canonical order.

    Holes are added one at a time in increasing graded order starting from
    N^d; each intermediate set is a GNS in which the next hole is a minimal
    generator, so the generator set is updated by the tree-step kernel.
    """
    cached = S._cache.get("gens")
    if cached is not None:
        return cached
    pk = S.packing
    kern = backend_for(pk)
    gens = [pk.unit(i) for i in range(S.dim)]
    holes: set[int] = set()
    for h in S.holes:
        k = pk.encode(h)
        holes.add(k)
        gens = kern.child_generators(gens, holes, k, pk.guard)
    out = canonical(pk.decode(k) for k in gens)
    S._cache["gens"] = out
    return out


def generator_search_box(S: Gns) -> Point:
    """Per-coordinate bound ``2 M_i + 1`` on minimal generators.

    If ``x_i >= 2(M_i + 1)`` then ``x - (M_i+1) e_i`` and ``(M_i+1) e_i`` are
    both nonzero non-holes, so ``x`` is not minimal.
    """
    return tuple(2 * m + 1 for m in S.bounds)


def minimal_generators_box(S: Gns) -> tuple[Point, ...]:
    """G(S) by scanning the generator search box in graded order."""
    if S.genus == 0:
        return canonical(unit(S.dim, i) for i in range(S.dim))
    hs = S.hole_set
    found: list[Point] = []
    for x in sorted(box(generator_search_box(S)), key=grlex_key):
        if not any(x) or x in hs:
            continue
        if not any(leq(a, x) and sub(x, a) not in hs for a in found):
            found.append(x)
    return canonical(found)


def region_sets(S: Gns) -> tuple[frozenset, frozenset]:
    """``(C(S), N(S))``: points below some hole, and those of them lying in S."""
    cached = S._cache.get("region")
    if cached is not None:
        return cached
    C: set = set()
    for h in reversed(S.holes):
        if h not in C:
            C.update(box(h))
    N = frozenset(x for x in C if x not in S.hole_set)
    out = (frozenset(C), N)
    S._cache["region"] = out
    return out


def fundamental_holes(S: Gns) -> frozenset:
    """M(S)*: holes ``h`` whose only semigroup element below is ``0``.

    The set is down-closed among nonzero points, so ``h`` qualifies iff every
    nonzero ``h - e_i`` does.
    """
    cached = S._cache.get("fundamental")
    if cached is not None:
        return cached
    zero = (0,) * S.dim
    fund: set = set()
    for h in S.holes:
        ok = True
        for i, v in enumerate(h):
            if v:
                below = h[:i] + (v - 1,) + h[i + 1:]
                if below != zero and below not in fund:
                    ok = False
                    break
        if ok:
            fund.add(h)
    out = frozenset(fund)
    S._cache["fundamental"] = out
    return out


def multiplicity(S: Gns) -> int:
    return len(fundamental_holes(S)) + 1


def invariants(S: Gns) -> InvariantRecord:
    C, N = region_sets(S)
    return InvariantRecord(
        e=len(minimal_generators(S)), g=S.genus, n=len(N), c=len(C), m=multiplicity(S)
    )


def pseudo_frobenius_and_special_gaps(S: Gns) -> tuple[frozenset, frozenset]:
    """``(PF(S), EH(S))``; both empty when S has no holes.

    ``h`` is pseudo-Frobenius iff ``h + g`` lies in S for every minimal
    generator ``g`` (closure then propagates to all of S minus 0).
    """
    cached = S._cache.get("pf")
    if cached is not None:
        return cached
    hs = S.hole_set
    gens = minimal_generators(S)
    pf = frozenset(h for h in S.holes if all(add(h, g) not in hs for g in gens))
    eh = frozenset(h for h in pf if tuple(2 * v for v in h) not in hs)
    S._cache["pf"] = (pf, eh)
    return pf, eh


def maximal_holes(S: Gns) -> tuple[Point, ...]:
    out: list[Point] = []
    for h in reversed(S.holes):  # a dominating hole has larger degree
        if not any(leq(h, m) for m in out):
            out.append(h)
    return canonical(out)


def frobenius_element(S: Gns) -> Optional[Point]:
    mx = maximal_holes(S)
    return mx[0] if len(mx) == 1 else None


def axes(S: Gns) -> frozenset:
    """1-based coordinates on which every hole vanishes (all of them when g = 0)."""
    return frozenset(i + 1 for i in range(S.dim) if all(h[i] == 0 for h in S.holes))


def _symmetric_direct(S: Gns, f: Point) -> bool:
    hs = S.hole_set
    return all(leq(h, f) and sub(f, h) not in hs for h in S.holes)


def _pseudo_symmetric_direct(S: Gns, f: Point) -> bool:
    if any(v % 2 for v in f):
        return False
    half = tuple(v // 2 for v in f)
    if half not in S.hole_set:
        return False
    hs = S.hole_set
    return all(leq(h, f) and sub(f, h) not in hs for h in S.holes if h != half)


def classify(S: Gns) -> Classification:
    cached = S._cache.get("classification")
    if cached is not None:
        return cached
    ax = axes(S)
    if S.genus == 0:
        out = Classification(None, False, False, False, False, False, False,
                             frozenset(), frozenset(), 0, ax)
        S._cache["classification"] = out
        return out
    inv = invariants(S)
    pf, eh = pseudo_frobenius_and_special_gaps(S)
    f = frobenius_element(S)
    sym = psym = ordinary = False
    if f is not None:
        vol = box_size(f)
        sym = 2 * S.genus == vol
        psym = 2 * S.genus - 1 == vol
        ordinary = S.genus == vol - 1
        # the counting criteria must agree with the defining ones
        if sym != _symmetric_direct(S, f) or psym != _pseudo_symmetric_direct(S, f):
            raise RuntimeError(f"symmetry criteria disagree on {S!r}")
    out = Classification(
        frobenius_element=f,
        is_symmetric=sym,
        is_pseudo_symmetric=psym,
        is_irreducible=len(eh) == 1,
        is_ordinary=ordinary,
        is_monomial=inv.n == 1,
        has_minimal_multiplicity=inv.c == inv.m * inv.n,
        pf=pf,
        eh=eh,
        span_rank=S.dim - len(ax),
        axes=ax,
    )
    S._cache["classification"] = out
    return out


def canonical_decompose(S: Gns, x: Sequence[int], order) -> tuple[Point, Point]:
    """``(m, s)`` with ``s`` the ``order``-largest element of S below ``x`` and ``m = x - s``.

    ``m`` is always 0 or a fundamental hole.
    """
    x = tuple(x)
    if len(x) != S.dim:
        raise DimensionMismatch(f"point {x} has length {len(x)}, expected {S.dim}")
    s = max((t for t in box(x) if t not in S.hole_set), key=order.key)
    return sub(x, s), s


def axes_and_restriction(S: Gns) -> tuple[frozenset, int, Optional[Gns]]:
    """``(Axes(S), r, S̄)``; ``S̄`` is ``None`` for N^d, where it is undefined."""
    ax = axes(S)
    r = S.dim - len(ax)
    if S.genus == 0:
        return ax, 0, None
    keep = [i for i in range(S.dim) if i + 1 not in ax]
    bar = Gns(r, (tuple(h[i] for i in keep) for h in S.holes), _trusted=True)
    return ax, r, bar


def semigroup_from_generators(dim: int, gens: Iterable[Sequence[int]], *, max_rounds: int = 8) -> Gns:
    """The GNS generated by ``gens``, which must have finite complement.

    Membership is computed by dynamic programming over a box that is doubled
    until the result certifies itself: the candidate's generators all lie in
    the monoid spanned by ``gens`` and every element of ``gens`` lies in the
    candidate.
    """
    A = [_check_point(dim, a) for a in gens]
    A = [a for a in A if any(a)]
    if not A:
        raise InvalidPoint("at least one nonzero generator is required")
    for i in range(dim):
        # the multiples of e_i in <A> come from generators on that axis alone
        on_axis = [a[i] for a in A if all(v == 0 for j, v in enumerate(a) if j != i)]
        if math.gcd(*on_axis) != 1:
            raise BadParameters(f"axis {i + 1} misses infinitely many points, the complement is infinite")
    bound = [2 * max(a[i] for a in A) + 1 for i in range(dim)]
    memo: dict = {}

    def spanned(x: Point) -> bool:
        if not any(x):
            return True
        hit = memo.get(x)
        if hit is None:
            hit = any(leq(a, x) and spanned(sub(x, a)) for a in A)
            memo[x] = hit
        return hit

    for _ in range(max_rounds):
        reach: dict = {}
        for x in sorted(box(bound), key=grlex_key):
            reach[x] = not any(x) or any(leq(a, x) and reach[sub(x, a)] for a in A)
        holes = [x for x, ok in reach.items() if not ok]
        if any(x[i] == bound[i] for x in holes for i in range(dim)):
            bound = [2 * b + 1 for b in bound]  # holes reach the face: box still too small
            continue
        try:
            cand = validate_hole_set(dim, holes)
        except NotClosed:
            cand = None
        if cand is not None and all(contains(cand, a) for a in A):
            limit = sys.getrecursionlimit()
            sys.setrecursionlimit(max(limit, 10000))
            try:
                if all(spanned(g) for g in minimal_generators(cand)):
                    return cand
            finally:
                sys.setrecursionlimit(limit)
        bound = [2 * b + 1 for b in bound]
    raise BadParameters("generators do not span a monoid with finite complement within the search budget")
