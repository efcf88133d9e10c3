"""Semigroup tree over all GNS of N^d, random walks in it, and a brute-force oracle.

The tree is rooted at N^d.  The children of a node ``S`` are ``S \\ {x}``
for each minimal generator ``x`` larger than the order-Frobenius element of
``S`` (the largest hole under the fixed graded order, a sentinel below
everything for N^d).  Every GNS of genus ``g + 1`` has exactly one parent,
``S ∪ {Fb(S)}``, so a depth-``g`` traversal visits each GNS of genus ``g``
once.

Internally nodes carry packed integer keys (see :mod:`gnswilf.packing`) and
generator sets are updated by the hot kernel of :mod:`gnswilf.kernels`.
"""

from __future__ import annotations

import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .errors import BadParameters, OracleTooLarge, Unreachable
from .gns import Gns, Point, box, canonical, minimal_generators, validate_hole_set
from .kernels import backend_for
from .orders import MonomialOrder
from .packing import Packing, width_for_genus


@dataclass(frozen=True)
class TreeNode:
    semigroup: Gns
    order_frobenius: Point
    generators_above: tuple[Point, ...]


def make_node(S: Gns, order: MonomialOrder) -> TreeNode:
    if S.genus:
        fb = max(S.holes, key=order.key)
    else:
        fb = (-1,) * S.dim
    fk = order.key(fb)
    above = tuple(sorted((x for x in minimal_generators(S) if order.key(x) > fk), key=order.key))
    return TreeNode(S, fb, above)


def root_node(dim: int, order: Optional[MonomialOrder] = None) -> TreeNode:
    return make_node(Gns.full(dim), order or MonomialOrder.grlex(dim))


def children(node: TreeNode, order: Optional[MonomialOrder] = None) -> list[TreeNode]:
    """Child nodes in increasing order of the removed generator."""
    S = node.semigroup
    order = order or MonomialOrder.grlex(S.dim)
    pk = Packing.for_points(S.dim, S.holes, S.genus + 1)
    kern = backend_for(pk)
    gens = [pk.encode(g) for g in minimal_generators(S)]
    base = {pk.encode(h) for h in S.holes}
    out = []
    for x in node.generators_above:
        child = validate_hole_set(S.dim, S.holes + (x,))
        k = pk.encode(x)
        new = kern.child_generators(gens, base | {k}, k, pk.guard)
        child._cache["gens"] = canonical(pk.decode(v) for v in new)
        fk = order.key(x)
        above = tuple(sorted((g for g in child._cache["gens"] if order.key(g) > fk), key=order.key))
        out.append(TreeNode(child, x, above))
    return out


class PackedTree:
    """Fast traversal state: nodes are ``(holes, gens, fb_key)`` with packed keys."""

    def __init__(self, dim: int, max_genus: int, order: Optional[MonomialOrder] = None):
        if dim < 1 or max_genus < 0:
            raise BadParameters("need dim >= 1 and max_genus >= 0")
        self.dim = dim
        self.max_genus = max_genus
        self.order = order or MonomialOrder.grlex(dim)
        self.pk = Packing(dim, width_for_genus(max_genus + 1))
        self.kern = backend_for(self.pk)
        self._sentinel = self.order.key((-1,) * dim)
        self._keys: dict[int, tuple] = {}

    def okey(self, k: int):
        v = self._keys.get(k)
        if v is None:
            v = self.order.key(self.pk.decode(k))
            if len(self._keys) < 1_000_000:
                self._keys[k] = v
        return v

    def root(self):
        return (frozenset(), tuple(self.pk.unit(i) for i in range(self.dim)), None)

    def kids(self, node):
        holes, gens, fb = node
        fk = self._sentinel if fb is None else self.okey(fb)
        above = sorted((x for x in gens if self.okey(x) > fk), key=self.okey)
        guard = self.pk.guard
        for x in above:
            child_holes = holes | {x}
            yield (child_holes, tuple(self.kern.child_generators(gens, child_holes, x, guard)), x)

    def to_gns(self, node) -> Gns:
        holes, gens, _ = node
        S = Gns(self.dim, (self.pk.decode(k) for k in holes), _trusted=True)
        S._cache["gens"] = canonical(self.pk.decode(k) for k in gens)
        return S

    def walk(self, node, depth: int) -> Iterator[tuple]:
        """Depth-first: every descendant of ``node`` exactly ``depth`` levels below it."""
        if depth == 0:
            yield node
            return
        stack = [iter([node])]
        levels = [0]
        while stack:
            try:
                cur = next(stack[-1])
            except StopIteration:
                stack.pop()
                levels.pop()
                continue
            lvl = levels[-1]
            if lvl == depth:
                yield cur
                continue
            stack.append(self.kids(cur))
            levels.append(lvl + 1)

    def walk_all(self, node, depth: int) -> Iterator[tuple]:
        """Depth-first pre-order over ``node`` and all descendants up to ``depth`` levels below."""
        stack = [(node, 0)]
        while stack:
            cur, lvl = stack.pop()
            yield cur
            if lvl < depth:
                kids = list(self.kids(cur))
                stack.extend((k, lvl + 1) for k in reversed(kids))

    def frontier(self, depth: int) -> list:
        return list(self.walk(self.root(), depth))


def _count_task(args) -> int:
    dim, g, order, node, depth = args
    tree = PackedTree(dim, g, order)
    return sum(1 for _ in tree.walk(node, depth))


def _split_depth(g: int, jobs: int) -> int:
    return min(g, 3 if jobs > 1 else 0)


def enumerate_genus(
    d: int,
    g: int,
    order: Optional[MonomialOrder] = None,
    visitor: Optional[Callable[[Gns], None]] = None,
    jobs: int = 1,
) -> int:
    """Visit every GNS of genus ``g`` in N^d once and return how many there are.

    With ``jobs > 1`` counting runs in worker processes split by subtree; a
    visitor is then invoked from worker threads and must be thread-safe.
    """
    order = order or MonomialOrder.grlex(d)
    tree = PackedTree(d, g, order)
    if jobs <= 1:
        count = 0
        for node in tree.walk(tree.root(), g):
            count += 1
            if visitor is not None:
                visitor(tree.to_gns(node))
        return count
    split = _split_depth(g, jobs)
    front = tree.frontier(split)
    if visitor is None:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return sum(ex.map(_count_task, [(d, g, order, n, g - split) for n in front]))

    def run(node) -> int:
        count = 0
        for leaf in tree.walk(node, g - split):
            count += 1
            visitor(tree.to_gns(leaf))
        return count

    with ThreadPoolExecutor(max_workers=jobs) as ex:
        return sum(ex.map(run, front))


def iter_genus(d: int, g: int, order: Optional[MonomialOrder] = None) -> Iterator[Gns]:
    """Stream every GNS of genus ``g`` in traversal order."""
    tree = PackedTree(d, g, order)
    for node in tree.walk(tree.root(), g):
        yield tree.to_gns(node)


class RandomWalk:
    """One uniform-child-per-step walk down the tree, restarting on dead ends."""

    def __init__(self, dim: int, max_genus: int, rng: random.Random,
                 order: Optional[MonomialOrder] = None, max_restarts: int = 1000):
        self.tree = PackedTree(dim, max_genus, order)
        self.rng = rng
        self.max_genus = max_genus
        self.max_restarts = max_restarts

    def path(self) -> list:
        """Nodes of genus 0, 1, ..., max_genus along one successful walk."""
        tree = self.tree
        for _ in range(self.max_restarts + 1):
            node = tree.root()
            out = [node]
            while len(out) <= self.max_genus:
                holes, gens, fb = node
                fk = tree._sentinel if fb is None else tree.okey(fb)
                above = sorted((x for x in gens if tree.okey(x) > fk), key=tree.okey)
                if not above:
                    break
                x = self.rng.choice(above)
                child_holes = holes | {x}
                node = (child_holes, tuple(tree.kern.child_generators(gens, child_holes, x, tree.pk.guard)), x)
                out.append(node)
            else:
                return out
        raise Unreachable(f"no walk reached genus {self.max_genus} after {self.max_restarts} restarts")


def random_gns(d: int, g: int, seed: int, max_restarts: int = 1000) -> Gns:
    """A GNS of genus ``g`` reached by a seeded uniform-child random walk.

    Deterministic in ``seed``.  Not uniform over all GNS of that genus.
    """
    if d < 1 or g < 0:
        raise BadParameters("need d >= 1 and g >= 0")
    walk = RandomWalk(d, g, random.Random(seed), max_restarts=max_restarts)
    return walk.tree.to_gns(walk.path()[-1])


def oracle_candidates(d: int, g: int) -> list[Point]:
    """Nonzero points that can be holes of a genus-g GNS: ``∏(x_i + 1) <= 2g``."""
    if g == 0:
        return []
    side = tuple(2 * g - 1 for _ in range(d))
    return [x for x in box(side) if any(x) and math.prod(v + 1 for v in x) <= 2 * g]


def _closed(holes: frozenset) -> bool:
    for h in holes:
        for a in box(h):
            if any(a) and a != h and a not in holes and tuple(x - y for x, y in zip(h, a)) not in holes:
                return False
    return True


def brute_force_enumerate(d: int, g: int, cap: int = 5_000_000) -> set[Gns]:
    """Every GNS of genus ``g`` in N^d by testing all g-subsets of the candidate points.

    Independent of the tree: no generators, no orders, only the definition
    of closure under addition.
    """
    if d < 1 or g < 0:
        raise BadParameters("need d >= 1 and g >= 0")
    cands = oracle_candidates(d, g)
    if math.comb(len(cands), g) > cap:
        raise OracleTooLarge(f"{math.comb(len(cands), g)} subsets exceed the cap {cap}")
    out = set()
    for subset in itertools.combinations(cands, g):
        hs = frozenset(subset)
        if _closed(hs):
            out.add(Gns(d, subset, _trusted=True))
    return out
