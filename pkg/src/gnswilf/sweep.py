"""Exhaustive and random verification sweeps of the two Wilf-type inequalities.

A sweep evaluates e·n ≥ d·c on every visited semigroup and, optionally, the
order-based inequality for every order in an order set.  Work is split into
independent units (subtrees for ``mode="all"``, walks for ``mode="random"``)
whose partial summaries merge associatively, so the result does not depend
on ``jobs``.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from .enumeration import PackedTree, RandomWalk
from .errors import BadParameters
from .gns import Gns, Point, canonical
from .orders import MonomialOrder
from .report import report_row

MODES = ("all", "random")
MAX_WITNESSES = 10


@dataclass
class GenusStats:
    count: int = 0
    gwc_violations: int = 0
    ewc_violations: int = 0
    gwc_equalities: int = 0
    min_slack: Optional[int] = None
    witness: Optional[tuple[Point, ...]] = None  # canonical holes attaining min_slack

    def offer(self, slack: int, holes: tuple[Point, ...]) -> None:
        if self.min_slack is None or (slack, holes) < (self.min_slack, self.witness):
            self.min_slack, self.witness = slack, holes

    def merge(self, other: "GenusStats") -> None:
        self.count += other.count
        self.gwc_violations += other.gwc_violations
        self.ewc_violations += other.ewc_violations
        self.gwc_equalities += other.gwc_equalities
        if other.min_slack is not None:
            self.offer(other.min_slack, other.witness)


@dataclass
class SweepSummary:
    dim: int
    max_genus: int
    mode: str
    trials: int
    orders: tuple[str, ...]
    strict: bool
    per_genus: dict[int, GenusStats] = field(default_factory=dict)
    # (genus, holes, context) of the first few failures in a fixed order
    witnesses: list[tuple[int, tuple[Point, ...], str]] = field(default_factory=list)

    @property
    def violations(self) -> int:
        return sum(s.gwc_violations + s.ewc_violations for s in self.per_genus.values())

    @property
    def total(self) -> int:
        return sum(s.count for s in self.per_genus.values())

    def counts(self) -> list[int]:
        return [self.per_genus[g].count if g in self.per_genus else 0 for g in range(self.max_genus + 1)]

    def stats(self, genus: int) -> GenusStats:
        s = self.per_genus.get(genus)
        if s is None:
            s = self.per_genus[genus] = GenusStats()
        return s

    def merge(self, other: "SweepSummary") -> None:
        for g, s in other.per_genus.items():
            self.stats(g).merge(s)
        self.witnesses = sorted(set(self.witnesses) | set(other.witnesses))[:MAX_WITNESSES]

    def record_failure(self, genus: int, holes: tuple[Point, ...], context: str) -> None:
        self.witnesses = sorted(set(self.witnesses) | {(genus, holes, context)})[:MAX_WITNESSES]

    def key(self) -> tuple:
        """Everything that must be identical between serial and parallel runs."""
        rows = tuple(
            (g, s.count, s.gwc_violations, s.ewc_violations, s.gwc_equalities, s.min_slack, s.witness)
            for g, s in sorted(self.per_genus.items())
        )
        return rows, tuple(self.witnesses)


class _Checker:
    """Evaluates packed nodes; shared by the exhaustive and random drivers."""

    def __init__(self, tree: PackedTree, orders: Sequence[MonomialOrder], strict: bool):
        self.tree = tree
        self.orders = tuple(orders)
        self.strict = strict
        self._rank: dict = {}

    def rank(self, order: MonomialOrder, fb: Point) -> int:
        k = (order, fb)
        v = self._rank.get(k)
        if v is None:
            v = self._rank[k] = order.count_preceding(fb)
        return v

    def check(self, out: SweepSummary, holes_keys, e: int, c: int, fbs: Sequence[Point]) -> None:
        """Record one semigroup.  ``fbs`` holds the order-largest hole per order."""
        d = self.tree.dim
        g = len(holes_keys)
        n = c - g
        stats = out.stats(g)
        stats.count += 1
        slack = e * n - d * c
        decoded: Optional[tuple] = None

        def holes() -> tuple:
            nonlocal decoded
            if decoded is None:
                decoded = canonical(self.tree.pk.decode(k) for k in holes_keys)
            return decoded

        if slack == 0:
            stats.gwc_equalities += 1
        if stats.min_slack is None or slack <= stats.min_slack:
            stats.offer(slack, holes())
        if slack < 0:
            stats.gwc_violations += 1
            out.record_failure(g, holes(), "generalized")
        if g == 0:
            return
        for order, fb in zip(self.orders, fbs):
            n_ord = self.rank(order, fb) - (g - 1)
            if n_ord * e < n_ord + g + (1 if self.strict else 0):
                stats.ewc_violations += 1
                out.record_failure(g, holes(), f"extended:{order.name}")

    def fbs_from_scratch(self, holes_keys) -> list[Point]:
        if not self.orders or not holes_keys:
            return []
        pts = [self.tree.pk.decode(k) for k in holes_keys]
        return [max(pts, key=o.key) for o in self.orders]


def _new_summary(d, g_max, mode, trials, orders, strict) -> SweepSummary:
    return SweepSummary(d, g_max, mode, trials, tuple(o.name for o in orders), strict)


def _all_task(args) -> SweepSummary:
    d, g_max, orders, strict, node, depth = args
    out = _new_summary(d, g_max, "all", 0, orders, strict)
    tree = PackedTree(d, g_max)
    chk = _Checker(tree, orders, strict)
    kern, pk = tree.kern, tree.pk
    for holes, gens, _ in tree.walk_all(node, depth):
        c = kern.region_count(list(holes), d, pk.width) if holes else 0
        chk.check(out, holes, len(gens), c, chk.fbs_from_scratch(holes))
    return out


def _walk_task(args) -> SweepSummary:
    """One random walk to ``g_max`` with every prefix checked.

    The seed of a walk depends only on ``(seed, d, trial)``.
    """
    d, g_max, orders, strict, seed, trial, max_restarts = args
    out = _new_summary(d, g_max, "random", 1, orders, strict)
    rng = random.Random(f"{seed}:{d}:{trial}")
    walk = RandomWalk(d, g_max, rng, max_restarts=max_restarts)
    tree = walk.tree
    chk = _Checker(tree, orders, strict)
    kern, pk = tree.kern, tree.pk
    region: set = set()
    fbs: list = [None] * len(chk.orders)
    fkeys: list = [None] * len(chk.orders)
    for holes, gens, x in walk.path():
        if x is not None:
            region.update(kern.box_keys(x, d, pk.width))
            p = pk.decode(x)
            for i, o in enumerate(chk.orders):
                k = o.key(p)
                if fkeys[i] is None or k > fkeys[i]:
                    fkeys[i], fbs[i] = k, p
        chk.check(out, holes, len(gens), len(region), fbs if x is not None else [])
    return out


def _check_params(d: int, g_max: int, mode: str, trials: int, jobs: int, orders) -> None:
    if d < 1:
        raise BadParameters("dimension must be positive")
    if g_max < 0:
        raise BadParameters("max genus must be non-negative")
    if mode not in MODES:
        raise BadParameters(f"mode must be one of {MODES}")
    if mode == "random" and trials < 1:
        raise BadParameters("random sweeps need at least one trial")
    if jobs < 1:
        raise BadParameters("jobs must be positive")
    for o in orders:
        if o.dim != d:
            raise BadParameters(f"order {o.name} does not match dimension {d}")


def run_sweep(
    d: int,
    g_max: int,
    mode: str = "all",
    trials: int = 50,
    order_set: Sequence[MonomialOrder] = (),
    jobs: int = 1,
    strict: bool = False,
    seed: int = 0,
    max_restarts: int = 1000,
) -> SweepSummary:
    """Check every semigroup of genus 0..g_max (``all``) or ``trials`` walks to g_max (``random``).

    In random mode each walk contributes one semigroup per genus, so every
    genus sees exactly ``trials`` samples.
    """
    orders = tuple(order_set)
    _check_params(d, g_max, mode, trials, jobs, orders)
    out = _new_summary(d, g_max, mode, trials if mode == "random" else 0, orders, strict)
    if mode == "all":
        split = min(g_max, 3) if jobs > 1 else 0
        tree = PackedTree(d, g_max)
        if split:
            head = _all_task((d, g_max, orders, strict, tree.root(), split - 1))
            out.merge(head)
        tasks = [(d, g_max, orders, strict, n, g_max - split) for n in tree.frontier(split)]
        worker = _all_task
    else:
        tasks = [(d, g_max, orders, strict, seed, t, max_restarts) for t in range(trials)]
        worker = _walk_task
    if jobs == 1:
        parts = map(worker, tasks)
        for p in parts:
            out.merge(p)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            for p in ex.map(worker, tasks, chunksize=max(1, len(tasks) // (8 * jobs))):
                out.merge(p)
    return out


def sweep_rows(d: int, g_max: int, orders: Sequence[MonomialOrder] = (),
               strict: bool = False) -> Iterator[dict]:
    """Report rows for every semigroup of genus 0..g_max in traversal order."""
    tree = PackedTree(d, g_max)
    for node in tree.walk_all(tree.root(), g_max):
        yield report_row(tree.to_gns(node), orders, strict)


def format_summary(s: SweepSummary) -> str:
    lines = [
        f"sweep d={s.dim} genus 0..{s.max_genus} mode={s.mode}"
        + (f" trials={s.trials}" if s.mode == "random" else "")
        + (f" orders={len(s.orders)}" + (" strict" if s.strict else "") if s.orders else ""),
        "genus  count  gwc_viol  ewc_viol  equalities  min_slack  witness",
    ]
    for g in range(s.max_genus + 1):
        st = s.per_genus.get(g, GenusStats())
        wit = "-" if st.witness is None else str([list(h) for h in st.witness])
        ms = "-" if st.min_slack is None else str(st.min_slack)
        lines.append(f"{g:5d}  {st.count:5d}  {st.gwc_violations:8d}  {st.ewc_violations:8d}  "
                     f"{st.gwc_equalities:10d}  {ms:>9}  {wit}")
    lines.append(f"total {s.total}, violations {s.violations}")
    return "\n".join(lines)


def witness_gns(s: SweepSummary) -> Optional[Gns]:
    if not s.witnesses:
        return None
    g, holes, _ = s.witnesses[0]
    return Gns(s.dim, holes, _trusted=True)
