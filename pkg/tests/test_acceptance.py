"""Acceptance gate: the eight criteria, each at its stated tolerance.

Every criterion records one PASS/FAIL line, printed in the terminal summary.
"""

import math
import random
import time
from contextlib import contextmanager

from conftest import ACCEPTANCE_LINES, EXAF_GENS, EXAF_HOLES, EXAF_N, N5_HOLES, SBAR_HOLES
import ideal_oracle as oracle
from gnswilf.cli import OK, main
from gnswilf.enumeration import brute_force_enumerate, enumerate_genus, iter_genus
from gnswilf.gns import (
    axes_and_restriction,
    box,
    classify,
    fundamental_holes,
    invariants,
    minimal_generators,
    region_sets,
    validate_hole_set,
)
from gnswilf.monomial import (
    MonomialIdeal,
    ci_analysis,
    colon_by_variable,
    ideal_product,
    length,
    length_of_quotient,
    random_ideal,
    reduction_number,
    square,
    standard_monomials,
    verify_monomial_wilf,
    verify_prop_ij,
)
from gnswilf.orders import MonomialOrder
from gnswilf.sweep import run_sweep
from gnswilf.thickening import thicken, thicken_iterated
from gnswilf.wilf import extended_wilf, generalized_wilf, make_ordinary

N5_GENS = {
    (1, 0, 0, 0, 0), (0, 0, 1, 0, 0), (0, 0, 0, 0, 1), (1, 0, 0, 1, 0), (0, 1, 0, 1, 0),
    (0, 0, 1, 1, 0), (0, 0, 0, 1, 1), (0, 0, 0, 3, 0), (1, 0, 0, 2, 0), (0, 1, 0, 2, 0),
    (0, 0, 1, 2, 0), (0, 0, 0, 2, 1), (0, 0, 0, 5, 0), (0, 0, 0, 4, 0), (1, 1, 0, 0, 0),
    (0, 1, 1, 0, 0), (0, 1, 0, 0, 1), (0, 2, 0, 0, 0), (0, 2, 0, 1, 0), (0, 3, 0, 0, 0),
}
SBAR_GENS = {(1, 1), (0, 3), (1, 2), (0, 5), (0, 4), (2, 1), (2, 0), (3, 0)}


@contextmanager
def criterion(number, title, limit=None):
    t0 = time.perf_counter()
    status, note = "FAIL", ""
    try:
        yield
        elapsed = time.perf_counter() - t0
        if limit is not None and elapsed >= limit:
            note = f" (over the {limit:g} s limit)"
            raise AssertionError(f"criterion {number} took {elapsed:.2f} s, limit {limit} s")
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - t0
        bound = f" / {limit:g} s" if limit is not None else ""
        line = f"criterion {number} {status}  {elapsed:8.2f} s{bound}  {title}{note}"
        ACCEPTANCE_LINES.append(line)
        print(line)


def test_criterion_1_golden_example():
    with criterion(1, "golden example: generators, N(S), e n c g and 56 >= 32", limit=1):
        S = validate_hole_set(2, EXAF_HOLES)
        _, N = region_sets(S)
        inv = invariants(S)
        assert set(minimal_generators(S)) == EXAF_GENS
        assert set(N) == EXAF_N
        assert (inv.e, inv.n, inv.c, inv.g) == (8, 7, 16, 9)
        r = generalized_wilf(S)
        assert (r.lhs, r.rhs, r.holds) == (56, 32, True)


def test_criterion_2_n5_example():
    with criterion(2, "five-dimensional example: generators, axes, restriction, rebuild"):
        S = validate_hole_set(5, N5_HOLES)
        assert set(minimal_generators(S)) == N5_GENS and invariants(S).e == 20
        ax, r, bar = axes_and_restriction(S)
        assert ax == {1, 3, 5} and r == 2
        assert bar == validate_hole_set(2, SBAR_HOLES)
        assert set(minimal_generators(bar)) == SBAR_GENS
        assert len(fundamental_holes(bar)) + 1 == 4 == invariants(bar).m
        assert thicken_iterated(bar, [(1, 0), (3, 0), (5, 0)]) == S


def test_criterion_3_monomial_example():
    with criterion(3, "monomial example: lengths, slack identity, reduction numbers", limit=1):
        I = MonomialIdeal.of(2, [(5, 0), (3, 3), (0, 5)])
        J = MonomialIdeal.of(2, [(5, 0), (0, 5)])
        L = MonomialIdeal.of(2, [(5, 0), (1, 4), (0, 5)])
        assert length(I) == 21
        assert length_of_quotient(I, square(I)) == 46
        assert length(J) == 25
        p = verify_prop_ij(I)
        assert (p.slack, p.box_excess) == (4, 4)
        assert reduction_number(I, J) == 1
        assert reduction_number(L, J) == 4


def test_criterion_4_ordinary_equality():
    with criterion(4, "ordinary semigroups: n = 1 and d c = e on 200 random f"):
        S = make_ordinary((2, 3))
        inv = invariants(S)
        assert (inv.n, inv.c, inv.e) == (1, 12, 24) and 2 * inv.c == inv.e
        rng = random.Random(2024)
        done = 0
        while done < 200:
            d = rng.randint(1, 4)
            f = tuple(rng.randint(0, 6) for _ in range(d))
            if not any(f):
                continue  # f = 0 gives N^d, which has no holes
            S = make_ordinary(f)
            inv = invariants(S)
            assert inv.n == 1 and inv.c == math.prod(v + 1 for v in f)
            assert d * inv.c == inv.e, f
            assert classify(S).is_ordinary
            done += 1


def test_criterion_5_monomial_wilf_suite():
    with criterion(5, "1000 random ideals: d l(R/I) <= l(I/I^2), equality iff CI, oracle agreement",
                   limit=120):
        rng = random.Random(5)
        for _ in range(1000):
            d = rng.randint(1, 4)
            I = random_ideal(rng, d, 30)
            assert length(I) <= 30
            r = verify_monomial_wilf(I)
            assert d * length(I) <= length_of_quotient(I, square(I))
            assert r.holds and r.equality == ci_analysis(I)[0]
            side = oracle.bounding_box(I)
            sq = square(I)
            assert oracle.members(sq, side) == oracle.product_members(I, I, side)
            assert oracle.members(ideal_product(I, sq), side) == oracle.product_members(I, sq, side)
            for i in range(1, d + 1):
                assert oracle.members(colon_by_variable(I, i), side) == oracle.colon_members(I, i, side)
            assert length(I) == oracle.length(I, side)
            assert set(standard_monomials(I)) == set(box(side)) - oracle.members(I, side)


def test_criterion_6_oracle_equivalence():
    with criterion(6, "tree enumeration equals the brute-force oracle", limit=300):
        for d, gmax in ((2, 4), (3, 3)):
            for g in range(gmax + 1):
                assert set(iter_genus(d, g)) == brute_force_enumerate(d, g), (d, g)
        oracle_counts = [len(brute_force_enumerate(1, g)) for g in range(11)]
        assert oracle_counts == [1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204]
        assert [enumerate_genus(1, g) for g in range(11)] == oracle_counts


def test_criterion_7_desk_scale_sweeps(capsys):
    with criterion(7, "exhaustive and random sweeps: zero violations, parallel equals serial",
                   limit=1800):
        assert main(["sweep", "-d", "2", "--max-genus", "9", "--mode", "all", "--ewc"]) == OK
        assert capsys.readouterr().out.splitlines()[-1].endswith("violations 0")
        assert main(["sweep", "-d", "3", "--max-genus", "6", "--mode", "all"]) == OK
        assert capsys.readouterr().out.splitlines()[-1].endswith("violations 0")
        # the same d = 3 range with the order-based check as well
        s = run_sweep(3, 6, "all", order_set=MonomialOrder.all_orders(3))
        assert s.violations == 0
        for d in range(2, 6):
            s = run_sweep(d, 200, "random", trials=50, order_set=MonomialOrder.all_orders(d), seed=d)
            assert s.counts() == [50] * 201
            assert s.violations == 0, d
        orders = MonomialOrder.all_orders(2)
        serial = run_sweep(2, 9, "all", order_set=orders)
        parallel = run_sweep(2, 9, "all", order_set=orders, jobs=4)
        assert serial.key() == parallel.key()
        assert serial.counts() == [1, 2, 7, 23, 71, 210, 638, 1894, 5570, 16220]
        serial = run_sweep(4, 60, "random", trials=12, seed=1)
        assert serial.key() == run_sweep(4, 60, "random", trials=12, seed=1, jobs=3).key()
        assert enumerate_genus(3, 6, jobs=3) == enumerate_genus(3, 6) == 5075


def _psi_counts_hold(S):
    holes = S.hole_set
    for h in S.holes:
        below = list(box(h))
        n_h = sum(1 for x in below if x not in holes)
        h_h = sum(1 for x in below if x in holes)
        if n_h > h_h:
            return False
    return True


def test_criterion_8_structural_suite():
    with criterion(8, "structural identities over every semigroup with d = 2, g <= 7"):
        rng = random.Random(8)
        orders = MonomialOrder.all_orders(2)
        seen = 0
        for g in range(8):
            for S in iter_genus(2, g):
                seen += 1
                inv = invariants(S)
                c = classify(S)
                assert inv.c == inv.g + inv.n
                assert _psi_counts_hold(S)
                for h in S.holes:
                    assert math.prod(v + 1 for v in h) <= inv.c
                gw = generalized_wilf(S)
                for o in orders:
                    if gw.holds:
                        assert extended_wilf(S, o).holds
                if g == 0:
                    continue
                assert inv.c <= inv.m * inv.n
                assert inv.e >= 4
                if c.is_symmetric:
                    assert inv.n == inv.g
                assert c.is_irreducible == (len(c.eh) == 1)
                f = c.frobenius_element
                counting = f is not None and math.prod(v + 1 for v in f) in (2 * g, 2 * g - 1)
                assert c.is_irreducible == counting
                if c.is_irreducible:
                    assert gw.holds
                if inv.e == 4 and f is not None:
                    assert c.is_symmetric
                axis, k = rng.randint(1, 3), rng.randint(0, 3)
                T = thicken(S, axis, k)
                iT = invariants(T)
                assert (iT.g, iT.n, iT.c, iT.e) == ((k + 1) * g, (k + 1) * inv.n, (k + 1) * inv.c,
                                                   inv.e + inv.m)
                if gw.holds:
                    assert generalized_wilf(T).holds
        assert seen == 1 + 2 + 7 + 23 + 71 + 210 + 638 + 1894
