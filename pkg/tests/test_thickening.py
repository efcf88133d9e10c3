import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import N5_HOLES, SBAR_HOLES, small_gns
from gnswilf.errors import BadParameters, DimensionMismatch, RepeatedAxis
from gnswilf.gns import (
    Gns,
    axes_and_restriction,
    classify,
    fundamental_holes,
    invariants,
    minimal_generators,
    validate_hole_set,
)
from gnswilf.thickening import embed, thicken, thicken_iterated, thickening_generators
from gnswilf.wilf import generalized_wilf

N_MINUS_1 = validate_hole_set(1, [(1,)])


def test_numerical_23_thickened_once():
    T = thicken(N_MINUS_1, 2, 1)
    assert set(T.holes) == {(1, 0), (1, 1)}
    assert set(minimal_generators(T)) == {(0, 1), (2, 0), (3, 0), (1, 2)}
    assert invariants(T).e == 4


def test_numerical_23_thickened_twice():
    T = thicken(N_MINUS_1, 2, 2)
    assert (invariants(T).n, invariants(T).c) == (3, 6)
    assert (invariants(N_MINUS_1).n, invariants(N_MINUS_1).c) == (1, 2)


def test_zero_thickening_embeds():
    S = validate_hole_set(2, SBAR_HOLES)
    T = thicken(S, 1, 0)
    assert T.genus == S.genus
    assert set(T.holes) == {(0,) + h for h in S.holes}


def test_bad_arguments():
    with pytest.raises(DimensionMismatch):
        thicken(N_MINUS_1, 3, 1)
    with pytest.raises(BadParameters):
        thicken(N_MINUS_1, 1, -1)
    with pytest.raises(RepeatedAxis):
        thicken_iterated(N_MINUS_1, [(2, 0), (2, 1)])
    with pytest.raises(DimensionMismatch):
        thicken_iterated(N_MINUS_1, [(4, 0)])


def test_iterated_embedding():
    T = thicken_iterated(N_MINUS_1, [(2, 0), (3, 0)])
    assert T.dim == 3 and T.holes == ((1, 0, 0),)


def test_iterated_order_independent():
    a = thicken_iterated(N_MINUS_1, [(2, 1), (3, 2)])
    b = thicken_iterated(N_MINUS_1, [(3, 2), (2, 1)])
    assert a == b


def test_n5_reconstruction():
    S = validate_hole_set(5, N5_HOLES)
    bar = validate_hole_set(2, SBAR_HOLES)
    T = thicken_iterated(bar, [(1, 0), (3, 0), (5, 0)])
    assert T == S
    assert invariants(T).e == 20 and T.genus == 4
    assert embed(bar, [1, 3, 5]) == S


@settings(max_examples=80, deadline=None)
@given(small_gns(max_dim=3, max_genus=8), st.integers(0, 3), st.data())
def test_thickening_statistics(S, k, data):
    axis = data.draw(st.integers(1, S.dim + 1))
    T = thicken(S, axis, k)
    iS, iT = invariants(S), invariants(T)
    assert iT.g == (k + 1) * iS.g
    assert iT.n == (k + 1) * iS.n
    assert iT.c == (k + 1) * iS.c
    if S.genus:
        assert iT.e == iS.e + iS.m
    assert minimal_generators(T) == thickening_generators(S, axis, k)
    # the fundamental holes stack along the new axis only for k = 0
    if k == 0:
        assert len(fundamental_holes(T)) == len(fundamental_holes(S))
    gS, gT = generalized_wilf(S), generalized_wilf(T)
    if gS.holds:
        assert gT.holds
    if S.genus and gS.equality and iS.c == iS.m * iS.n:
        assert gT.equality


@settings(max_examples=60, deadline=None)
@given(small_gns(max_dim=4, max_genus=10))
def test_restriction_then_embedding_is_identity(S):
    if S.genus == 0:
        return
    ax, r, bar = axes_and_restriction(S)
    assert embed(validate_hole_set(r, bar.holes), ax) == S


def test_full_semigroup_thickens_to_full():
    assert thicken(Gns.full(2), 2, 3) == Gns.full(3)


def test_thickening_keeps_symmetry_flags_consistent():
    S = validate_hole_set(2, [(1, 0), (1, 1)])
    T = thicken(S, 3, 0)
    assert classify(T).is_symmetric
