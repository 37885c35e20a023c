import random
from math import comb

import pytest
from hypothesis import given, strategies as st

from planecremona.algebra import parse_poly
from planecremona.groebner import GradedIdeal
from planecremona.hilbert import hilbert_series
from planecremona.resolution import (BettiTable, InvalidInput, VIRTUAL_RESOLUTIONS,
                                     check_shift_gaps, classify_virtual_resolution,
                                     derive_virtual_resolutions, is_cohen_macaulay,
                                     minimal_free_resolution, regularity, virtual_table)
from conftest import R3, random_form


def I(*gens):
    return GradedIdeal([parse_poly(g, R3) for g in gens], R3)


def test_koszul():
    B = minimal_free_resolution(I("x", "y", "z")).betti()
    assert B == BettiTable.from_shifts([[0], [1, 1, 1], [2, 2, 2], [3]])
    assert B.describe() == "0→R(−3)→R³(−2)→R³(−1)→R"


def test_quadratic_involution():
    res = minimal_free_resolution(I("x*y", "x*z", "y*z"))
    assert res.betti() == BettiTable.from_shifts([[0], [2, 2, 2], [3, 3]])
    assert res.is_complex() and res.is_minimal
    assert regularity(res) == 1
    assert is_cohen_macaulay(I("x*y", "x*z", "y*z"), res)


def test_hilbert_function_of_point():
    H = hilbert_series(I("x", "y"))
    assert [H.hilbert_function(k) for k in range(5)] == [1, 1, 1, 1, 1]
    assert H.dim_and_degree() == (1, 1)


def test_betti_json_round_trip():
    B = BettiTable.from_shifts([[0], [5, 5, 5], [8, 8, 8], [9]])
    assert BettiTable.from_json(B.to_json()) == B


def test_virtual_lists_agree_with_numerical_derivation():
    for d in (5, 6, 7):
        assert sorted(derive_virtual_resolutions(d)) == sorted(VIRTUAL_RESOLUTIONS[d])


def test_classify_virtual():
    assert classify_virtual_resolution(virtual_table(6, (11,), (10, 10, 9)), 6) == 2
    assert classify_virtual_resolution(BettiTable.from_shifts([[0], [5] * 3, [8, 7]]), 5) is None


def test_shift_gaps_rejects_bad_input():
    with pytest.raises(InvalidInput):
        check_shift_gaps(BettiTable.from_shifts([[0], [1, 1], [2]]))


@given(st.integers(0, 2 ** 32))
def test_hilbert_numerator_matches_betti(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 4)
    J = GradedIdeal([random_form(rng, R3, rng.randint(1, 3), 0.4) for _ in range(n)], R3)
    if J.is_zero():
        return
    H = J.hilbert_series()
    assert list(H.numerator) == minimal_free_resolution(J).betti().numerator()
    # independent oracle: dimension count in low degrees
    for k in range(5):
        assert H.hilbert_function(k) == comb(k + 2, 2) - len(J.degree_slice(k))


def random_height_two(rng):
    """Three forms of degree d in an ideal (g, h) of two general forms."""
    a, b = rng.randint(1, 3), rng.randint(1, 3)
    d = max(a, b) + rng.randint(0, 2)
    g, h = random_form(rng, R3, a), random_form(rng, R3, b)
    gens = [random_form(rng, R3, d - a) * g + random_form(rng, R3, d - b) * h for _ in range(3)]
    return GradedIdeal(gens, R3), d


@given(st.integers(0, 2 ** 32))
def test_shift_gaps_on_random_height_two(seed):
    rng = random.Random(seed)
    J, d = random_height_two(rng)
    if J.is_zero() or J.codim() != 2:
        return
    B = minimal_free_resolution(J).betti()
    if B.rank(1) != 3:
        return
    mid, last = B.shifts(2), B.shifts(3)
    assert all(D >= m + 1 for D, m in zip(last, mid))
    assert mid[-1] + mid[-2] == sum(D - m for D, m in zip(last, mid)) + 3 * d
    assert check_shift_gaps(B)
    dim, e = J.dim_and_degree()
    assert e == sum(comb(m, 2) for m in mid) - sum(comb(D, 2) for D in last) - 3 * comb(d, 2)
