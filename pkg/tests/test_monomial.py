from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from planecremona.algebra import PolyRing
from planecremona.cremona import HasFixedPart, NotCremona, is_birational
from planecremona.clusters import InvalidInput
from planecremona.monomial import (classify_monomial_map, closure_witness_formula,
                                   dejonquieres_forms, exponent_determinant, general_form,
                                   general_form_grid, in_newton_polyhedron, integral_closure_gens,
                                   monomial_in_ideal, monomial_map, monomial_power,
                                   non_cremona_family)

R = PolyRing()


def triples(d):
    for E in combinations(R.monomials_of_degree(d), 3):
        if all(min(e[j] for e in E) == 0 for j in range(3)):
            yield list(E)


def classify_or_none(E):
    try:
        return classify_monomial_map(E)
    except NotCremona:
        return None


def test_classifier_agrees_with_determinant_exhaustively():
    for d in range(1, 6):
        for E in triples(d):
            assert (classify_or_none(E) is not None) == (abs(exponent_determinant(E)) == d), E


def test_classifier_agrees_with_fiber_degree_low_degree():
    for d in (2, 3):
        for E in triples(d):
            F = monomial_map(E)
            if F.is_linearly_independent() and len({sum(e) for e in E}) == 1:
                assert (classify_or_none(E) is not None) == is_birational(F, trials=1), E


def test_grid():
    grid = general_form_grid(8)
    assert grid
    for d, a, b, c in grid:
        assert abs(exponent_determinant(general_form(d, a, b, c))) == d
        assert classify_monomial_map(general_form(d, a, b, c)).cremona


def test_examples():
    r = classify_monomial_map([(4, 0, 0), (1, 1, 2), (0, 1, 3)])
    assert r.form == "general" and r.params == {"d": 4, "a": 1, "b": 2, "c": 3}
    assert r.dejonquieres
    assert classify_monomial_map([(3, 0, 0), (2, 1, 0), (0, 2, 1)]).integrally_closed
    r = classify_monomial_map([(4, 0, 0), (3, 1, 0), (0, 3, 1)])
    assert not r.integrally_closed
    assert closure_witness_formula("monoid", 4) == (2, 2, 1)


def test_dejonquieres_sublist():
    for d in range(2, 9):
        assert all(classify_monomial_map(E).dejonquieres for E in dejonquieres_forms(d))
    assert not classify_monomial_map(general_form(5, 2, 1, 2)).dejonquieres


def test_integrally_closed_list():
    closed = []
    for d in range(2, 8):
        for E in dejonquieres_forms(d):
            if classify_monomial_map(E).integrally_closed:
                closed.append(sorted(E, reverse=True))
    assert closed == [sorted(E, reverse=True) for E in (
        [(1, 1, 0), (1, 0, 1), (0, 1, 1)], [(2, 0, 0), (1, 1, 0), (0, 1, 1)],
        [(3, 0, 0), (2, 1, 0), (0, 2, 1)], [(3, 0, 0), (1, 1, 1), (0, 1, 2)])]


@pytest.mark.parametrize("d", [4, 5, 6, 7])
@pytest.mark.parametrize("kind,index", [("monoid", 0), ("general", 1)])
def test_closure_witnesses(d, kind, index):
    E = dejonquieres_forms(d)[index]
    u = closure_witness_formula(kind, d)
    assert not monomial_in_ideal(u, E)
    assert monomial_in_ideal(tuple(2 * a for a in u), monomial_power(E, 2))
    assert in_newton_polyhedron(u, E)


def test_non_cremona_family():
    for d in (2, 3, 4):
        with pytest.raises(NotCremona):
            classify_monomial_map(non_cremona_family(d))


def test_input_errors():
    with pytest.raises(HasFixedPart):
        classify_monomial_map([(1, 1, 0), (1, 0, 1), (2, 0, 0)])
    with pytest.raises(InvalidInput):
        classify_monomial_map([(1, 0, 0), (0, 2, 0), (0, 0, 1)])


exps = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))


@given(st.lists(exps, min_size=1, max_size=4), exps, st.integers(1, 3))
def test_closure_membership_by_powers(gens, v, k):
    # v^k in I^k implies v in the closure
    if monomial_in_ideal(tuple(k * a for a in v), monomial_power(gens, k)):
        assert in_newton_polyhedron(v, gens)
    if monomial_in_ideal(v, gens):
        assert in_newton_polyhedron(v, gens)


@given(st.lists(exps, min_size=1, max_size=3))
def test_closure_contains_ideal(gens):
    cl = integral_closure_gens(gens)
    assert all(monomial_in_ideal(g, cl) for g in gens)
