import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from planecremona.algebra import FieldConfig
from planecremona.clusters import HomaloidalType, NonRationalPoint
from planecremona.cremona import (ConstructionFailed, DepthExceeded, HasFixedPart, PlaneRationalMap,
                                  InvalidInput, analyze_base_ideal, base_ideal, compute_characteristic,
                                  construct_from_fat_points, example_sextic, fiber_degree,
                                  generic_quartic_determinantal, inclusion_chain_check, is_birational,
                                  is_linear_type_by_content, make_dejonquieres,
                                  power_saturation_profile, proper_base_points, quartic_net,
                                  quartic_square_test, rees_ideal_by_elimination, symmetric_quintic,
                                  sylvester_rees, z_monoid_parts)
from planecremona.groebner import GradedIdeal
from planecremona.resolution import BettiTable, minimal_free_resolution


def M(text, field=None):
    return PlaneRationalMap.parse(text, field)


def T(text):
    return str(HomaloidalType.parse(text))


# -- maps and base ideals

def test_parse_and_validation():
    F = M("xy : xz\nyz")
    assert F.d == 2 and F(1, 2, 3) == (2, 3, 6)
    with pytest.raises(InvalidInput):
        M("x : y^2 : z")
    with pytest.raises(InvalidInput):
        M("x : y")


def test_base_ideal_codimension():
    assert base_ideal(M("xy : xz : yz")).codim() == 2
    assert base_ideal(M("x^2 : y^2 : z^2")).codim() == 3


def test_fixed_part():
    F = M("x^2*y : x^2*z : x*y*z")
    assert F.has_fixed_part()
    with pytest.raises(HasFixedPart):
        base_ideal(F)
    G = F.normalized()
    assert G.gcd_removed and G.d == 2
    assert base_ideal(G).codim() == 2


# -- birationality

def test_quadratic_involution_is_birational():
    assert is_birational(M("xy : xz : yz"))


def test_squares_have_four_point_fibers():
    # brute force over F_101: the fiber of (x^2 : y^2 : z^2) through P is {(±a : ±b : c)}
    K = FieldConfig(101)
    F = M("x^2 : y^2 : z^2", K)
    P = (3, 7, 1)
    q = F(*P)
    pts = [(1, a, b) for a in range(101) for b in range(101)] + [(0, 1, b) for b in range(101)] + [(0, 0, 1)]
    fiber = [Q for Q in pts
             if all((F(*Q)[i] * q[j] - F(*Q)[j] * q[i]) % 101 == 0 for i in range(3) for j in range(3))
             and any(F(*Q))]
    assert len(fiber) == 4
    assert fiber_degree(F, point=P) == 4
    assert not is_birational(F)


def test_non_cremona_monomial_family():
    assert not is_birational(M("x^2*y^2 : x^2*z^2 : y^2*z^2"))


# -- characteristic

def test_characteristic_of_quadratic_involution():
    ch = compute_characteristic(M("xy : xz : yz"))
    assert str(ch) == T("2; 1,1,1")
    assert sorted(n.point for n in ch.cluster.nodes) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_characteristic_of_monoid_map(d):
    F = M(f"x^{d} : x^{d - 1}*y : y^{d - 1}*z")
    ch = compute_characteristic(F)
    assert str(ch) == str(HomaloidalType(d, (d - 1,) + (1,) * (2 * d - 2)))
    mus = {n.point: n.mu for n in ch.cluster.proper_nodes()}
    assert mus[(0, 0, 1)] == d - 1 and mus[(0, 1, 0)] == 1


def test_non_rational_base_point():
    # -1 is not a square mod 32003
    with pytest.raises(NonRationalPoint):
        compute_characteristic(M("x^2 + y^2 : x*z : y*z"))


def test_depth_cap():
    with pytest.raises(DepthExceeded):
        compute_characteristic(M("x^3 : x^2*y : y^2*z"), depth_cap=1)


def test_sextic():
    F = example_sextic()
    assert base_ideal(F).codim() == 2 and F.d == 6
    assert is_birational(F)
    assert str(compute_characteristic(F)) == T("6; 4,2^4,1^3")
    assert analyze_base_ideal(F, cremona=True).saturated


def cremona_instances():
    kinds = st.sampled_from(["dj", "fat", "monoid"])
    return st.tuples(kinds, st.integers(2, 5), st.integers(0, 10 ** 6))


FAT_TYPES = {2: [1, 1, 1], 3: [2, 1, 1, 1, 1], 4: [2, 2, 2, 1, 1, 1], 5: [2] * 6}


def build(kind, d, seed):
    if kind == "dj":
        return make_dejonquieres(d, seed=seed)
    if kind == "fat":
        return construct_from_fat_points(FAT_TYPES[d], d, None, seed).map
    return M(f"x^{d} : x^{d - 1}*y : y^{d - 1}*z")


@given(cremona_instances())
def test_equations_of_condition_on_birational_maps(inst):
    F = build(*inst)
    if not is_birational(F, trials=1, seed=inst[2]):
        return
    ch = compute_characteristic(F, seed=inst[2])
    assert ch.satisfies_equations_of_condition()
    t = ch.homaloidal_type
    if t.d <= 3:
        assert t.mu == (t.d - 1,) + (1,) * (2 * t.d - 2)
    if t.d <= 4:
        assert analyze_base_ideal(F, cremona=True, seed=inst[2]).saturated


# -- de Jonquieres maps

@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_dejonquieres_construction(d):
    F = make_dejonquieres(d, seed=11)
    f, q = F.meta["f"], F.meta["q"]
    x, y, z = F.ring.gens()
    assert F.coordinates == (f, x * q, y * q)
    a, b = z_monoid_parts(f)
    assert a.degree() == d - 1 and b.degree() == d
    for P in F.meta["points"]:
        assert f.evaluate(P) == 0 and q.evaluate(P) == 0
    R = analyze_base_ideal(F, cremona=True)
    assert R.betti == BettiTable.from_shifts([[0], [d] * 3, [2 * d - 1, d + 1]])
    assert R.e == d * (d - 1) + 1 and R.saturated and R.cohen_macaulay
    assert is_linear_type_by_content(F) == (d == 2)


def test_dejonquieres_is_reproducible():
    assert make_dejonquieres(4, seed=3).to_text() == make_dejonquieres(4, seed=3).to_text()
    assert make_dejonquieres(4, seed=3).to_text() != make_dejonquieres(4, seed=4).to_text()


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_sylvester_forms_generate_the_rees_ideal(d):
    F = make_dejonquieres(d, seed=d)
    E = sylvester_rees(F)
    assert E.bidegrees == [(1, 1)] + [(d - k, k) for k in range(1, d)]
    images = F.ring.gens() + list(F.coordinates)
    assert all(not g.substitute(images) for g in E.generators)
    J = rees_ideal_by_elimination(F)
    assert GradedIdeal(E.generators, E.ring) == GradedIdeal(list(J.generators), E.ring)


def test_sylvester_needs_dejonquieres_shape():
    with pytest.raises(ConstructionFailed):
        sylvester_rees(construct_from_fat_points([2] * 6, 5, None, 1).map)


@pytest.mark.parametrize("d", [2, 3])
def test_power_profile(d):
    F = make_dejonquieres(d, seed=7)
    assert power_saturation_profile(F) == [(j, j < d) for j in range(1, d + 1)]


def test_power_profile_guards():
    with pytest.raises(InvalidInput):
        power_saturation_profile(make_dejonquieres(2, seed=1), 3)
    with pytest.raises(InvalidInput):
        power_saturation_profile(M("x^2 : y^2 : z^2"), 1)


# -- analysis and inclusion chain

def test_symmetric_quintic():
    C = symmetric_quintic(seed=5)
    R = analyze_base_ideal(C.map, cremona=True)
    assert R.betti.describe() == "0→R(−9)→R³(−8)→R³(−5)→R"
    assert (R.saturated, R.e, R.st, R.reg, R.beg, R.end) == (False, 18, 1, 6, 6, 6)
    assert not R.cohen_macaulay
    assert R.all_passed, [c for c in R.checks if not c.passed]
    inc = inclusion_chain_check(C.map)
    assert inc.links["sat_equals_fat"] and inc.links["degree_d_equal"]


def test_dejonquieres_inclusion_chain():
    F = make_dejonquieres(4, seed=2)
    inc = inclusion_chain_check(F)
    assert inc.links["I_in_sat"] and inc.links["sat_in_fat"]
    assert not inc.links["sat_equals_fat"]
    assert (inc.links["e_I"], inc.links["e_fat"]) == (13, 12)
    assert inc.links["divisorial_cover"] == "not computed"


def test_monomial_inclusion_chain():
    inc = inclusion_chain_check(M("x^4 : x^3*y : y^3*z"))
    assert inc.links["closure_in_fat"] is True


def test_base_points_of_dejonquieres_map():
    F = make_dejonquieres(3, seed=9)
    pts = proper_base_points(F)
    assert (0, 0, 1) in pts and len(pts) == 5


# -- quartic nets

def test_quartic_square_test():
    C = quartic_net(seed=4)
    I = base_ideal(C.map)
    assert I == C.fat
    assert I.dim_and_degree()[1] == 12
    assert quartic_square_test(I) and is_birational(C.map)
    J = generic_quartic_determinantal(seed=4)
    assert not quartic_square_test(J)
    with pytest.raises(InvalidInput):
        quartic_square_test(base_ideal(M("xy : xz : yz")))
