import random

import pytest
from hypothesis import given, strategies as st

from planecremona.algebra import FieldConfig, MonomialOrder, PolyRing, parse_poly
from planecremona.groebner import (GradedIdeal, colon, eliminate, intersect, saturation,
                                   is_saturated, gb_is_valid)
from conftest import R3, random_form


def I(*gens, ring=R3):
    return GradedIdeal([parse_poly(g, ring) for g in gens], ring)


# naive division, independent of the kernel
def naive_reduce(f, basis, order):
    R = f.ring
    K = R.field
    lead = [g.leading_term(order) for g in basis]
    r = R.zero()
    while f:
        e, c = f.leading_term(order)
        for g, (ge, gc) in zip(basis, lead):
            if all(a >= b for a, b in zip(e, ge)):
                q = R.monomial(tuple(a - b for a, b in zip(e, ge)), K.normalize(c * K.inv(gc)))
                f = f - q * g
                break
        else:
            t = R.monomial(e, c)
            r = r + t
            f = f - t
    return r


def spoly(f, g, order):
    R = f.ring
    K = R.field
    (a, ca), (b, cb) = f.leading_term(order), g.leading_term(order)
    l = tuple(max(x, y) for x, y in zip(a, b))
    mf = R.monomial(tuple(x - y for x, y in zip(l, a)), K.inv(ca))
    mg = R.monomial(tuple(x - y for x, y in zip(l, b)), K.inv(cb))
    return mf * f - mg * g


@given(st.integers(0, 2 ** 32), st.integers(2, 3), st.sampled_from(["degrevlex", "lex"]))
def test_s_polynomials_reduce_to_zero(seed, n, kind):
    rng = random.Random(seed)
    order = MonomialOrder(kind)
    J = GradedIdeal([random_form(rng, R3, rng.randint(1, 3), 0.5) for _ in range(n)], R3)
    if J.is_zero():
        return
    G = J.gb(order)
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            assert not naive_reduce(spoly(G[i], G[j], order), G, order)
    for g in J.generators:
        assert not naive_reduce(g, G, order)


def test_gb_validity_and_membership():
    J = I("x^2 - y*z", "x*y - z^2")
    assert gb_is_valid(J)
    assert J.contains(parse_poly("x^3 - x*y*z", R3))
    assert not J.contains(parse_poly("x", R3))


def test_colon_and_saturation():
    m = GradedIdeal.maximal(R3)
    J = I("x^2", "x*y", "x*z")  # (x) ∩ m^2
    S, s = saturation(J)
    assert S == I("x")
    assert s == 1
    assert colon(J, m) == I("x")
    assert is_saturated(I("x*y", "x*z", "y*z"))


def test_intersection():
    J = intersect([I("x", "y"), I("y", "z")])
    assert J == I("y", "x*z")


def test_eliminate():
    R = PolyRing(("s", "x", "y"), FieldConfig(32003))
    J = GradedIdeal([parse_poly("x - s^2", R), parse_poly("y - s^3", R)], R)
    E = eliminate(J, ["s"])
    assert len(E.generators) == 1
    assert E.generators[0].degree() == 3


def test_lift():
    J = I("x^2", "y^2")
    f = parse_poly("x^2*z + 3*y^3", R3)
    c = J.lift(f)
    assert sum((a * g for a, g in zip(c, J.generators)), R3.zero()) == f


def test_minimal_generators_and_power():
    J = I("x", "y", "x + y")
    assert len(J.minimal_generators()) == 2
    assert J.power(2) == I("x^2", "x*y", "y^2")
    assert len(J.degree_slice(2)) == 5  # x^2, xy, xz, y^2, yz
