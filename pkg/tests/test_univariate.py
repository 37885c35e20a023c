import sympy
from fractions import Fraction

from sympy.polys.subresultants_qq_zz import sylvester

from hypothesis import given, strategies as st

from planecremona import univariate as U
from planecremona.algebra import FieldConfig

K = FieldConfig(32003)
QQ = FieldConfig.rationals()
coeff_lists = st.lists(st.integers(-50, 50), min_size=1, max_size=6)


T = sympy.Symbol("t")


def sylvester_resultant(f, g):
    """Determinant of the Sylvester matrix (sympy.resultant differs in sign for some
    degree pairs)."""
    fe = sum(sympy.Integer(a) * T ** i for i, a in enumerate(f))
    ge = sum(sympy.Integer(a) * T ** i for i, a in enumerate(g))
    return int(sylvester(fe, ge, T).det())


@given(coeff_lists, coeff_lists)
def test_resultant_matches_sympy_over_q(f, g):
    f, g = U.trim(f), U.trim(g)
    if U.deg(f) < 1 or U.deg(g) < 1:
        return
    assert U.resultant(f, g, QQ) == Fraction(sylvester_resultant(f, g))


@given(coeff_lists, coeff_lists)
def test_resultant_matches_sympy_mod_p(f, g):
    f = U.trim([a % 32003 for a in f])
    g = U.trim([a % 32003 for a in g])
    if U.deg(f) < 1 or U.deg(g) < 1:
        return
    assert U.resultant(f, g, K) == sylvester_resultant(f, g) % 32003


@given(st.lists(st.integers(0, 32002), min_size=1, max_size=5), st.integers(0, 1000))
def test_roots_of_split_polynomial(rts, seed):
    f = U.from_roots(rts, K)
    f = U.mul(f, [1, 0, 1], K)  # -1 is not a square mod 32003
    assert U.roots(f, K, seed) == sorted(set(rts))
    assert not U.all_roots_rational(f, K)


def test_roots_over_q():
    f = U.from_roots([Fraction(1, 2), Fraction(-3)], QQ)
    assert U.roots(f, QQ) == [Fraction(-3), Fraction(1, 2)]
    assert U.roots([-2, 0, 1], QQ) == []


def test_gcd():
    a = U.from_roots([1, 2, 3], K)
    b = U.from_roots([2, 3, 4], K)
    assert U.gcd(a, b, K) == U.from_roots([2, 3], K)
