import random

import pytest
from hypothesis import settings, HealthCheck, strategies as st

from planecremona.algebra import FieldConfig, PolyRing

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

K = FieldConfig(32003)
R3 = PolyRing(("x", "y", "z"), K)


def random_form(rng, ring, deg, density=0.7, small=False):
    p = ring.field.characteristic
    terms = []
    for m in ring.monomials_of_degree(deg):
        if rng.random() < density:
            c = rng.randint(-3, 3) if small or not p else rng.randrange(p)
            terms.append((m, c))
    return ring.from_terms(terms)


@st.composite
def forms(draw, ring=R3, max_deg=3, deg=None):
    d = draw(st.integers(1, max_deg)) if deg is None else deg
    seed = draw(st.integers(0, 2 ** 32))
    return random_form(random.Random(seed), ring, d)


@st.composite
def polys(draw, ring=R3, max_deg=3, max_terms=5):
    n = draw(st.integers(0, max_terms))
    terms = []
    for _ in range(n):
        e = tuple(draw(st.integers(0, max_deg)) for _ in range(ring.nvars))
        terms.append((e, draw(st.integers(-20, 20))))
    return ring.from_terms(terms)


@pytest.fixture
def R():
    return R3
