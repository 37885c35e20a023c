import random

import pytest
from hypothesis import given, strategies as st

from planecremona.algebra import parse_poly
from planecremona.clusters import (ClusterNode, HomaloidalType, InvalidCluster, InvalidType,
                                   OutOfRange, WeightedCluster, check_equations_of_condition,
                                   effective_multiplicities, enumerate_homaloidal_types,
                                   fat_degree, fat_ideal, hudson_test, passes_virtually,
                                   proximity_matrix)
from planecremona.linalg import int_det
from planecremona.resolution import BettiTable, minimal_free_resolution
from conftest import K, R3


def types(d):
    return [str(t) for t in enumerate_homaloidal_types(d)]


def test_enumeration_low_degrees():
    assert types(2) == ["(2; 1^3)"]
    assert types(3) == ["(3; 2,1^4)"]
    assert types(4) == ["(4; 3,1^6)", "(4; 2^3,1^3)"]
    assert len(types(5)) == 4
    with pytest.raises(OutOfRange):
        enumerate_homaloidal_types(13)


def test_every_enumerated_type_satisfies_the_equations():
    for d in range(1, 9):
        for t in enumerate_homaloidal_types(d):
            assert check_equations_of_condition(t)


def test_hudson():
    assert hudson_test(HomaloidalType.parse("5; 3,3,1^6")) == "Improper"
    assert hudson_test(HomaloidalType.parse("(7; 5,3,2,2,1^6)")) == "Improper"
    assert hudson_test(HomaloidalType.parse("6; 4,2^4,1^3")) == "Proper"
    assert hudson_test(HomaloidalType(1, ())) == "Proper"
    with pytest.raises(InvalidType):
        hudson_test(HomaloidalType.parse("5; 3,3"))


TEXT = """\
p1 - 0:0:1 2
p1.1 p1 A:0 1
p1.1.1 p1.1 B 1
p2 - 1:0:0 1
"""


def test_cluster_text_round_trip():
    c = WeightedCluster.from_text(TEXT, K)
    assert WeightedCluster.from_text(c.to_text(), K).to_text() == c.to_text()
    assert c.multiplicities == [2, 1, 1, 1]
    # the B-chart point on E_{p1.1} also lies on the strict transform of E_{p1}
    assert ("p1.1.1", "p1") in c.proximity


def test_cluster_errors():
    with pytest.raises(InvalidCluster):
        WeightedCluster.from_text("p1 q A:0 1\n", K)
    with pytest.raises(InvalidCluster):
        WeightedCluster.from_text("p1 - 0:0:1\n", K)
    with pytest.raises(InvalidCluster):
        WeightedCluster.from_text("p1 - 0:0:1 1\np2 - 1:0:0 1\nprox p2 p1\n", K)


def test_virtual_passage():
    c = WeightedCluster.from_text("p1 - 0:0:1 2\np1.1 p1 A:0 1\n", K)
    # x^2 has a double point at p1 but its tangent cone misses the direction y = 0
    assert not passes_virtually(parse_poly("x^2", R3), c)
    assert passes_virtually(parse_poly("x^3 - x*y*z", R3), c)
    assert passes_virtually(parse_poly("x*y", R3), c)
    assert effective_multiplicities(parse_poly("x*y", R3), c) == [2, 1]


def test_fat_ideal_six_double_points():
    rng = random.Random(3)
    pts = [(rng.randrange(32003), rng.randrange(32003), 1) for _ in range(6)]
    J = fat_ideal(pts, [2] * 6, R3)
    assert J.dim_and_degree() == (1, fat_degree([2] * 6)) == (1, 18)
    assert minimal_free_resolution(J).betti() == BettiTable.from_shifts([[0], [5, 5, 5, 6], [7, 7, 7]])


@st.composite
def forests(draw):
    n = draw(st.integers(1, 10))
    lines = []
    ids = []
    for i in range(n):
        parent = draw(st.sampled_from(ids)) if ids and draw(st.booleans()) else None
        if parent is None:
            nid = f"p{i}"
            pt = (draw(st.integers(0, 5)), draw(st.integers(0, 5)), 1)
            lines.append(f"{nid} - {pt[0]}:{pt[1]}:{pt[2] + i * 7} 1")
        else:
            nid = f"{parent}.{i}"
            chart = draw(st.sampled_from(["A:0", "A:1", "B", "B"]))
            lines.append(f"{nid} {parent} {chart} 1")
        ids.append(nid)
    return "\n".join(lines) + "\n"


@given(forests())
def test_proximity_matrix_is_unimodular_with_nonnegative_inverse(text):
    try:
        c = WeightedCluster.from_text(text, K)
    except InvalidCluster:
        return  # sibling charts can repeat; those inputs are rejected elsewhere
    P, Pinv = proximity_matrix(c)
    n = len(P)
    assert int_det(P) == 1
    assert all(P[i][j] in (0, -1) for i in range(n) for j in range(n) if i != j)
    assert all(x >= 0 for row in Pinv for x in row)
    prod = [[sum(P[i][k] * Pinv[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    assert prod == [[int(i == j) for j in range(n)] for i in range(n)]
    # a point is proximate to at most two others
    assert all(sum(1 for q, _ in c.proximity if q == x) <= 2 for x in c.ids)
