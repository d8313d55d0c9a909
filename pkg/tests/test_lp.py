from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import corpus
from sympow import HPolyhedron, h_to_v, is_feasible, is_redundant, newton_polyhedron, solve_lp
from sympow.lp import LPProblem, Sense, Status, minimize, solve_system
from sympow.linalg import dot

TRIANGLE_H = HPolyhedron.from_rows(
    3,
    [((1, 0, 0), 0), ((0, 1, 0), 0), ((0, 0, 1), 0), ((1, 1, 0), 1), ((1, 0, 1), 1), ((0, 1, 1), 1)],
)
HALF = Fraction(1, 2)


def test_waldschmidt_lp_example():
    res = minimize(TRIANGLE_H, (1, 1, 1))
    assert res.status is Status.OPTIMAL
    assert res.value == Fraction(3, 2)
    assert res.witness == (HALF, HALF, HALF)
    assert all(type(x) is Fraction for x in res.witness)


def test_unbounded_with_ray():
    res = solve_lp(LPProblem(HPolyhedron.from_rows(1, [((1,), 0)]), (-1,)))
    assert res.status is Status.UNBOUNDED
    assert res.ray == (1,)


def test_infeasible():
    p = HPolyhedron.from_rows(1, [((1,), 1), ((-1,), 0)])
    for c in [(1,), (-1,), (0,)]:
        assert solve_lp(LPProblem(p, c)).status is Status.INFEASIBLE
    assert not is_feasible(p)


def test_maximize_sense():
    box = HPolyhedron.from_rows(2, [((1, 0), 0), ((0, 1), 0), ((-1, 0), -2), ((0, -1), -3)])
    res = solve_lp(LPProblem(box, (1, 1), Sense.MAXIMIZE))
    assert res.value == 5 and res.witness == (2, 3)


def test_objective_length_checked():
    with pytest.raises(ValueError):
        LPProblem(TRIANGLE_H, (1, 1))


def test_feasibility_redundancy_examples():
    assert is_feasible(HPolyhedron.orthant(3))
    p = HPolyhedron.from_rows(1, [((1,), 0), ((1,), -1)])
    assert is_redundant(p, 1)
    assert not is_redundant(p, 0)
    assert not any(is_redundant(TRIANGLE_H, i) for i in range(6))
    with pytest.raises(IndexError):
        is_redundant(p, 5)


def test_empty_system():
    assert solve_system([], [], [0, 0]).status is Status.OPTIMAL
    assert solve_system([], [], [1, 0]).status is Status.UNBOUNDED


def test_degenerate_and_redundant_rows():
    # the same face described three times plus a dependent equality pair
    a = [(1, 1), (2, 2), (1, 1), (1, -1), (-1, 1), (1, 0), (0, 1)]
    b = [1, 2, 1, 0, 0, 0, 0]
    res = solve_system(a, b, (1, 2))
    assert res.status is Status.OPTIMAL and res.value == Fraction(3, 2)


@pytest.mark.parametrize("ideal", [i for i in corpus(30, 21, max_vars=3) if i.is_proper_nonzero()], ids=str)
def test_lp_matches_vertex_minimum(ideal):
    p = newton_polyhedron(ideal)
    v = h_to_v(p)
    for c in [(1,) * p.dim, tuple(range(1, p.dim + 1)), tuple(reversed(range(p.dim)))]:
        res = minimize(p, c)
        assert res.status is Status.OPTIMAL
        assert res.value == min(dot(c, x) for x in v.vertices)
        assert p.contains_point(res.witness)
        assert dot(c, res.witness) == res.value


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.tuples(st.tuples(*[st.integers(-3, 3)] * 3), st.integers(-4, 4)), min_size=1, max_size=7),
    st.tuples(*[st.integers(-3, 3)] * 3),
)
def test_certificates(rows, c):
    p = HPolyhedron.from_rows(3, rows)
    res = minimize(p, c)
    a = [r[0] for r in rows]
    if res.status is Status.OPTIMAL:
        assert p.contains_point(res.witness)
        assert dot(c, res.witness) == res.value
    elif res.status is Status.UNBOUNDED:
        assert p.contains_point(res.witness)
        assert all(dot(ai, res.ray) >= 0 for ai in a)
        assert dot(c, res.ray) < 0
    else:
        assert not is_feasible(p)
    assert minimize(p, c) == res
