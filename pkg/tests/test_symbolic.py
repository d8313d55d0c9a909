import pytest
from hypothesis import given, settings

import oracles
from corpus import corpus
from sympow import (
    ContainmentSearchError,
    DomainError,
    Strategy,
    StrategyError,
    SymbolicOptions,
    VariablePrime,
    containment_problem,
    containment_problem_given_a,
    ideal_leq,
    is_symbolic_equal_ordinary,
    localize_at_prime,
    power,
    symbolic_defect,
    symbolic_power,
)
from test_core import ideals

MIN = SymbolicOptions(minimal_primes=True)


def I(ring, *gens):
    return ring.ideal(gens)


def test_localize_examples(xyz):
    J = I(xyz, (2, 0, 0), (1, 1, 0))
    x = VariablePrime.of(xyz, "x")
    assert localize_at_prime(J, x) == I(xyz, (1, 0, 0))
    # brute force: monomials m with m*y^k*z^k in J for some k
    brute = [
        m
        for m in oracles.box([2, 2, 2])
        if any(oracles.member(J.exponents, (m[0], m[1] + k, m[2] + k)) for k in range(3))
    ]
    assert oracles.minimal(brute) == {(1, 0, 0)}
    xy = VariablePrime.of(xyz, "xy")
    assert localize_at_prime(J, xy) == J
    assert localize_at_prime(I(xyz, (1, 1, 0)), x) == I(xyz, (1, 0, 0))


def test_symbolic_power_of_triangle(xyz, triangle):
    got = symbolic_power(triangle, 2)
    assert got == I(xyz, (1, 1, 1), (2, 2, 0), (2, 0, 2), (0, 2, 2))
    assert str(got) == "(x*y*z, x^2*y^2, x^2*z^2, y^2*z^2)"


def test_symbolic_power_of_prime(xyz):
    p = I(xyz, (1, 0, 0), (0, 1, 0))
    for n in range(1, 5):
        assert symbolic_power(p, n) == power(p, n)


def test_both_definitions(xyz):
    J = I(xyz, (2, 0, 0), (1, 1, 0))
    assert symbolic_power(J, 2) == I(xyz, (4, 0, 0), (3, 1, 0), (2, 2, 0))
    assert symbolic_power(J, 2) == power(J, 2)
    assert symbolic_power(J, 2, MIN) == I(xyz, (2, 0, 0))
    assert set(symbolic_power(J, 2).exponents) == oracles.symbolic_power(J.exponents, 2, 3)
    assert set(symbolic_power(J, 2, MIN).exponents) == oracles.symbolic_power(J.exponents, 2, 3, True)


def test_strategy_errors(xyz):
    J = I(xyz, (2, 0, 0), (1, 1, 0))
    with pytest.raises(StrategyError, match="squarefree"):
        symbolic_power(J, 2, SymbolicOptions(strategy="squarefree"))
    with pytest.raises(StrategyError, match="height"):
        symbolic_power(J, 2, SymbolicOptions(strategy=Strategy.SATURATION))
    with pytest.raises(DomainError):
        symbolic_power(J, 0)
    with pytest.raises(DomainError):
        symbolic_power(xyz.unit_ideal(), 2)


def test_equal_ordinary_examples(xyz, triangle):
    assert not is_symbolic_equal_ordinary(triangle, 2)
    assert is_symbolic_equal_ordinary(I(xyz, (1, 0, 0), (0, 1, 0)), 5)
    assert is_symbolic_equal_ordinary(I(xyz, (2, 0, 0), (1, 1, 0)), 2)


def test_containment_examples(xyz, triangle):
    p = I(xyz, (1, 0, 0), (0, 0, 1))
    assert containment_problem(triangle, 2) == 3
    assert containment_problem(triangle, 1) == 1
    assert all(containment_problem(p, b) == b for b in (1, 2, 3))
    assert containment_problem_given_a(triangle, 3) == 2
    assert containment_problem_given_a(triangle, 1) == 1
    assert all(containment_problem_given_a(p, a) == a for a in (1, 2, 3))
    with pytest.raises(DomainError):
        containment_problem(triangle, 0)


def test_containment_under_minimal_primes_can_fail(xyz):
    # I^(1) under Min is (x), which is not inside I = (x^2, xy)
    J = I(xyz, (2, 0, 0), (1, 1, 0))
    with pytest.raises(ContainmentSearchError):
        containment_problem_given_a(J, 1, MIN)
    # (x^a) ⊆ (x^3, xy)^b needs a >= 3b, beyond the big-height cap 2b
    K = I(xyz, (3, 0, 0), (1, 1, 0))
    with pytest.raises(ContainmentSearchError):
        containment_problem(K, 1, MIN)
    assert containment_problem(K, 1) == 1


def test_symbolic_defect_examples(xyz, triangle):
    assert symbolic_defect(triangle, 2) == 1
    assert symbolic_defect(I(xyz, (1, 0, 0), (0, 1, 0)), 3) == 0
    assert symbolic_defect(I(xyz, (2, 0, 0), (1, 1, 0)), 2) == 0


@pytest.mark.parametrize("ideal", corpus(25, 5, max_vars=3, max_gens=3, max_exp=2), ids=str)
@pytest.mark.parametrize("n", [1, 2])
def test_symbolic_power_matches_enumeration(ideal, n):
    if not ideal.is_proper_nonzero():
        return
    ex, nv = ideal.exponents, ideal.ring.n
    assert set(symbolic_power(ideal, n).exponents) == oracles.symbolic_power(ex, n, nv)
    assert set(symbolic_power(ideal, n, MIN).exponents) == oracles.symbolic_power(ex, n, nv, True)


@settings(max_examples=60, deadline=None)
@given(ideals(max_gens=4))
def test_symbolic_properties(ideal):
    if not ideal.is_proper_nonzero():
        return
    assert symbolic_power(ideal, 1) == ideal
    for n in (1, 2, 3):
        s = symbolic_power(ideal, n)
        assert ideal_leq(power(ideal, n), s)
        assert ideal_leq(s, symbolic_power(ideal, n, MIN))
        gen = symbolic_power(ideal, n, SymbolicOptions(strategy="general"))
        assert gen == s
        equal = is_symbolic_equal_ordinary(ideal, n)
        assert equal == (s == power(ideal, n))
        assert (symbolic_defect(ideal, n) == 0) == equal
    s1, s2 = symbolic_power(ideal, 1), symbolic_power(ideal, 2)
    assert ideal_leq(s1 * s2, symbolic_power(ideal, 3))
