"""Acceptance criteria 1-9; each test records one PASS/FAIL summary line."""

import io
import random
from fractions import Fraction
from itertools import product
from pathlib import Path

import oracles
from corpus import corpus
from sympow import (
    AmbientRing,
    Strategy,
    SymbolicOptions,
    alpha_sequence,
    associated_primes,
    big_height,
    containment_problem,
    containment_problem_given_a,
    h_to_v,
    ideal_leq,
    initial_degree,
    intersect,
    is_squarefree,
    is_symbolic_equal_ordinary,
    lower_bound_resurgence,
    newton_polyhedron,
    parse_ideal,
    polyhedron_stats,
    primary_decomposition,
    radical,
    symbolic_defect,
    symbolic_polyhedron,
    symbolic_power,
    v_to_h,
    waldschmidt_exact,
)
from sympow.cli import run
from sympow.linalg import dot
from sympow.lp import Status, minimize
from sympow.symbolic import _SymbolicContext

RING = AmbientRing(("x", "y", "z"))
TRIANGLE_GENS = [(1, 1, 0), (1, 0, 1), (0, 1, 1)]
TRIANGLE = RING.ideal(TRIANGLE_GENS)
GOLDEN = Path(__file__).parent / "golden"

CORPUS = corpus(250, 2024)
SQUAREFREE = [i for i in corpus(140, 4048, squarefree=True) if i.is_proper_nonzero()]
# wider rings, so that big heights 2 and 3 are common
ELS = SQUAREFREE + corpus(150, 7, squarefree=True, min_vars=3, max_vars=5, max_gens=6)


def is_primary(component):
    used = {i for v in component.exponents for i, e in enumerate(v) if e}
    pure = {i for v in component.exponents if sum(1 for e in v if e) == 1 for i, e in enumerate(v) if e}
    return used == pure


def test_criterion_1_symbolic_power(criterion):
    with criterion("1 symbolic power of (xy,xz,yz), n=2", 1.0):
        got = symbolic_power(TRIANGLE, 2)
        assert got.exponents == ((1, 1, 1), (2, 2, 0), (2, 0, 2), (0, 2, 2))


def test_criterion_2_symbolic_polyhedron(criterion):
    with criterion("2 symbolic polyhedron stats of (xy,xz,yz)", 1.0):
        s = polyhedron_stats(symbolic_polyhedron(TRIANGLE))
        assert s.as_dict() == {"ambient": 3, "dim": 3, "lineality": 0, "facets": 6, "rays": 3, "vertices": 4}


def test_criterion_3_waldschmidt(criterion):
    with criterion("3 exact Waldschmidt constant 3/2 with witness", 1.0):
        report = waldschmidt_exact(TRIANGLE)
        half = Fraction(1, 2)
        assert report.value == Fraction(3, 2) and isinstance(report.value, Fraction)
        assert report.witness == (half, half, half)
        poly = symbolic_polyhedron(TRIANGLE)
        assert all(dot(a, report.witness) >= b for a, b in poly.inequalities)
        assert sum(report.witness) == report.value


def _oracle_values():
    g = TRIANGLE_GENS
    sym = {m: oracles.symbolic_power(g, m, 3) for m in (1, 2, 3)}
    least = {
        b: next(a for a in range(b, 3 * b + 1) if oracles.contained(sym.get(a) or oracles.symbolic_power(g, a, 3), oracles.power_gens(g, b)))
        for b in (1, 2)
    }
    given_a = max(b for b in range(1, 4) if oracles.contained(sym[3], oracles.power_gens(g, b)))
    defect = sum(1 for v in sym[2] if not oracles.member_power(g, 2, v))
    alphas = [Fraction(min(map(sum, sym[m])), m) for m in (1, 2, 3)]
    resurgence = max(Fraction(least[r] - 1, r) for r in (1, 2))
    k = [(2, 0), (1, 1)]
    std = oracles.symbolic_power(k, 2, 2)
    mins = oracles.symbolic_power(k, 2, 2, use_minimal=True)
    return least[2], given_a, defect, resurgence, alphas, std, mins


def test_criterion_4_derived_values(criterion):
    least, given_a, defect, resurgence, alphas, std, mins = _oracle_values()
    # the pinned values, re-derived by enumeration just above
    assert (least, given_a, defect, resurgence) == (3, 2, 1, 1)
    assert alphas == [2, Fraction(3, 2), Fraction(5, 3)]
    assert std == {(4, 0), (3, 1), (2, 2)} and mins == {(2, 0)}
    xy = AmbientRing(("x", "y"))
    k = xy.ideal([(2, 0), (1, 1)])
    with criterion("4 derived containment/defect/resurgence/alpha values", 5.0):
        assert containment_problem(TRIANGLE, 2) == 3
        assert containment_problem_given_a(TRIANGLE, 3) == 2
        assert symbolic_defect(TRIANGLE, 2) == 1
        assert lower_bound_resurgence(TRIANGLE, 2) == 1
        assert alpha_sequence(TRIANGLE, 3) == [2, Fraction(3, 2), Fraction(5, 3)]
        assert symbolic_power(k, 2) == xy.ideal([(4, 0), (3, 1), (2, 2)])
        assert symbolic_power(k, 2, SymbolicOptions(minimal_primes=True)) == xy.ideal([(2, 0)])


def test_criterion_5_decomposition(criterion):
    assert len(CORPUS) >= 200
    with criterion(f"5 decomposition soundness on {len(CORPUS)} random ideals", 60.0):
        for ideal in CORPUS:
            dec = primary_decomposition(ideal)
            assert dec.intersection() == ideal
            assert all(is_primary(c.ideal) and radical(c.ideal) == c.radical.ideal() for c in dec)
            radicals = [c.radical for c in dec]
            assert len(set(radicals)) == len(radicals)
            comps = [c.ideal for c in dec]
            for i in range(len(comps)):
                rest = comps[:i] + comps[i + 1:]
                if rest:
                    assert intersect(*rest) != ideal


def test_criterion_6_symbolic_properties(criterion):
    general = SymbolicOptions(strategy=Strategy.GENERAL)
    with criterion(f"6 symbolic-power properties on {len(CORPUS)} random ideals", 120.0):
        for ideal in CORPUS:
            ctx = _SymbolicContext(ideal, None)
            assert ctx.symbolic(1) == ideal
            for n in (1, 2, 3):
                assert ideal_leq(ctx.ordinary(n), ctx.symbolic(n))
                assert is_symbolic_equal_ordinary(ideal, n) == (ctx.symbolic(n) == ctx.ordinary(n))
            for a, b in product((1, 2), repeat=2):
                assert ideal_leq(ctx.symbolic(a) * ctx.symbolic(b), ctx.symbolic(a + b))
            if ctx.strategy() is not Strategy.GENERAL:
                gctx = _SymbolicContext(ideal, general)
                for n in (1, 2, 3):
                    assert gctx.symbolic(n) == ctx.symbolic(n)


def test_criterion_7_els_containment(criterion):
    assert len(ELS) >= 100 and all(i.is_proper_nonzero() and is_squarefree(i) for i in ELS)
    with criterion(f"7 I^(hm) in I^m on {len(ELS)} squarefree ideals", 120.0):
        for ideal in ELS:
            h = big_height(ideal)
            ctx = _SymbolicContext(ideal, None)
            for m in (1, 2, 3):
                assert ideal_leq(ctx.symbolic(h * m), ctx.ordinary(m))


def _polyhedra():
    out = []
    for ideal in SQUAREFREE[:40]:
        out.append(symbolic_polyhedron(ideal))
    for ideal in CORPUS[:30]:
        out.append(newton_polyhedron(ideal))
        out.append(symbolic_polyhedron(ideal))
    return out


def test_criterion_8_geometry(criterion):
    rng = random.Random(8)
    with criterion("8 polyhedra round trips, LP vs vertices, Waldschmidt bounds", 120.0):
        polys = _polyhedra()
        assert len(polys) >= 50
        for p in polys:
            v = h_to_v(p)
            back = v_to_h(v)
            assert back == p
            assert h_to_v(back) == v
            for _ in range(3):
                c = tuple(rng.randint(-2, 3) for _ in range(p.dim))
                bounded = all(dot(c, r) >= 0 for r in v.rays) and all(dot(c, l) == 0 for l in v.lineality)
                res = minimize(p, c)
                if bounded:
                    assert res.status is Status.OPTIMAL
                    assert res.value == min(dot(c, x) for x in v.vertices)
                else:
                    assert res.status is Status.UNBOUNDED
        for ideal in SQUAREFREE:
            p = symbolic_polyhedron(ideal)
            ctx = _SymbolicContext(ideal, None)
            for m in (1, 2, 3):
                assert all(p.contains_point([Fraction(e, m) for e in g]) for g in ctx.symbolic(m).exponents)
            w = waldschmidt_exact(ideal).value
            assert all(w <= a for a in alpha_sequence(ideal, 5))
            assert is_squarefree(ideal)
            assert w >= Fraction(initial_degree(ideal), max(q.height for q in associated_primes(ideal)))


def _cli(argv):
    out = io.BytesIO()
    code = run(argv, stdin=io.StringIO(), stdout=out, stderr=io.StringIO())
    return code, out.getvalue()


def test_criterion_9_cli_golden(criterion):
    tri = "(x*y,x*z,y*z)"
    pinned = {
        "symbolic_power.json": ["symbolic-power", "--vars", "x,y,z", tri, "2", "--format", "json"],
        "waldschmidt.json": ["waldschmidt", "--exact", "--vars", "x,y,z", tri, "--format", "json"],
        "polyhedron.json": ["polyhedron", "--vars", "x,y,z", tri, "--format", "json"],
    }
    with criterion("9 CLI golden outputs and parse/emit round trips", None):
        for name, argv in pinned.items():
            code, out = _cli(argv)
            assert code == 0 and out == (GOLDEN / name).read_bytes()
        for ideal in CORPUS + SQUAREFREE:
            names = list(ideal.ring.variables)
            code, out = _cli(["symbolic-power", "--vars", ",".join(names), str(ideal), "1"])
            assert code == 0
            assert parse_ideal(out.decode().strip(), names).ideal() == ideal
