"""Exact rational polyhedra.

An :class:`HPolyhedron` is ``{x : a·x >= b for every (a, b)}``. Canonical
H-forms have primitive integer rows, no duplicates, no redundant rows
(checked by LP) and a fixed row order, so full-dimensional polyhedra
compare equal iff their canonical forms do.

V-forms come from exhaustive basis enumeration; H-forms of hulls come
from Fourier–Motzkin elimination of the combination multipliers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from . import lp
from .core import MonomialIdeal
from .decomposition import _require_proper, maximal_associated_primes, minimal_primes
from .errors import DomainError
from .linalg import dot, nullspace, primitive, rank, solve_square
from .symbolic import DEFAULT_OPTIONS, localize_at_prime

Rational = Fraction


@dataclass(frozen=True)
class HPolyhedron:
    dim: int
    inequalities: tuple[tuple[tuple, object], ...]

    @classmethod
    def from_rows(cls, dim: int, rows: Iterable) -> "HPolyhedron":
        """Build from ``(a, b)`` pairs meaning ``a·x >= b``; not canonicalized."""
        ineqs = []
        for a, b in rows:
            a = tuple(a)
            if len(a) != dim:
                raise ValueError("inequality length differs from the dimension")
            ineqs.append((a, b))
        return cls(dim, tuple(ineqs))

    @classmethod
    def orthant(cls, dim: int) -> "HPolyhedron":
        return canonicalize(cls(dim, tuple((_unit(dim, i), 0) for i in range(dim))))

    def contains_point(self, x: Sequence) -> bool:
        return all(dot(a, x) >= b for a, b in self.inequalities)

    def is_empty(self) -> bool:
        return not lp.is_feasible(self)

    def to_v(self) -> "VPolyhedron":
        return h_to_v(self)

    def stats(self) -> "PolyhedronStats":
        return polyhedron_stats(self)


@dataclass(frozen=True)
class VPolyhedron:
    """Vertices, extreme rays and a lineality basis; ``empty`` flags the empty set."""

    dim: int
    vertices: tuple[tuple[Fraction, ...], ...]
    rays: tuple[tuple[int, ...], ...] = ()
    lineality: tuple[tuple[int, ...], ...] = ()
    empty: bool = False


@dataclass(frozen=True)
class PolyhedronStats:
    ambient_dim: int
    dim: int
    lineality_dim: int
    facets: int
    vertices: int
    rays: int

    def as_dict(self) -> dict:
        return {
            "ambient": self.ambient_dim,
            "dim": self.dim,
            "lineality": self.lineality_dim,
            "facets": self.facets,
            "rays": self.rays,
            "vertices": self.vertices,
        }


def _unit(dim: int, i: int) -> tuple[int, ...]:
    return tuple(1 if j == i else 0 for j in range(dim))


def _lex_positive(vec):
    for x in vec:
        if x:
            return vec if x > 0 else tuple(-y for y in vec)
    return vec


def _ineq_key(row):
    a, b = row
    return (sum(1 for x in a if x), tuple(-x for x in a), b)


def _normalize_rows(rows):
    """Primitive integer rows with duplicates merged (strongest bound kept).

    Returns ``None`` if some row reads ``0 >= b`` with ``b > 0``.
    """
    best = {}
    for a, b in rows:
        vec = primitive(tuple(a) + (b,))
        a, b = vec[:-1], vec[-1]
        if not any(a):
            if b > 0:
                return None
            continue
        if a not in best or b > best[a]:
            best[a] = b
    return sorted(best.items(), key=_ineq_key)


def _empty(dim: int) -> HPolyhedron:
    return HPolyhedron(dim, (((0,) * dim, 1),))


def _prune(rows, fixed=()):
    """Drop redundant rows one at a time, in order; ``fixed`` rows always stay."""
    rows = list(rows)
    fixed = list(fixed)
    i = 0
    while i < len(rows):
        a = [r[0] for r in rows] + [f[0] for f in fixed]
        b = [r[1] for r in rows] + [f[1] for f in fixed]
        if lp.row_redundant(a, b, i):
            del rows[i]
        else:
            i += 1
    return rows


def canonicalize(p: HPolyhedron) -> HPolyhedron:
    rows = _normalize_rows(p.inequalities)
    if rows is None:
        return _empty(p.dim)
    if rows and not lp.system_feasible([r[0] for r in rows], [r[1] for r in rows]):
        return _empty(p.dim)
    return HPolyhedron(p.dim, tuple(_prune(rows)))


def is_empty_form(p: HPolyhedron) -> bool:
    return any(not any(a) and b > 0 for a, b in p.inequalities)


def intersect_h(polyhedra: Sequence[HPolyhedron]) -> HPolyhedron:
    if not polyhedra:
        raise ValueError("intersect_h needs at least one polyhedron")
    dim = polyhedra[0].dim
    if any(p.dim != dim for p in polyhedra):
        raise ValueError("dimension mismatch in intersect_h")
    return canonicalize(HPolyhedron(dim, tuple(q for p in polyhedra for q in p.inequalities)))


# -- Fourier–Motzkin projection ---------------------------------------------


def _normalize_eq(row):
    return _lex_positive(primitive(row))


def _fm_project(dim: int, ineqs: list, eqs: list, nvars: int):
    """Eliminate variables ``dim..nvars-1`` in ascending order.

    Rows are tuples of ``nvars`` coefficients followed by the right-hand
    side. Returns the inequality rows ``(a, b)`` on the first ``dim``
    variables, or ``None`` if the system is infeasible.
    """
    for _ in range(nvars - dim):
        v = dim  # eliminated column is always the first multiplier left
        pivot = next((e for e in eqs if e[v] != 0), None)
        if pivot is not None:
            eqs = [e for e in eqs if e is not pivot]

            def sub(row, pivot=pivot):
                if row[v] == 0:
                    return row
                f = Fraction(row[v]) / pivot[v]
                return tuple(x - f * y for x, y in zip(row, pivot))

            ineqs = [sub(r) for r in ineqs]
            eqs = [sub(e) for e in eqs]
        else:
            pos = [r for r in ineqs if r[v] > 0]
            neg = [r for r in ineqs if r[v] < 0]
            new = [r for r in ineqs if r[v] == 0]
            for p in pos:
                for q in neg:
                    fp, fq = Fraction(1) / p[v], Fraction(1) / -q[v]
                    new.append(tuple(fp * x + fq * y for x, y in zip(p, q)))
            ineqs = new
        # drop the eliminated column
        ineqs = [r[:v] + r[v + 1:] for r in ineqs]
        eqs = [e[:v] + e[v + 1:] for e in eqs]

        merged = {}
        for e in eqs:
            e = _normalize_eq(e)
            if not any(e[:-1]):
                if e[-1] != 0:
                    return None
                continue
            merged[e] = None
        eqs = list(merged)
        rows = _normalize_rows([(r[:-1], r[-1]) for r in ineqs])
        if rows is None:
            return None
        eq_pairs = [(e[:-1], e[-1]) for e in eqs] + [
            (tuple(-x for x in e[:-1]), -e[-1]) for e in eqs
        ]
        all_a = [r[0] for r in rows] + [q[0] for q in eq_pairs]
        all_b = [r[1] for r in rows] + [q[1] for q in eq_pairs]
        if all_a and not lp.system_feasible(all_a, all_b):
            return None
        rows = _prune(rows, eq_pairs)
        ineqs = [tuple(a) + (b,) for a, b in rows]
    out = [(r[:-1], r[-1]) for r in ineqs]
    for e in eqs:
        out.append((e[:-1], e[-1]))
        out.append((tuple(-x for x in e[:-1]), -e[-1]))
    return out


def hull_h(dim: int, points, rays=(), lineality=()) -> HPolyhedron:
    """Canonical H-form of ``conv(points) + cone(rays) + span(lineality)``."""
    points = [tuple(Fraction(x) for x in p) for p in points]
    if not points:
        raise DomainError("a V-polyhedron needs at least one vertex")
    gens = [tuple(r) for r in rays]
    for l in lineality:
        gens.append(tuple(l))
        gens.append(tuple(-x for x in l))
    k, r = len(points), len(gens)
    nvars = dim + r + k
    # variables: x (dim), ray multipliers mu (r), vertex multipliers lam (k)
    eqs = []
    for j in range(dim):
        row = [Fraction(0)] * (nvars + 1)
        row[j] = Fraction(1)
        for t, g in enumerate(gens):
            row[dim + t] = -Fraction(g[j])
        for t, p in enumerate(points):
            row[dim + r + t] = -p[j]
        eqs.append(tuple(row))
    convex = [Fraction(0)] * (nvars + 1)
    for t in range(k):
        convex[dim + r + t] = Fraction(1)
    convex[-1] = Fraction(1)
    eqs.append(tuple(convex))
    ineqs = []
    for t in range(r + k):
        row = [Fraction(0)] * (nvars + 1)
        row[dim + t] = Fraction(1)
        ineqs.append(tuple(row))
    rows = _fm_project(dim, ineqs, eqs, nvars)
    if rows is None:  # pragma: no cover - a nonempty hull is always feasible
        return _empty(dim)
    return canonicalize(HPolyhedron(dim, tuple(rows)))


def v_to_h(v: VPolyhedron) -> HPolyhedron:
    if v.empty or not v.vertices:
        raise DomainError("v_to_h needs at least one vertex")
    return hull_h(v.dim, v.vertices, v.rays, v.lineality)


# -- vertex and ray enumeration ----------------------------------------------


def h_to_v(p: HPolyhedron) -> VPolyhedron:
    """Vertices, extreme rays and lineality by exhaustive basis enumeration."""
    p = canonicalize(p)
    dim = p.dim
    if is_empty_form(p):
        return VPolyhedron(dim, (), (), (), empty=True)
    a = [list(q[0]) for q in p.inequalities]
    b = [q[1] for q in p.inequalities]
    lin = [_lex_positive(primitive(l)) for l in nullspace(a, dim)] if a else [
        _unit(dim, i) for i in range(dim)
    ]
    a2, b2 = list(a), list(b)
    for l in lin:
        a2.append(list(l))
        b2.append(0)
        a2.append([-x for x in l])
        b2.append(0)

    vertices = set()
    for subset in combinations(range(len(a2)), dim):
        x = solve_square([a2[i] for i in subset], [b2[i] for i in subset])
        if x is None:
            continue
        if all(dot(ai, x) >= bi for ai, bi in zip(a2, b2)):
            vertices.add(x)
    if dim == 0:
        vertices.add(())

    rays = set()
    if dim >= 1:
        for subset in combinations(range(len(a2)), dim - 1):
            ns = nullspace([a2[i] for i in subset], dim)
            if len(ns) != 1:
                continue
            d = ns[0]
            for s in (d, tuple(-x for x in d)):
                if all(dot(ai, s) >= 0 for ai in a2):
                    rays.add(primitive(s))
    return VPolyhedron(
        dim,
        tuple(sorted(vertices)),
        tuple(sorted(rays)),
        tuple(lin),
    )


# -- dimension and stats -----------------------------------------------------


def implicit_equalities(p: HPolyhedron) -> list[int]:
    """Indices of rows that hold with equality on the whole (nonempty) polyhedron."""
    out = []
    for i, (a, b) in enumerate(p.inequalities):
        res = lp.maximize(p, a)
        if res.status is lp.Status.OPTIMAL and res.value == b:
            out.append(i)
    return out


def polyhedron_dimension(p: HPolyhedron) -> int:
    p = canonicalize(p)
    if is_empty_form(p):
        return -1
    eq = implicit_equalities(p)
    return p.dim - rank([p.inequalities[i][0] for i in eq], p.dim)


def polyhedron_stats(p: HPolyhedron) -> PolyhedronStats:
    p = canonicalize(p)
    v = h_to_v(p)
    if v.empty:
        return PolyhedronStats(p.dim, -1, 0, 0, 0, 0)
    eq = implicit_equalities(p)
    dim = p.dim - rank([p.inequalities[i][0] for i in eq], p.dim)
    return PolyhedronStats(
        ambient_dim=p.dim,
        dim=dim,
        lineality_dim=len(v.lineality),
        facets=len(p.inequalities) - len(eq),
        vertices=len(v.vertices),
        rays=len(v.rays),
    )


# -- monomial polyhedra ------------------------------------------------------


def newton_polyhedron(ideal: MonomialIdeal) -> HPolyhedron:
    """Convex hull of the generator exponents plus the nonnegative orthant."""
    if ideal.is_zero():
        raise DomainError("the zero ideal has no Newton polyhedron")
    n = ideal.ring.n
    return hull_h(n, ideal.exponents, [_unit(n, i) for i in range(n)])


def symbolic_polyhedron(ideal: MonomialIdeal, opts=None) -> HPolyhedron:
    """Intersection of the Newton polyhedra of the localizations at the
    maximal associated primes (or at the minimal primes with ``minimal_primes``)."""
    _require_proper(ideal, "symbolic polyhedron")
    opts = opts or DEFAULT_OPTIONS
    primes = minimal_primes(ideal) if opts.minimal_primes else maximal_associated_primes(ideal)
    return intersect_h([newton_polyhedron(localize_at_prime(ideal, p)) for p in primes])
