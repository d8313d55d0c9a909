"""Exact two-phase simplex over H-polyhedra ``{x : A x >= b}``.

All pivots are done on :class:`fractions.Fraction` values and Bland's
rule picks entering and leaving variables, so the solver terminates and
is deterministic. Free variables are split as ``x = x+ - x-``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .linalg import dot


class Status(str, enum.Enum):
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"
    INFEASIBLE = "infeasible"


class Sense(str, enum.Enum):
    MINIMIZE = "minimize"
    MAXIMIZE = "maximize"


@dataclass(frozen=True)
class LPProblem:
    polyhedron: "HPolyhedron"  # noqa: F821 - any object with .dim and .inequalities
    objective: tuple
    sense: Sense = Sense.MINIMIZE

    def __post_init__(self):
        if len(self.objective) != self.polyhedron.dim:
            raise ValueError("objective length differs from the ambient dimension")
        object.__setattr__(self, "sense", Sense(self.sense))


@dataclass(frozen=True)
class LPResult:
    status: Status
    value: Optional[Fraction] = None
    witness: Optional[tuple[Fraction, ...]] = None
    ray: Optional[tuple[Fraction, ...]] = None


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.z = None
        self.zval = Fraction(0)

    def set_cost(self, cost):
        ncols = len(cost)
        z = list(cost)
        zval = Fraction(0)
        for row, r, bv in zip(self.rows, self.rhs, self.basis):
            cb = cost[bv]
            if cb:
                for j in range(ncols):
                    if row[j]:
                        z[j] -= cb * row[j]
                zval -= cb * r
        self.z = z
        self.zval = zval

    def pivot(self, i: int, j: int):
        prow = self.rows[i]
        inv = 1 / prow[j]
        prow = [x * inv for x in prow]
        prhs = self.rhs[i] * inv
        self.rows[i] = prow
        self.rhs[i] = prhs
        nz = [k for k, x in enumerate(prow) if x]
        for k, row in enumerate(self.rows):
            if k != i and row[j]:
                f = row[j]
                for c in nz:
                    row[c] -= f * prow[c]
                self.rhs[k] -= f * prhs
        f = self.z[j]
        if f:
            for c in nz:
                self.z[c] -= f * prow[c]
            self.zval -= f * prhs
        self.basis[i] = j

    def run(self, allowed: int):
        """Minimize; returns ``None`` at optimum or the unbounded column."""
        while True:
            j = next((c for c in range(allowed) if self.z[c] < 0), None)
            if j is None:
                return None
            best = None
            for i, row in enumerate(self.rows):
                if row[j] > 0:
                    key = (self.rhs[i] / row[j], self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return j
            self.pivot(best[1], j)

    def values(self, ncols: int):
        x = [Fraction(0)] * ncols
        for r, bv in zip(self.rhs, self.basis):
            x[bv] = r
        return x


def _phase_one(a, b):
    """Build and run phase one; returns the tableau or ``None`` if infeasible."""
    m = len(a)
    n = len(a[0]) if a else 0
    ncols = 2 * n + m
    rows, rhs = [], []
    for i, (ai, bi) in enumerate(zip(a, b)):
        row = [Fraction(x) for x in ai] + [-Fraction(x) for x in ai] + [Fraction(0)] * m
        row[2 * n + i] = Fraction(-1)
        bi = Fraction(bi)
        if bi < 0:
            row = [-x for x in row]
            bi = -bi
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        rows.append(row + art)
        rhs.append(bi)
    tab = _Tableau(rows, rhs, [ncols + i for i in range(m)])
    tab.set_cost([Fraction(0)] * ncols + [Fraction(1)] * m)
    tab.run(ncols + m)
    if tab.zval != 0:
        return None
    # drive artificials out of the basis; drop rows that stay dependent
    i = 0
    while i < len(tab.rows):
        if tab.basis[i] >= ncols:
            j = next((c for c in range(ncols) if tab.rows[i][c] != 0), None)
            if j is None:
                del tab.rows[i], tab.rhs[i], tab.basis[i]
                continue
            tab.pivot(i, j)
        i += 1
    for k in range(len(tab.rows)):
        del tab.rows[k][ncols:]
    tab.z = tab.z[:ncols]
    return tab


def solve_system(a: Sequence[Sequence], b: Sequence, c: Sequence, sense=Sense.MINIMIZE) -> LPResult:
    """Optimize ``c · x`` over ``{x : a x >= b}`` with ``x`` free."""
    sense = Sense(sense)
    n = len(c)
    c = [Fraction(x) for x in c]
    if sense is Sense.MAXIMIZE:
        c = [-x for x in c]
    if not a:
        if any(c):
            ray = tuple(-x for x in c)
            return LPResult(Status.UNBOUNDED, witness=(Fraction(0),) * n, ray=ray)
        return LPResult(Status.OPTIMAL, Fraction(0), (Fraction(0),) * n)
    m = len(a)
    tab = _phase_one(a, b)
    if tab is None:
        return LPResult(Status.INFEASIBLE)
    ncols = 2 * n + m
    cost = c + [-x for x in c] + [Fraction(0)] * m
    tab.set_cost(cost)
    col = tab.run(ncols)
    y = tab.values(ncols)
    witness = tuple(y[j] - y[n + j] for j in range(n))
    if col is not None:
        d = [Fraction(0)] * ncols
        d[col] = Fraction(1)
        for row, bv in zip(tab.rows, tab.basis):
            d[bv] = -row[col]
        ray = tuple(d[j] - d[n + j] for j in range(n))
        return LPResult(Status.UNBOUNDED, witness=witness, ray=ray)
    value = dot(c, witness)
    if sense is Sense.MAXIMIZE:
        value = -value
    return LPResult(Status.OPTIMAL, value, witness)


def solve_lp(problem: LPProblem) -> LPResult:
    a = [ineq[0] for ineq in problem.polyhedron.inequalities]
    b = [ineq[1] for ineq in problem.polyhedron.inequalities]
    return solve_system(a, b, problem.objective, problem.sense)


def minimize(polyhedron, objective) -> LPResult:
    return solve_lp(LPProblem(polyhedron, tuple(objective), Sense.MINIMIZE))


def maximize(polyhedron, objective) -> LPResult:
    return solve_lp(LPProblem(polyhedron, tuple(objective), Sense.MAXIMIZE))


def system_feasible(a, b) -> bool:
    if not a:
        return True
    return _phase_one(a, b) is not None


def is_feasible(polyhedron) -> bool:
    ineqs = polyhedron.inequalities
    return system_feasible([q[0] for q in ineqs], [q[1] for q in ineqs])


def row_redundant(a, b, i: int) -> bool:
    """True if row ``i`` of ``a x >= b`` is implied by the other rows."""
    others_a = a[:i] + a[i + 1:]
    others_b = b[:i] + b[i + 1:]
    res = solve_system(others_a, others_b, a[i], Sense.MINIMIZE)
    if res.status is Status.INFEASIBLE:
        return True
    if res.status is Status.UNBOUNDED:
        return False
    return res.value >= b[i]


def is_redundant(polyhedron, i: int) -> bool:
    ineqs = polyhedron.inequalities
    if not 0 <= i < len(ineqs):
        raise IndexError(f"inequality index {i} out of range")
    return row_redundant([q[0] for q in ineqs], [q[1] for q in ineqs], i)
