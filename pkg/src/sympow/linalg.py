"""Exact dense linear algebra over the rationals (small matrices only)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def rref(rows, ncols: int):
    """Reduced row echelon form; returns ``(matrix, pivot_columns)``."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def solve_square(a, b):
    """Unique solution of ``a x = b`` or ``None`` when ``a`` is singular."""
    n = len(a)
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, pivots = rref(aug, n)
    if len(pivots) < n:
        return None
    return tuple(red[i][n] for i in range(n))


def nullspace(rows, ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of ``{x : rows · x = 0}`` read off the RREF (deterministic)."""
    red, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def primitive(vec) -> tuple[int, ...]:
    """Positive multiple of a rational vector with coprime integer entries."""
    den = 1
    for x in vec:
        den = lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def dot(a, b):
    return sum((x * y for x, y in zip(a, b)), Fraction(0))
