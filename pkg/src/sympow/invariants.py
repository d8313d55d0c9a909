"""Waldschmidt constant, initial-degree sequences and a resurgence lower bound."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import lp
from .core import MonomialIdeal, initial_degree
from .decomposition import _require_proper, maximal_associated_primes, minimal_primes
from .errors import DomainError
from .polyhedra import symbolic_polyhedron
from .symbolic import DEFAULT_OPTIONS, _least_a, _SymbolicContext, localize_at_prime

DEFAULT_SAMPLE_SIZE = 10


class Mode(str, enum.Enum):
    EXACT = "exact"
    APPROXIMATED = "approximated"


@dataclass(frozen=True)
class WaldschmidtReport:
    value: Fraction
    mode: Mode
    sample_size: Optional[int] = None
    witness: Optional[tuple[Fraction, ...]] = None


def waldschmidt_exact(ideal: MonomialIdeal, opts=None) -> WaldschmidtReport:
    """Minimum coordinate sum over the symbolic polyhedron."""
    poly = symbolic_polyhedron(ideal, opts)
    res = lp.minimize(poly, (1,) * poly.dim)
    if res.status is not lp.Status.OPTIMAL:  # pragma: no cover - polyhedron lies in the orthant
        raise DomainError(f"Waldschmidt LP ended with status {res.status.value}")
    return WaldschmidtReport(res.value, Mode.EXACT, witness=res.witness)


def waldschmidt_extended_lp(ideal: MonomialIdeal, opts=None) -> Fraction:
    """Same value as :func:`waldschmidt_exact`, without facet enumeration.

    Variables are the point ``x`` plus, for each prime, convex weights on
    the localized generators: ``x >= sum(lam_v * v)`` with ``sum(lam) = 1``.
    """
    _require_proper(ideal)
    opts = opts or DEFAULT_OPTIONS
    n = ideal.ring.n
    primes = minimal_primes(ideal) if opts.minimal_primes else maximal_associated_primes(ideal)
    blocks = [localize_at_prime(ideal, p).exponents for p in primes]
    nvars = n + sum(len(b) for b in blocks)
    a, rhs = [], []

    def row():
        return [0] * nvars

    offset = n
    for gens in blocks:
        for j in range(n):
            r = row()
            r[j] = 1
            for t, g in enumerate(gens):
                r[offset + t] = -g[j]
            a.append(r)
            rhs.append(0)
        r = row()
        for t in range(len(gens)):
            r[offset + t] = 1
            lam = row()
            lam[offset + t] = 1
            a.append(lam)
            rhs.append(0)
        a.append(r)
        rhs.append(1)
        a.append([-x for x in r])
        rhs.append(-1)
        offset += len(gens)
    res = lp.solve_system(a, rhs, [1] * n + [0] * (nvars - n))
    if res.status is not lp.Status.OPTIMAL:  # pragma: no cover
        raise DomainError(f"extended Waldschmidt LP ended with status {res.status.value}")
    return res.value


def alpha_sequence(ideal: MonomialIdeal, k: int, opts=None) -> list[Fraction]:
    """``[alpha(I^(m)) / m for m = 1..k]``."""
    if not isinstance(k, int) or k < 1:
        raise DomainError("k must be a positive integer")
    ctx = _SymbolicContext(ideal, opts)
    return [Fraction(initial_degree(ctx.symbolic(m)), m) for m in range(1, k + 1)]


def waldschmidt_approx(
    ideal: MonomialIdeal, sample_size: int = DEFAULT_SAMPLE_SIZE, opts=None
) -> WaldschmidtReport:
    """Upper bound ``min_m alpha(I^(m)) / m`` over the first ``sample_size`` powers."""
    if not isinstance(sample_size, int) or sample_size < 1:
        raise DomainError("sample_size must be a positive integer")
    value = min(alpha_sequence(ideal, sample_size, opts))
    return WaldschmidtReport(value, Mode.APPROXIMATED, sample_size=sample_size)


def lower_bound_resurgence(ideal: MonomialIdeal, n: int, opts=None) -> Fraction:
    """``max over r <= n of (a_r - 1) / r`` with ``a_r`` the least ``a`` such
    that ``I^(a) ⊆ I^r``; ``a_r - 1`` is the largest non-containment."""
    if not isinstance(n, int) or n < 1:
        raise DomainError("n must be a positive integer")
    ctx = _SymbolicContext(ideal, opts)
    return max(Fraction(_least_a(ctx, r) - 1, r) for r in range(1, n + 1))
