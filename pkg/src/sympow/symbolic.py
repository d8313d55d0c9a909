"""Symbolic powers of monomial ideals and the problems built on them.

For a monomial prime ``P`` the contraction ``I R_P ∩ R`` inverts exactly
the variables outside ``P``, so it is the saturation of ``I`` by the
product of those variables. The n-th symbolic power is the intersection
of these contractions of ``I^n`` over the associated primes of ``I``
(or over its minimal primes when ``minimal_primes`` is set).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import (
    MonomialIdeal,
    VariablePrime,
    contains,
    ideal_leq,
    intersect,
    is_squarefree,
    power,
    saturate,
    saturate_maximal,
)
from .decomposition import (
    _maximal_among,
    _minimal_among,
    _require_proper,
    associated_primes,
    height,
)
from .errors import ContainmentSearchError, DomainError, StrategyError


class Strategy(str, enum.Enum):
    AUTO = "auto"
    SQUAREFREE = "squarefree"
    GENERAL = "general"
    SATURATION = "saturation"


@dataclass(frozen=True)
class SymbolicOptions:
    """``minimal_primes`` switches the intersection from Ass(I) to Min(I)."""

    minimal_primes: bool = False
    strategy: Strategy = Strategy.AUTO

    def __post_init__(self):
        object.__setattr__(self, "strategy", Strategy(self.strategy))


DEFAULT_OPTIONS = SymbolicOptions()


def localize_at_prime(ideal: MonomialIdeal, prime: VariablePrime) -> MonomialIdeal:
    """Contraction of ``ideal`` localized at ``prime`` back to the polynomial ring."""
    if ideal.is_zero():
        raise DomainError("localization of the zero ideal is not supported")
    ideal.ring._check(prime.ring)
    return saturate(ideal, prime.complement_mask)


def _check_n(n: int, name: str = "n"):
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"{name} must be a positive integer, got {n!r}")


class _SymbolicContext:
    """Per-call cache of primes, ordinary and symbolic powers of one ideal."""

    def __init__(self, ideal: MonomialIdeal, opts: SymbolicOptions | None):
        _require_proper(ideal, "symbolic power")
        self.ideal = ideal
        self.opts = opts or DEFAULT_OPTIONS
        self._ass = None
        self._powers = {1: ideal}
        self._symbolic = {}
        self._strategy = None

    @property
    def ass(self) -> list[VariablePrime]:
        if self._ass is None:
            self._ass = associated_primes(self.ideal)
        return self._ass

    def primes(self) -> list[VariablePrime]:
        if self.opts.minimal_primes:
            return _minimal_among(self.ass)
        return self.ass

    def ordinary(self, n: int) -> MonomialIdeal:
        if n not in self._powers:
            if n == 0:
                self._powers[0] = self.ideal.ring.unit_ideal()
            else:
                self._powers[n] = self.ordinary(n - 1) * self.ideal
        return self._powers[n]

    def _saturation_applies(self) -> bool:
        n_vars = self.ideal.ring.n
        return all(p.height == n_vars - 1 for p in self.ass)

    def strategy(self) -> Strategy:
        if self._strategy is not None:
            return self._strategy
        requested = self.opts.strategy
        if requested is Strategy.SQUAREFREE and not is_squarefree(self.ideal):
            raise StrategyError("squarefree strategy requires a squarefree ideal")
        if requested is Strategy.SATURATION and not self._saturation_applies():
            raise StrategyError(
                "saturation strategy requires every associated prime to have "
                "height equal to the number of variables minus one"
            )
        if requested is Strategy.AUTO:
            if is_squarefree(self.ideal):
                requested = Strategy.SQUAREFREE
            elif self._saturation_applies():
                requested = Strategy.SATURATION
            else:
                requested = Strategy.GENERAL
        self._strategy = requested
        return requested

    def symbolic(self, n: int) -> MonomialIdeal:
        _check_n(n)
        if n in self._symbolic:
            return self._symbolic[n]
        strategy = self.strategy()
        if strategy is Strategy.SQUAREFREE:
            # squarefree: Ass == Min and each P^n is already P-primary
            result = intersect(*(power(p.ideal(), n) for p in self.ass))
        elif strategy is Strategy.SATURATION:
            result = saturate_maximal(self.ordinary(n))
        else:
            top = _maximal_among(self.primes())
            In = self.ordinary(n)
            result = intersect(*(localize_at_prime(In, p) for p in top))
        self._symbolic[n] = result
        return result


def symbolic_power(
    ideal: MonomialIdeal, n: int, opts: SymbolicOptions | None = None
) -> MonomialIdeal:
    """The n-th symbolic power of a proper nonzero monomial ideal."""
    _check_n(n)
    return _SymbolicContext(ideal, opts).symbolic(n)


def is_symbolic_equal_ordinary(ideal: MonomialIdeal, n: int) -> bool:
    """Decide ``I^(n) == I^n`` (standard definition) from associated primes.

    Screens on heights first; the exact test asks whether every associated
    prime of ``I^n`` lies inside an associated prime of ``I``.
    """
    _check_n(n)
    _require_proper(ideal)
    ass = associated_primes(ideal)
    h = height(ideal)
    h0 = max(p.height for p in ass)
    if n == 1:
        return True
    In = power(ideal, n)
    ass_n = associated_primes(In)
    hn = max(p.height for p in ass_n)
    if hn > h0:
        return False
    if hn == h0 == h:
        return True
    return all(any(p <= q for q in ass) for p in ass_n)


def containment_problem(
    ideal: MonomialIdeal, b: int, opts: SymbolicOptions | None = None
) -> int:
    """Smallest ``a`` with ``I^(a) ⊆ I^b``.

    The search runs ``a = b, b+1, ...`` up to ``big_height(I) * b``, which
    always suffices for squarefree ideals.
    """
    _check_n(b, "b")
    return _least_a(_SymbolicContext(ideal, opts), b)


def _least_a(ctx: _SymbolicContext, b: int) -> int:
    cap = max(p.height for p in ctx.ass) * b
    target = ctx.ordinary(b)
    for a in range(b, cap + 1):
        if ideal_leq(ctx.symbolic(a), target):
            return a
    raise ContainmentSearchError(f"no a <= {cap} with I^(a) contained in I^{b}")


def containment_problem_given_a(
    ideal: MonomialIdeal, a: int, opts: SymbolicOptions | None = None
) -> int:
    """Largest ``b`` with ``I^(a) ⊆ I^b``; never exceeds ``a``."""
    _check_n(a, "a")
    ctx = _SymbolicContext(ideal, opts)
    sym = ctx.symbolic(a)
    for b in range(a, 0, -1):
        if ideal_leq(sym, ctx.ordinary(b)):
            return b
    raise ContainmentSearchError(f"I^({a}) is not contained in I")


def symbolic_defect(
    ideal: MonomialIdeal, n: int, opts: SymbolicOptions | None = None
) -> int:
    """Number of minimal generators of ``I^(n)`` outside ``I^n``.

    By graded Nakayama these form a minimal generating set of the graded
    module ``I^(n) / I^n``.
    """
    _check_n(n)
    ctx = _SymbolicContext(ideal, opts)
    ordinary = ctx.ordinary(n)
    return sum(1 for v in ctx.symbolic(n).exponents if not contains(ordinary, v))
