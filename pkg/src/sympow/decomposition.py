"""Irreducible and primary decomposition of monomial ideals.

Irreducible components come from the splitting recursion

    I = (I + (x_i^a)) ∩ (I + (m / x_i^a))

applied to the first non-pure-power generator ``m`` and its lowest
variable ``x_i`` (exponent ``a``). Grouping the irreducible components
by radical gives an irredundant primary decomposition, whose radicals
are the associated primes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .core import (
    AmbientRing,
    MonomialIdeal,
    VariablePrime,
    _canonical,
    intersect,
)
from .errors import DomainError


def _require_proper(ideal: MonomialIdeal, what: str = "decomposition"):
    if ideal.is_zero():
        raise DomainError(f"{what} of the zero ideal is undefined")
    if ideal.is_unit():
        raise DomainError(f"{what} of the unit ideal is undefined")


@dataclass(frozen=True)
class IrreducibleComponent:
    """Ideal generated by pure powers ``x_i^a_i``; ``exponents[i] == 0`` means absent."""

    ring: AmbientRing
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) != self.ring.n or any(e < 0 for e in self.exponents):
            raise ValueError("bad irreducible component exponents")
        if not any(self.exponents):
            raise ValueError("an irreducible component needs at least one variable")

    @property
    def radical(self) -> VariablePrime:
        mask = sum(1 << i for i, e in enumerate(self.exponents) if e)
        return VariablePrime(self.ring, mask)

    def as_map(self) -> dict[str, int]:
        return {self.ring.variables[i]: e for i, e in enumerate(self.exponents) if e}

    def ideal(self) -> MonomialIdeal:
        vecs = []
        for i, e in enumerate(self.exponents):
            if e:
                v = [0] * self.ring.n
                v[i] = e
                vecs.append(tuple(v))
        return MonomialIdeal._from_vectors(self.ring, vecs)

    def __str__(self):
        return str(self.ideal())


@dataclass(frozen=True)
class PrimaryComponent:
    ideal: MonomialIdeal
    radical: VariablePrime


@dataclass(frozen=True)
class Decomposition:
    """Irredundant primary decomposition; one component per associated prime."""

    ideal: MonomialIdeal
    components: tuple[PrimaryComponent, ...]

    def __iter__(self) -> Iterator[PrimaryComponent]:
        return iter(self.components)

    def __len__(self):
        return len(self.components)

    @property
    def primes(self) -> tuple[VariablePrime, ...]:
        return tuple(c.radical for c in self.components)

    def intersection(self) -> MonomialIdeal:
        return intersect(*(c.ideal for c in self.components))


def _irr_key(v):
    mask = sum(1 << i for i, e in enumerate(v) if e)
    return (bin(mask).count("1"), tuple(i for i, e in enumerate(v) if e), v)


def _irr_leq(d, c) -> bool:
    # (x_i^d_i) ⊆ (x_i^c_i): every generator of d is divisible by a pure power in c
    return all(not di or (ci and ci <= di) for di, ci in zip(d, c))


def _prune(comps) -> frozenset:
    # An irreducible C contains an intersection iff it contains one of the
    # intersected components, so pairwise containment decides redundancy.
    comps = sorted(comps, key=_irr_key)
    kept = []
    for c in comps:
        if any(d != c and _irr_leq(d, c) for d in comps):
            continue
        kept.append(c)
    return frozenset(kept)


def _split(gens: tuple, memo: dict) -> frozenset:
    hit = memo.get(gens)
    if hit is not None:
        return hit
    pivot = None
    for g in gens:
        nz = [i for i, e in enumerate(g) if e]
        if len(nz) > 1:
            pivot = (g, nz[0])
            break
    if pivot is None:
        # all minimal generators are pure powers, one per variable
        result = frozenset([tuple(map(sum, zip(*gens)))])
    else:
        g, i = pivot
        pure = tuple(e if j == i else 0 for j, e in enumerate(g))
        rest = tuple(0 if j == i else e for j, e in enumerate(g))
        left = _split(_canonical(gens + (pure,)), memo)
        right = _split(_canonical(gens + (rest,)), memo)
        result = _prune(left | right)
    memo[gens] = result
    return result


def irreducible_decomposition(ideal: MonomialIdeal) -> list[IrreducibleComponent]:
    """Irredundant irreducible components, sorted by radical then exponents."""
    _require_proper(ideal)
    comps = _split(ideal.exponents, {})
    return [IrreducibleComponent(ideal.ring, c) for c in sorted(comps, key=_irr_key)]


def primary_decomposition(ideal: MonomialIdeal) -> Decomposition:
    groups: dict[int, list[IrreducibleComponent]] = {}
    for comp in irreducible_decomposition(ideal):
        groups.setdefault(comp.radical.mask, []).append(comp)
    components = [
        PrimaryComponent(intersect(*(c.ideal() for c in group)), group[0].radical)
        for group in groups.values()
    ]
    components.sort(key=lambda c: c.radical.sort_key())
    return Decomposition(ideal, tuple(components))


def _sorted_primes(primes) -> list[VariablePrime]:
    return sorted(primes, key=VariablePrime.sort_key)


def associated_primes(ideal: MonomialIdeal) -> list[VariablePrime]:
    return list(primary_decomposition(ideal).primes)


def _minimal_among(primes) -> list[VariablePrime]:
    return _sorted_primes(p for p in primes if not any(q < p for q in primes))


def _maximal_among(primes) -> list[VariablePrime]:
    return _sorted_primes(p for p in primes if not any(p < q for q in primes))


def minimal_primes(ideal: MonomialIdeal) -> list[VariablePrime]:
    return _minimal_among(associated_primes(ideal))


def maximal_associated_primes(ideal: MonomialIdeal) -> list[VariablePrime]:
    """Inclusion-maximal associated primes."""
    return _maximal_among(associated_primes(ideal))


def height(ideal: MonomialIdeal) -> int:
    return min(p.height for p in associated_primes(ideal))


def big_height(ideal: MonomialIdeal) -> int:
    """Largest height of an associated prime."""
    return max(p.height for p in associated_primes(ideal))


def minimal_part(ideal: MonomialIdeal) -> MonomialIdeal:
    """Intersection of the primary components at minimal primes."""
    dec = primary_decomposition(ideal)
    minimal = {p.mask for p in _minimal_among(dec.primes)}
    return intersect(*(c.ideal for c in dec if c.radical.mask in minimal))
