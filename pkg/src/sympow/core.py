"""Monomials and monomial ideals over a fixed list of variables.

Coefficients are never represented: a monomial is its exponent vector
and a monomial ideal is its minimal generating set, kept in canonical
graded-lex order so that ideal equality is tuple equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence, Union

from . import kernels
from .errors import DomainError, ExponentOverflowError, RingMismatchError

MAX_EXPONENT = kernels.MAX_EXPONENT

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9]*\Z")

Exponents = tuple[int, ...]


def grlex_key(v: Sequence[int]):
    """Sort key: total degree first, then lexicographically larger first."""
    return (sum(v), tuple(-e for e in v))


@dataclass(frozen=True)
class AmbientRing:
    """Polynomial ring identified with its ordered variable names."""

    variables: tuple[str, ...]

    def __post_init__(self):
        variables = tuple(self.variables)
        object.__setattr__(self, "variables", variables)
        if not variables:
            raise ValueError("a ring needs at least one variable")
        for name in variables:
            if not isinstance(name, str) or not _IDENT.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(variables)) != len(variables):
            raise ValueError("variable names must be distinct")

    @classmethod
    def of(cls, names: Union[str, Iterable[str]]) -> "AmbientRing":
        """Build a ring from ``"x,y,z"`` or an iterable of names."""
        if isinstance(names, str):
            names = [s.strip() for s in names.split(",") if s.strip()]
        return cls(tuple(names))

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def index(self, var: Union[str, int]) -> int:
        if isinstance(var, int):
            if not 0 <= var < self.n:
                raise IndexError(f"variable index {var} out of range")
            return var
        try:
            return self.variables.index(var)
        except ValueError:
            raise KeyError(f"unknown variable {var!r}") from None

    def mask_of(self, variables) -> int:
        """Bitmask for a VariablePrime, a bitmask, or an iterable of names/indices."""
        if isinstance(variables, VariablePrime):
            self._check(variables.ring)
            return variables.mask
        if isinstance(variables, int):
            if variables < 0 or variables > self.full_mask:
                raise ValueError("bitmask outside the ring")
            return variables
        mask = 0
        for v in variables:
            mask |= 1 << self.index(v)
        return mask

    def _check(self, other: "AmbientRing"):
        if other != self:
            raise RingMismatchError(
                f"ring mismatch: {self.variables} vs {other.variables}"
            )

    def one(self) -> "Monomial":
        return Monomial((0,) * self.n, self)

    def var(self, name: Union[str, int], exponent: int = 1) -> "Monomial":
        e = [0] * self.n
        e[self.index(name)] = exponent
        return Monomial(tuple(e), self)

    def monomial(self, exponents: Sequence[int]) -> "Monomial":
        return Monomial(tuple(exponents), self)

    def ideal(self, gens: Iterable) -> "MonomialIdeal":
        """Canonical ideal from Monomials or raw exponent vectors."""
        return MonomialIdeal(self, gens)

    def zero_ideal(self) -> "MonomialIdeal":
        return MonomialIdeal._from_canonical(self, ())

    def unit_ideal(self) -> "MonomialIdeal":
        return MonomialIdeal._from_canonical(self, ((0,) * self.n,))

    def maximal_ideal(self) -> "MonomialIdeal":
        return VariablePrime(self, self.full_mask).ideal()


def _validate(exponents, n: int) -> Exponents:
    v = tuple(exponents)
    if len(v) != n:
        raise ValueError(f"expected {n} exponents, got {len(v)}")
    for e in v:
        if not isinstance(e, int) or isinstance(e, bool):
            raise TypeError(f"exponent {e!r} is not an integer")
        if e < 0:
            raise ValueError("exponents must be non-negative")
        if e > MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")
    return v


@dataclass(frozen=True)
class Monomial:
    exponents: Exponents
    ring: AmbientRing

    def __post_init__(self):
        object.__setattr__(self, "exponents", _validate(self.exponents, self.ring.n))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        self.ring._check(other.ring)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        self.ring._check(other.ring)
        return Monomial(tuple(map(max, self.exponents, other.exponents)), self.ring)

    def gcd(self, other: "Monomial") -> "Monomial":
        self.ring._check(other.ring)
        return Monomial(tuple(map(min, self.exponents, other.exponents)), self.ring)

    def __mul__(self, other: "Monomial") -> "Monomial":
        self.ring._check(other.ring)
        return Monomial(
            tuple(a + b for a, b in zip(self.exponents, other.exponents)), self.ring
        )

    def __str__(self):
        return format_monomial(self.exponents, self.ring)


def format_monomial(exponents: Sequence[int], ring: AmbientRing) -> str:
    parts = []
    for name, e in zip(ring.variables, exponents):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


class MonomialIdeal:
    """Monomial ideal stored by its canonical minimal generators.

    ``exponents`` is a graded-lex sorted tuple of exponent vectors in
    which no vector divides another. The empty tuple is the zero ideal
    and ``((0,...,0),)`` is the unit ideal.
    """

    __slots__ = ("ring", "exponents", "_hash")

    def __init__(self, ring: AmbientRing, gens: Iterable = ()):
        vecs = []
        for g in gens:
            if isinstance(g, Monomial):
                ring._check(g.ring)
                vecs.append(g.exponents)
            else:
                vecs.append(_validate(g, ring.n))
        self.ring = ring
        self.exponents = _canonical(vecs)
        self._hash = None

    @classmethod
    def _from_canonical(cls, ring: AmbientRing, exponents) -> "MonomialIdeal":
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.exponents = tuple(exponents)
        obj._hash = None
        return obj

    @classmethod
    def _from_vectors(cls, ring: AmbientRing, vecs) -> "MonomialIdeal":
        # vectors already validated; only minimalization and ordering left
        return cls._from_canonical(ring, _canonical(vecs))

    def __setattr__(self, name, value):
        if name != "_hash" and hasattr(self, "_hash"):
            raise AttributeError("MonomialIdeal is immutable")
        object.__setattr__(self, name, value)

    @property
    def generators(self) -> tuple[Monomial, ...]:
        return tuple(Monomial(v, self.ring) for v in self.exponents)

    def __len__(self):
        return len(self.exponents)

    def is_zero(self) -> bool:
        return not self.exponents

    def is_unit(self) -> bool:
        return len(self.exponents) == 1 and not any(self.exponents[0])

    def is_proper_nonzero(self) -> bool:
        return not self.is_zero() and not self.is_unit()

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and self.exponents == other.exponents

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.ring, self.exponents)))
        return self._hash

    def __contains__(self, m) -> bool:
        return contains(self, m)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return ideal_leq(self, other)

    def __ge__(self, other: "MonomialIdeal") -> bool:
        return ideal_leq(other, self)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return multiply(self, other)

    def __pow__(self, n: int) -> "MonomialIdeal":
        return power(self, n)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return intersect(self, other)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return ideal_sum(self, other)

    def __str__(self):
        return format_ideal(self)

    def __repr__(self):
        return f"MonomialIdeal({self.ring.variables!r}, {format_ideal(self)})"


def format_ideal(ideal: MonomialIdeal) -> str:
    return "(" + ", ".join(format_monomial(v, ideal.ring) for v in ideal.exponents) + ")"


def _canonical(vecs) -> tuple[Exponents, ...]:
    return tuple(sorted(kernels.minimalize(vecs), key=grlex_key))


def _same_ring(*ideals: MonomialIdeal) -> AmbientRing:
    ring = ideals[0].ring
    for other in ideals[1:]:
        ring._check(other.ring)
    return ring


def _as_vector(m, ring: AmbientRing) -> Exponents:
    if isinstance(m, Monomial):
        ring._check(m.ring)
        return m.exponents
    return _validate(m, ring.n)


def minimalize(gens: Iterable, ring: AmbientRing | None = None) -> MonomialIdeal:
    """Canonical ideal generated by ``gens`` (Monomials sharing one ring).

    ``ring`` is only needed when ``gens`` is empty or holds raw vectors.
    """
    gens = list(gens)
    for g in gens:
        if isinstance(g, Monomial):
            if ring is None:
                ring = g.ring
            ring._check(g.ring)
    if ring is None:
        raise ValueError("cannot infer the ring of an empty generator set")
    return MonomialIdeal(ring, gens)


def contains(ideal: MonomialIdeal, m) -> bool:
    return kernels.divides_any(ideal.exponents, _as_vector(m, ideal.ring))


def ideal_leq(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    """Containment ``a ⊆ b``."""
    _same_ring(a, b)
    return kernels.all_divisible(a.exponents, b.exponents)


def ideal_eq(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    _same_ring(a, b)
    return a.exponents == b.exponents


def ideal_sum(*ideals: MonomialIdeal) -> MonomialIdeal:
    ring = _same_ring(*ideals)
    return MonomialIdeal._from_vectors(ring, [v for i in ideals for v in i.exponents])


def intersect(*ideals: MonomialIdeal) -> MonomialIdeal:
    """Intersection of one or more ideals via pairwise lcms."""
    if not ideals:
        raise ValueError("intersect needs at least one ideal")
    ring = _same_ring(*ideals)

    def meet(a, b):
        return MonomialIdeal._from_vectors(ring, kernels.lcm_all(a.exponents, b.exponents))

    return reduce(meet, ideals)


def multiply(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    ring = _same_ring(a, b)
    try:
        vecs = kernels.mul_all(a.exponents, b.exponents)
    except OverflowError as exc:
        raise ExponentOverflowError(str(exc)) from None
    return MonomialIdeal._from_vectors(ring, vecs)


def power(ideal: MonomialIdeal, n: int) -> MonomialIdeal:
    """``ideal**n`` by repeated multiplication; ``power(I, 0)`` is the unit ideal."""
    if n < 0:
        raise DomainError("power exponent must be non-negative")
    result = ideal.ring.unit_ideal()
    for _ in range(n):
        result = multiply(result, ideal)
    return result


def colon(ideal: MonomialIdeal, m) -> MonomialIdeal:
    """``ideal : m`` for a monomial ``m``."""
    v = _as_vector(m, ideal.ring)
    return MonomialIdeal._from_vectors(
        ideal.ring, [tuple(max(a - b, 0) for a, b in zip(g, v)) for g in ideal.exponents]
    )


def saturate(ideal: MonomialIdeal, variables) -> MonomialIdeal:
    """``ideal : (prod of variables)^inf``: zero out the given exponents.

    ``variables`` may be names, indices, a bitmask or a VariablePrime.
    """
    mask = ideal.ring.mask_of(variables)
    if not mask:
        return ideal
    vecs = [
        tuple(0 if mask >> i & 1 else e for i, e in enumerate(g))
        for g in ideal.exponents
    ]
    return MonomialIdeal._from_vectors(ideal.ring, vecs)


def saturate_maximal(ideal: MonomialIdeal) -> MonomialIdeal:
    """``ideal : m^inf`` for the maximal ideal ``m`` of all variables.

    Uses ``I : m^inf = ∩_i (I : x_i^inf)``.
    """
    if ideal.is_zero():
        return ideal
    return intersect(*(saturate(ideal, 1 << i) for i in range(ideal.ring.n)))


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal._from_vectors(
        ideal.ring, [tuple(min(e, 1) for e in g) for g in ideal.exponents]
    )


def is_squarefree(ideal: MonomialIdeal) -> bool:
    return all(e <= 1 for g in ideal.exponents for e in g)


def support(obj) -> frozenset[int]:
    """Indices of variables with positive exponent in a monomial or ideal."""
    if isinstance(obj, Monomial):
        vecs = [obj.exponents]
    else:
        vecs = obj.exponents
    return frozenset(i for v in vecs for i, e in enumerate(v) if e)


def initial_degree(ideal: MonomialIdeal) -> int:
    """Least total degree of a nonzero element."""
    if ideal.is_zero():
        raise DomainError("initial degree of the zero ideal is undefined")
    return min(sum(v) for v in ideal.exponents)


@dataclass(frozen=True)
class VariablePrime:
    """Prime ideal generated by a nonempty subset of the variables."""

    ring: AmbientRing
    mask: int

    def __post_init__(self):
        if self.mask <= 0 or self.mask > self.ring.full_mask:
            raise ValueError("a variable prime needs a nonempty subset of the ring variables")

    @classmethod
    def of(cls, ring: AmbientRing, variables) -> "VariablePrime":
        return cls(ring, ring.mask_of(variables))

    @property
    def height(self) -> int:
        return bin(self.mask).count("1")

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.ring.n) if self.mask >> i & 1)

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(self.ring.variables[i] for i in self.indices)

    @property
    def complement_mask(self) -> int:
        return self.ring.full_mask & ~self.mask

    def ideal(self) -> MonomialIdeal:
        vecs = []
        for i in self.indices:
            e = [0] * self.ring.n
            e[i] = 1
            vecs.append(tuple(e))
        return MonomialIdeal._from_vectors(self.ring, vecs)

    def sort_key(self):
        return (self.height, self.indices)

    def __le__(self, other: "VariablePrime") -> bool:
        self.ring._check(other.ring)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "VariablePrime") -> bool:
        return self <= other and self.mask != other.mask

    def __str__(self):
        return "(" + ", ".join(self.variables) + ")"
