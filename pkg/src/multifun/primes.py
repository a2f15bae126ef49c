"""The prime-divisor multifunction on a bounded window ``{2, ..., bound}``."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .core import MultiFunction, VertexUniverse, iter_bits
from .errors import NotPrimeError, PrimeDomainError, UndecidableDescriptionError


def _check_positive(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise PrimeDomainError(f"expected an integer >= 1, got {n!r}")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


@dataclass(frozen=True)
class ExponentVector:
    """Finitely supported map ``prime -> positive exponent``.

    Accepts a mapping or ``(prime, exponent)`` pairs; stored as sorted pairs.
    """

    exponents: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = self.exponents.items() if isinstance(self.exponents, Mapping) else self.exponents
        object.__setattr__(self, "exponents", tuple(sorted(pairs)))
        for p, e in self.exponents:
            if e < 1 or not is_prime(p):
                raise ValueError(f"bad factor {p}^{e}")

    @property
    def support(self) -> frozenset[int]:
        return frozenset(p for p, _ in self.exponents)

    def as_dict(self) -> dict[int, int]:
        return dict(self.exponents)

    def value(self) -> int:
        return math.prod(p**e for p, e in self.exponents)


def factor_exponents(n: int) -> ExponentVector:
    _check_positive(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return ExponentVector(tuple(out))


def prime_divisors(n: int) -> frozenset[int]:
    return factor_exponents(n).support


@dataclass(frozen=True)
class PrimeWindow:
    """The numbers ``2..bound``; vertex ``i`` of the window universe is ``i + 2``."""

    bound: int

    def __post_init__(self):
        if not isinstance(self.bound, int) or self.bound < 2:
            raise ValueError("window bound must be an integer >= 2")

    @cached_property
    def smallest_factor(self) -> list[int]:
        spf = list(range(self.bound + 1))
        for p in range(2, math.isqrt(self.bound) + 1):
            if spf[p] == p:
                for m in range(p * p, self.bound + 1, p):
                    if spf[m] == m:
                        spf[m] = p
        return spf

    @cached_property
    def primes(self) -> tuple[int, ...]:
        spf = self.smallest_factor
        return tuple(n for n in range(2, self.bound + 1) if spf[n] == n)

    @property
    def numbers(self) -> range:
        return range(2, self.bound + 1)

    def __contains__(self, n) -> bool:
        return isinstance(n, int) and 2 <= n <= self.bound

    def factor(self, n: int) -> ExponentVector:
        if n not in self:
            raise PrimeDomainError(f"{n!r} lies outside the window 2..{self.bound}")
        spf = self.smallest_factor
        out: dict[int, int] = {}
        while n > 1:
            p = spf[n]
            out[p] = out.get(p, 0) + 1
            n //= p
        return ExponentVector(tuple(out.items()))

    def prime_divisors(self, n: int) -> frozenset[int]:
        return self.factor(n).support

    @property
    def universe(self) -> VertexUniverse:
        return VertexUniverse(self.bound - 1, tuple(str(n) for n in self.numbers))

    def vertex(self, n: int) -> int:
        if n not in self:
            raise PrimeDomainError(f"{n!r} lies outside the window 2..{self.bound}")
        return n - 2


class DescriptionKind(str, enum.Enum):
    FINITE = "finite"
    COFINITE = "cofinite"
    EVENS = "evens"
    ODDS = "odds"
    PRIMES = "primes"
    PRIMES_MINUS = "primes-minus"
    NATURALS = "naturals"


@dataclass(frozen=True)
class SetDescription:
    """A subset of the naturals given by a kind and, where needed, a finite set.

    ``FINITE`` uses ``elements`` as the set itself, ``COFINITE`` and
    ``PRIMES_MINUS`` use it as the finitely many exclusions.
    """

    kind: DescriptionKind
    elements: frozenset[int] = field(default=frozenset())

    def __post_init__(self):
        object.__setattr__(self, "kind", DescriptionKind(self.kind))
        object.__setattr__(self, "elements", frozenset(self.elements))
        if any(not isinstance(x, int) or x < 0 for x in self.elements):
            raise ValueError("set descriptions hold natural numbers only")

    @classmethod
    def finite(cls, elements: Iterable[int]) -> SetDescription:
        return cls(DescriptionKind.FINITE, frozenset(elements))

    @classmethod
    def cofinite(cls, excluded: Iterable[int]) -> SetDescription:
        return cls(DescriptionKind.COFINITE, frozenset(excluded))

    @classmethod
    def primes_minus(cls, excluded: Iterable[int]) -> SetDescription:
        return cls(DescriptionKind.PRIMES_MINUS, frozenset(excluded))

    def __contains__(self, n: int) -> bool:
        kind = self.kind
        if kind is DescriptionKind.FINITE:
            return n in self.elements
        if kind is DescriptionKind.COFINITE:
            return n not in self.elements
        if kind is DescriptionKind.EVENS:
            return n % 2 == 0
        if kind is DescriptionKind.ODDS:
            return n % 2 == 1
        if kind is DescriptionKind.PRIMES:
            return is_prime(n)
        if kind is DescriptionKind.PRIMES_MINUS:
            return n not in self.elements and is_prime(n)
        return True

    @classmethod
    def parse(cls, text: str) -> SetDescription:
        """Parse ``evens``, ``odds``, ``primes``, ``naturals``, ``finite:1,2``,
        ``cofinite:3,5`` or ``primes-minus:2``."""
        head, _, tail = text.strip().partition(":")
        try:
            kind = DescriptionKind(head)
        except ValueError:
            raise UndecidableDescriptionError(f"unknown set description {text!r}") from None
        takes_elements = kind in (DescriptionKind.FINITE, DescriptionKind.COFINITE, DescriptionKind.PRIMES_MINUS)
        if tail and not takes_elements:
            raise UndecidableDescriptionError(f"{kind.value} takes no element list")
        try:
            elements = frozenset(int(x) for x in tail.split(",") if x.strip())
        except ValueError:
            raise UndecidableDescriptionError(f"bad element list in {text!r}") from None
        return cls(kind, elements)


def _as_membership(u) -> SetDescription:
    if isinstance(u, SetDescription):
        return u
    return SetDescription.finite(u)


def _primes_of(u, w: PrimeWindow) -> list[int]:
    desc = _as_membership(u)
    return [p for p in w.primes if p in desc]


def _multiples_marked(primes: Iterable[int], w: PrimeWindow) -> bytearray:
    marks = bytearray(w.bound + 1)
    for p in primes:
        marks[p :: p] = b"\x01" * len(range(p, w.bound + 1, p))
    return marks


def prime_plus(u, w: PrimeWindow) -> frozenset[int]:
    """Window numbers whose prime divisors all lie in ``U``."""
    inside = set(_primes_of(u, w))
    marks = _multiples_marked((p for p in w.primes if p not in inside), w)
    return frozenset(n for n in w.numbers if not marks[n])


def prime_minus(u, w: PrimeWindow) -> frozenset[int]:
    """Window numbers with some prime divisor in ``U``."""
    marks = _multiples_marked(_primes_of(u, w), w)
    return frozenset(n for n in w.numbers if marks[n])


def prime_leaf(p: int, w: PrimeWindow) -> frozenset[int]:
    """Powers ``p, p^2, ...`` inside the window."""
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrimeError(f"{p!r} is not prime")
    out = []
    q = p
    while q <= w.bound:
        out.append(q)
        q *= p
    return frozenset(out)


def wall_aleph0_contains(u: SetDescription) -> bool:
    """Whether only finitely many naturals have a prime divisor outside ``U``.

    That holds exactly when ``U`` contains every prime; a missing prime ``q``
    leaves all multiples of ``q`` outside.
    """
    if not isinstance(u, SetDescription):
        raise UndecidableDescriptionError(f"cannot decide membership for {u!r}")
    kind = u.kind
    if kind in (DescriptionKind.FINITE, DescriptionKind.EVENS, DescriptionKind.ODDS):
        return False
    if kind in (DescriptionKind.COFINITE, DescriptionKind.PRIMES_MINUS):
        return not any(is_prime(x) for x in u.elements)
    if kind in (DescriptionKind.PRIMES, DescriptionKind.NATURALS):
        return True
    raise UndecidableDescriptionError(f"cannot decide membership for {u!r}")


def prime_multifunction(w: PrimeWindow) -> MultiFunction:
    """``n -> Prime(n)`` on the window."""
    rows = []
    for n in w.numbers:
        row = 0
        for p in w.prime_divisors(n):
            row |= 1 << (p - 2)
        rows.append(row)
    return MultiFunction(w.universe, tuple(rows))


def symmetric_prime_multifunction(w: PrimeWindow) -> MultiFunction:
    """``(Prime | Prime^-1)`` with every loop removed, on the window."""
    plain = prime_multifunction(w).rows
    rows = list(plain)
    for v, row in enumerate(plain):
        for u in iter_bits(row):
            rows[u] |= 1 << v
    return MultiFunction(w.universe, tuple(row & ~(1 << v) for v, row in enumerate(rows)))
