"""Monomials as dense exponent vectors, with the Borel order and friends.

Variables are 1-based: ``x1 .. xn``.  A monomial of degree ``d`` is also
viewed through its *factorization*, the sorted tuple ``(i_1 <= ... <= i_d)``
of variable indices, which is what the Borel order, truncation and meets
operate on.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DomainError

__all__ = [
    "Monomial",
    "factorization",
    "extremes",
    "borel_precedes",
    "truncate_monomial",
    "meet",
    "tau",
    "tau_inverse",
    "lex_key",
]


@dataclass(frozen=True)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if not exps:
            raise DomainError("a monomial needs at least one ambient variable")
        if any(e < 0 for e in exps):
            raise DomainError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def one(cls, n: int) -> Monomial:
        return cls((0,) * n)

    @classmethod
    def var(cls, i: int, n: int) -> Monomial:
        if not 1 <= i <= n:
            raise DomainError(f"variable index {i} outside 1..{n}")
        exps = [0] * n
        exps[i - 1] = 1
        return cls(tuple(exps))

    @classmethod
    def from_factorization(cls, indices: Iterable[int], n: int) -> Monomial:
        exps = [0] * n
        for i in indices:
            if not 1 <= i <= n:
                raise DomainError(f"variable index {i} outside 1..{n}")
            exps[i - 1] += 1
        return cls(tuple(exps))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @cached_property
    def degree(self) -> int:
        return sum(self.exponents)

    @cached_property
    def factorization(self) -> tuple[int, ...]:
        out: list[int] = []
        for i, e in enumerate(self.exponents, start=1):
            out.extend([i] * e)
        return tuple(out)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents, start=1) if e)

    @property
    def is_one(self) -> bool:
        return self.degree == 0

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    @property
    def max_index(self) -> int:
        return extremes(self)[1]

    @property
    def min_index(self) -> int:
        return extremes(self)[0]

    def lift(self, n: int) -> Monomial:
        """The same monomial viewed in ``n`` variables."""
        if n == self.n:
            return self
        if n < self.n and any(self.exponents[n:]):
            raise DomainError(f"{self} involves a variable beyond x{n}")
        if n < self.n:
            return Monomial(self.exponents[:n])
        return Monomial(self.exponents + (0,) * (n - self.n))

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: Monomial) -> Monomial:
        _same_ambient(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other: Monomial) -> Monomial:
        _same_ambient(self, other)
        if not other.divides(self):
            raise DomainError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def times_var(self, i: int, power: int = 1) -> Monomial:
        exps = list(self.exponents)
        exps[i - 1] += power
        return Monomial(tuple(exps))

    def __str__(self) -> str:
        from .grammar import format_monomial

        return format_monomial(self)


def _same_ambient(a: Monomial, b: Monomial) -> None:
    if a.n != b.n:
        raise DomainError(f"monomials live in different rings ({a.n} vs {b.n} variables)")


def lex_key(m: Monomial) -> tuple[int, ...]:
    """Sort key for the ungraded lex order with x1 > x2 > ...; sort with reverse=True."""
    return m.exponents


def factorization(m: Monomial) -> list[int]:
    return list(m.factorization)


def extremes(m: Monomial) -> tuple[int, int, int]:
    """``(min index, max index, degree)``; undefined for the monomial 1."""
    f = m.factorization
    if not f:
        raise DomainError("min/max of the monomial 1 are undefined")
    return f[0], f[-1], len(f)


def _precedes(f1: Sequence[int], f2: Sequence[int]) -> bool:
    if len(f1) < len(f2):
        return False
    return all(a <= b for a, b in zip(f1, f2))


def borel_precedes(m1: Monomial, m2: Monomial) -> bool:
    """True iff ``m1`` precedes ``m2`` in the Borel order, i.e. m1 lies in Borel(m2)."""
    return _precedes(m1.factorization, m2.factorization)


def truncate_monomial(m: Monomial, d: int) -> Monomial:
    if d < 0:
        raise DomainError("truncation degree must be nonnegative")
    f = m.factorization
    if d >= len(f):
        return m
    return Monomial.from_factorization(f[:d], m.n)


def meet(u: Monomial, v: Monomial) -> Monomial:
    """Greatest lower bound of ``u`` and ``v`` in degree ``max(deg u, deg v)``."""
    _same_ambient(u, v)
    fu, fv = u.factorization, v.factorization
    if len(fu) < len(fv):
        fu, fv = fv, fu
    merged = [min(a, b) for a, b in zip(fu, fv)] + list(fu[len(fv):])
    return Monomial.from_factorization(merged, u.n)


def tau(m: Monomial) -> Monomial:
    """Shift the j-th factor of a squarefree monomial down by ``j - 1``."""
    if not m.is_squarefree:
        raise DomainError(f"tau is only defined on squarefree monomials, got {m}")
    return Monomial.from_factorization((i - j for j, i in enumerate(m.factorization)), m.n)


def tau_inverse(m: Monomial, n: int | None = None) -> Monomial:
    """Inverse of :func:`tau`; the result lives in ``n`` variables (default ``m.n``)."""
    n = m.n if n is None else n
    shifted = [i + j for j, i in enumerate(m.factorization)]
    if shifted and shifted[-1] > n:
        raise DomainError(f"tau inverse of {m} needs x{shifted[-1]} but only {n} variables exist")
    return Monomial.from_factorization(shifted, n)
