"""Borel and squarefree Borel ideals, stored by their minimal Borel generators.

A :class:`BorelIdeal` is the smallest ideal containing its ``bgens`` that is
closed under Borel moves (replacing ``x_j`` by ``x_i`` with ``i < j``).
Membership is decided directly on the Borel generators: ``mu`` lies in
``Borel(T)`` iff ``mu`` precedes some element of ``T`` in the Borel order.
Minimal monomial generators are produced by a lattice-path walk over
factorizations and are never needed for the algebra in this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import ClassVar, Iterable, Iterator, Mapping, Sequence

from .errors import DomainError
from .monomial import (
    Monomial,
    _precedes,
    borel_precedes,
    lex_key,
    meet,
    truncate_monomial,
)

__all__ = [
    "BorelIdeal",
    "SqfBorelIdeal",
    "WTable",
    "bgens_from_set",
    "min_gens",
    "membership",
    "ideal_sum",
    "intersect",
    "product",
    "colon_var",
    "saturate_var",
    "truncate_ideal",
    "codim_pdim",
    "mmul",
    "w_table",
    "maximal_ideal",
]


def _minimize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Keep the elements not strictly preceding another element (Borel antichain)."""
    uniq = sorted(set(gens), key=lambda m: (m.degree, lex_key(m)))
    kept: list[Monomial] = []
    for m in uniq:
        # lower degrees come first, so anything m could precede is already seen
        if not any(borel_precedes(m, k) for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=lex_key, reverse=True))


@dataclass(frozen=True)
class _BorelBase:
    nvars: int
    bgens: tuple[Monomial, ...] = ()

    squarefree: ClassVar[bool] = False

    def __post_init__(self):
        if self.nvars < 1:
            raise DomainError("the ring needs at least one variable")
        lifted = [m.lift(self.nvars) for m in self.bgens]
        if self.squarefree:
            bad = [m for m in lifted if not m.is_squarefree]
            if bad:
                raise DomainError(f"squarefree Borel generator expected, got {bad[0]}")
        object.__setattr__(self, "bgens", _minimize(lifted))

    @classmethod
    def from_generators(cls, gens: Iterable[Monomial], n: int):
        return cls(n, tuple(gens))

    @classmethod
    def zero(cls, n: int):
        return cls(n, ())

    @classmethod
    def unit(cls, n: int):
        return cls(n, (Monomial.one(n),))

    @property
    def is_zero(self) -> bool:
        return not self.bgens

    @property
    def is_unit(self) -> bool:
        return any(m.is_one for m in self.bgens)

    @property
    def is_principal(self) -> bool:
        return len(self.bgens) == 1

    @property
    def maxdeg(self) -> int:
        return max((m.degree for m in self.bgens), default=0)

    def require_proper(self, what: str = "this operation") -> None:
        if self.is_zero:
            raise DomainError(f"{what} is undefined for the zero ideal")
        if self.is_unit:
            raise DomainError(f"{what} is undefined for the unit ideal")

    def _key(self, mu: Monomial) -> tuple[int, ...]:
        return mu.support if self.squarefree else mu.factorization

    def __contains__(self, mu: Monomial) -> bool:
        return membership(self, mu)

    @cached_property
    def min_gens(self) -> tuple[Monomial, ...]:
        return tuple(min_gens(self))

    @cached_property
    def w_table(self) -> WTable:
        return w_table(self)

    def __str__(self) -> str:
        from .grammar import format_ideal

        return format_ideal(self)

    def _check_compatible(self, other) -> None:
        if type(self) is not type(other):
            raise DomainError("cannot combine a Borel ideal with a squarefree Borel ideal")
        if self.nvars != other.nvars:
            raise DomainError(f"ideals live in different rings ({self.nvars} vs {other.nvars} variables)")

    def __add__(self, other):
        return ideal_sum(self, other)

    def __and__(self, other):
        return intersect(self, other)


class BorelIdeal(_BorelBase):
    """A strongly stable monomial ideal in ``nvars`` variables."""

    def __mul__(self, other):
        return product(self, other)


class SqfBorelIdeal(_BorelBase):
    """A squarefree strongly stable ideal, generated by squarefree monomials."""

    squarefree: ClassVar[bool] = True


def maximal_ideal(n: int) -> BorelIdeal:
    return BorelIdeal(n, (Monomial.var(n, n),))


def bgens_from_set(T: Iterable[Monomial], n: int, squarefree: bool = False):
    cls = SqfBorelIdeal if squarefree else BorelIdeal
    return cls(n, tuple(T))


def membership(B: _BorelBase, mu: Monomial) -> bool:
    if mu.n != B.nvars:
        mu = mu.lift(B.nvars)
    key = B._key(mu)
    return any(_precedes(key, m.factorization) for m in B.bgens)


# --- lattice-path walks over factorizations ---------------------------------


def _walk(facs: Sequence[tuple[int, ...]], n: int, d: int, strict: bool) -> Iterator[tuple[int, ...]]:
    """Factorizations of the degree-``d`` minimal generators of the ideal on ``facs``.

    ``mu`` (degree d) is a minimal generator iff it precedes a degree-d
    generator while its (d-1)-prefix precedes no generator.  A branch dies as
    soon as a proper prefix lands in the ideal.
    """
    relevant = [f for f in facs if len(f) <= d]
    step = 1 if strict else 0

    def rec(prefix: list[int], alive: list[int]) -> Iterator[tuple[int, ...]]:
        t = len(prefix)
        if t == d:
            if any(len(relevant[k]) == d for k in alive):
                yield tuple(prefix)
            return
        lo = prefix[-1] + step if prefix else 1
        hi = min(n, max(relevant[k][t] for k in alive))
        for i in range(lo, hi + 1):
            nxt = [k for k in alive if relevant[k][t] >= i]
            if not nxt:
                break
            if t + 1 < d and any(len(relevant[k]) == t + 1 for k in nxt):
                continue
            prefix.append(i)
            yield from rec(prefix, nxt)
            prefix.pop()

    if d == 0 or not relevant:
        return
    yield from rec([], list(range(len(relevant))))


def _count_by_max(facs: Sequence[tuple[int, ...]], n: int, d: int, strict: bool) -> list[int]:
    """Like :func:`_walk`, but only the number of generators per max index (1..n)."""
    relevant = tuple(f for f in facs if len(f) <= d)
    step = 1 if strict else 0
    if d == 0 or not relevant:
        return [0] * n

    @lru_cache(maxsize=None)
    def rec(t: int, last: int, alive: int) -> tuple[int, ...]:
        out = [0] * n
        lo = last + step if t else 1
        members = [k for k in range(len(relevant)) if alive >> k & 1]
        hi = min(n, max(relevant[k][t] for k in members))
        for i in range(lo, hi + 1):
            nxt = 0
            for k in members:
                if relevant[k][t] >= i:
                    nxt |= 1 << k
            if not nxt:
                break
            done = any(len(relevant[k]) == t + 1 for k in range(len(relevant)) if nxt >> k & 1)
            if t + 1 == d:
                if done:
                    out[i - 1] += 1
                continue
            if done:
                continue
            for j, c in enumerate(rec(t + 1, i, nxt)):
                out[j] += c
        return tuple(out)

    return list(rec(0, 0, (1 << len(relevant)) - 1))


def min_gens(B: _BorelBase) -> list[Monomial]:
    """Minimal monomial generators, in descending lex order."""
    if B.is_zero:
        return []
    if B.is_unit:
        return [Monomial.one(B.nvars)]
    facs = [m.factorization for m in B.bgens]
    out = []
    for d in sorted({len(f) for f in facs}):
        out.extend(Monomial.from_factorization(f, B.nvars) for f in _walk(facs, B.nvars, d, B.squarefree))
    out.sort(key=lex_key, reverse=True)
    return out


def gens_in_degree(B: _BorelBase, d: int) -> list[Monomial]:
    """Minimal generators of degree exactly ``d`` (used by truncation filtrations)."""
    if B.is_unit:
        return [Monomial.one(B.nvars)] if d == 0 else []
    facs = [m.factorization for m in B.bgens]
    return [Monomial.from_factorization(f, B.nvars) for f in _walk(facs, B.nvars, d, B.squarefree)]


# --- ideal operations -------------------------------------------------------


def ideal_sum(B1: _BorelBase, B2: _BorelBase):
    B1._check_compatible(B2)
    return type(B1)(B1.nvars, B1.bgens + B2.bgens)


def intersect(B1: _BorelBase, B2: _BorelBase):
    """Pairwise meets of Borel generators; squarefree meets stay squarefree."""
    B1._check_compatible(B2)
    return type(B1)(B1.nvars, tuple(meet(u, v) for u in B1.bgens for v in B2.bgens))


def product(B1: BorelIdeal, B2: BorelIdeal) -> BorelIdeal:
    B1._check_compatible(B2)
    if B1.squarefree:
        raise DomainError("products are not defined for squarefree Borel ideals")
    return BorelIdeal(B1.nvars, tuple(u * v for u in B1.bgens for v in B2.bgens))


def _colon_principal(m: Monomial, j: int) -> Monomial:
    for i in m.factorization:
        if i >= j:
            return m / Monomial.var(i, m.n)
    return m


def colon_var(B: BorelIdeal, j: int) -> BorelIdeal:
    """The colon ideal ``(B : x_j)``."""
    _require_borel(B, "colon")
    if not 1 <= j <= B.nvars:
        raise DomainError(f"variable index {j} outside 1..{B.nvars}")
    return BorelIdeal(B.nvars, tuple(_colon_principal(m, j) for m in B.bgens))


def saturate_var(B: BorelIdeal, j: int) -> BorelIdeal:
    """``(B : x_j^infinity)``, by repeated colons until the ideal stops changing."""
    current = B
    while True:
        nxt = colon_var(current, j)
        if nxt == current:
            return current
        current = nxt


def truncate_ideal(B: BorelIdeal, d: int) -> BorelIdeal:
    """The ideal generated by the d-truncations of all elements of ``B``.

    For ``d = 0`` this is the unit ideal (when ``B`` is nonzero).
    """
    _require_borel(B, "truncation")
    if d < 0:
        raise DomainError("truncation degree must be nonnegative")
    return BorelIdeal(B.nvars, tuple(truncate_monomial(m, d) for m in B.bgens))


def codim_pdim(B: _BorelBase) -> tuple[int, int]:
    """``(codim B, pd S/B)`` read off the Borel generators."""
    B.require_proper("codim/pdim")
    codim = max(m.min_index for m in B.bgens)
    if B.squarefree:
        pdim = max(m.max_index - m.degree for m in B.bgens) + 1
    else:
        pdim = max(m.max_index for m in B.bgens)
    return codim, pdim


def mmul(B: _BorelBase):
    """Multiply by the maximal ideal (taking the squarefree part in the squarefree case)."""
    n = B.nvars
    new = []
    for u in B.bgens:
        if not B.squarefree:
            new.append(u.times_var(n))
            continue
        free = [s for s in range(1, n + 1) if not u.exponents[s - 1]]
        if not free:
            raise DomainError(f"{u} is divisible by every variable; no squarefree multiple exists")
        new.append(u.times_var(free[-1]))
    return type(B)(n, tuple(new))


def _require_borel(B, what: str) -> None:
    if B.squarefree:
        raise DomainError(f"{what} is only implemented for (non-squarefree) Borel ideals")


# --- w-vectors --------------------------------------------------------------


@dataclass(frozen=True, eq=True)
class WTable:
    """Counts of minimal generators keyed by ``(degree, max index)``."""

    nvars: int
    counts: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "counts", {k: v for k, v in sorted(self.counts.items()) if v})

    __hash__ = None  # type: ignore[assignment]

    def w(self, d: int, i: int) -> int:
        return self.counts.get((d, i), 0)

    def w_leq(self, d: int, i: int) -> int:
        return sum(self.w(d, j) for j in range(1, i + 1))

    def degrees(self) -> list[int]:
        return sorted({d for d, _ in self.counts})

    def vector(self, d: int) -> list[int]:
        """``[w_1, ..., w_n]`` in degree ``d``."""
        return [self.w(d, i) for i in range(1, self.nvars + 1)]

    def total(self, d: int | None = None) -> int:
        return sum(v for (dd, _), v in self.counts.items() if d is None or dd == d)

    def single_degree(self) -> int:
        degs = self.degrees()
        if len(degs) != 1:
            raise DomainError(f"expected generators in a single degree, found degrees {degs}")
        return degs[0]

    def generating_function(self, d: int | None = None) -> list[int]:
        """Coefficients ``[f_0, ..., f_n]`` of ``f(t) = sum_i w_i t^i``."""
        d = self.single_degree() if d is None else d
        return [0] + self.vector(d)

    @classmethod
    def from_vector(cls, d: int, w: Sequence[int], nvars: int | None = None) -> WTable:
        n = len(w) if nvars is None else nvars
        return cls(n, {(d, i): c for i, c in enumerate(w, start=1)})

    @classmethod
    def from_monomials(cls, gens: Iterable[Monomial], nvars: int) -> WTable:
        counts: dict[tuple[int, int], int] = {}
        for m in gens:
            key = (m.degree, m.max_index)
            counts[key] = counts.get(key, 0) + 1
        return cls(nvars, counts)


def w_table(B: _BorelBase) -> WTable:
    """w-vectors by memoized path counting; no generator is materialized."""
    if B.is_unit:
        raise DomainError("w-vectors are undefined for the unit ideal")
    facs = [m.factorization for m in B.bgens]
    counts = {}
    for d in sorted({len(f) for f in facs}):
        for i, c in enumerate(_count_by_max(facs, B.nvars, d, B.squarefree), start=1):
            counts[(d, i)] = c
    return WTable(B.nvars, counts)
