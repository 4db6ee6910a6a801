"""Associated primes of Borel ideals and Alexander duals of squarefree Borel ideals.

Every associated prime of ``S/B`` has the form ``P_p = (x_1, ..., x_p)``, so
results are reported as sorted lists of the integers ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .ideal import BorelIdeal, SqfBorelIdeal, intersect, membership, truncate_ideal
from .monomial import Monomial


@dataclass(frozen=True, order=True)
class PrimeIdeal:
    """``(x_1, ..., x_p)``."""

    p: int

    def generators(self, n: int) -> list[Monomial]:
        return [Monomial.var(i, n) for i in range(1, self.p + 1)]

    def __str__(self) -> str:
        return f"P{self.p}"


@dataclass(frozen=True)
class SupportPrime:
    """The prime generated by the variables in ``support``."""

    support: frozenset[int]

    def __post_init__(self):
        if not self.support:
            raise DomainError("a support prime needs at least one variable")

    def monomial(self, n: int) -> Monomial:
        return Monomial.from_factorization(sorted(self.support), n)


def is_p_socle(B: BorelIdeal, mu: Monomial, p: int) -> bool:
    """Whether ``Ann_{S/B}(mu) = (x_1, ..., x_p)``.

    Checking ``mu * x_{p+1}^D`` with ``D`` the largest Borel generator degree
    is enough: a generator dividing ``mu * x_{p+1}^N`` uses at most D copies.
    """
    n = B.nvars
    if not 1 <= p <= n:
        raise DomainError(f"p = {p} outside 1..{n}")
    if membership(B, mu) or not membership(B, mu.times_var(p)):
        return False
    return p == n or not membership(B, mu.times_var(p + 1, B.maxdeg))


def ass_socle(B: BorelIdeal) -> list[int]:
    """For each p, test whether m / x_p is a p-socle for some Borel generator m divisible by x_p."""
    B.require_proper("associated primes")
    found = []
    for p in range(1, B.nvars + 1):
        candidates = [m for m in B.bgens if m.exponents[p - 1]]
        if any(is_p_socle(B, m / Monomial.var(p, B.nvars), p) for m in candidates):
            found.append(p)
    return found


def ass_trunc_trace(B: BorelIdeal) -> list[tuple[int, BorelIdeal, list[int]]]:
    """``(i, trunc_i(B), primes read off its degree-i Borel generators)`` for i = d..1."""
    B.require_proper("associated primes")
    trace = []
    for i in range(B.maxdeg, 0, -1):
        T = truncate_ideal(B, i)
        primes = sorted({m.max_index for m in T.bgens if m.degree == i})
        trace.append((i, T, primes))
    return trace


def ass_trunc(B: BorelIdeal) -> list[int]:
    """Associated primes without any socle test, from the truncations of B."""
    return sorted({p for _, _, primes in ass_trunc_trace(B) for p in primes})


def ass_principal(m: Monomial) -> list[int]:
    if m.is_one:
        raise DomainError("Borel(1) is the unit ideal; it has no associated primes")
    return list(m.support)


def principal_from_primes(ps, n: int) -> BorelIdeal:
    """A principal Borel ideal whose associated primes are exactly ``P_p`` for p in ``ps``."""
    ps = sorted(set(ps))
    if not ps:
        raise DomainError("need at least one prime")
    return BorelIdeal(n, (Monomial.from_factorization(ps, n),))


def _run(a: int, b: int, n: int) -> Monomial:
    return Monomial.from_factorization(range(a, b + 1), n)


def alexander_dual_principal(m: Monomial) -> SqfBorelIdeal:
    """Dual of sfBorel(m): generated by ``x_j ... x_{i_j}`` where the run is not absorbed by the next one."""
    if not m.is_squarefree:
        raise DomainError(f"{m} is not squarefree")
    idx = m.factorization
    if not idx:
        raise DomainError("the dual of the unit ideal is the zero ideal")
    s = len(idx)
    gens = [
        _run(j, idx[j - 1], m.n)
        for j in range(1, s + 1)
        if j == s or idx[j - 1] < idx[j] - 1
    ]
    return SqfBorelIdeal(m.n, tuple(gens))


def alexander_dual(B: SqfBorelIdeal) -> SqfBorelIdeal:
    """Dual of a sum is the intersection of the duals of the principal pieces."""
    if not B.squarefree:
        raise DomainError("Alexander duals are only defined here for squarefree Borel ideals")
    B.require_proper("the Alexander dual")
    pieces = [alexander_dual_principal(m) for m in B.bgens]
    dual = pieces[0]
    for piece in pieces[1:]:
        dual = intersect(dual, piece)
    return dual
