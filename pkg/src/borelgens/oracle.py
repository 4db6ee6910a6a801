"""Brute-force reference computations on explicit generator lists.

Nothing here calls the Borel-order machinery of the fast modules: monomials
are raw exponent tuples, ideals are lists of generators, and every question
is answered by divisibility scans.  Inputs are capped at six variables and
generator degree six; beyond that these routines are too slow to be useful.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement

from .monomial import Monomial

MAX_NVARS = 6
MAX_DEGREE = 6

Exps = tuple[int, ...]


def _check_bounds(n: int, degree: int) -> None:
    if n > MAX_NVARS or degree > MAX_DEGREE:
        raise ValueError(f"oracle limited to n <= {MAX_NVARS}, degree <= {MAX_DEGREE} (got {n}, {degree})")


def _divides(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize(gens) -> list[Exps]:
    """Drop generators divisible by another one; result sorted descending lex."""
    uniq = sorted(set(gens), key=sum)
    kept: list[Exps] = []
    for g in uniq:
        if not any(_divides(k, g) for k in kept):
            kept.append(g)
    return sorted(kept, reverse=True)


def monomials_of_degree(n: int, d: int) -> list[Exps]:
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return out


@dataclass(frozen=True)
class NaiveMonomialIdeal:
    n: int
    generators: tuple[Exps, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(minimalize(tuple(g) for g in self.generators)))

    @classmethod
    def from_monomials(cls, gens, n: int) -> NaiveMonomialIdeal:
        return cls(n, tuple(m.exponents if isinstance(m, Monomial) else tuple(m) for m in gens))

    def contains(self, mu: Exps) -> bool:
        return naive_membership(self, mu)

    def maxdeg(self) -> int:
        return max((sum(g) for g in self.generators), default=0)


def naive_membership(I: NaiveMonomialIdeal, mu) -> bool:
    mu = mu.exponents if isinstance(mu, Monomial) else tuple(mu)
    return any(_divides(g, mu) for g in I.generators)


def naive_borel_closure(T, n: int, dmax: int | None = None) -> list[Exps]:
    """Minimal generators of the smallest Borel ideal containing ``T``.

    Breadth-first closure under single moves ``x_j -> x_i`` (i < j), which
    preserve degree, followed by divisibility minimization.
    """
    start = [m.exponents if isinstance(m, Monomial) else tuple(m) for m in T]
    top = max((sum(e) for e in start), default=0)
    dmax = top if dmax is None else dmax
    if dmax < top:
        raise ValueError("dmax below the largest generator degree")
    _check_bounds(n, dmax)
    seen = set(start)
    queue = deque(start)
    while queue:
        e = queue.popleft()
        for j in range(n):
            if not e[j]:
                continue
            for i in range(j):
                moved = list(e)
                moved[j] -= 1
                moved[i] += 1
                moved = tuple(moved)
                if moved not in seen:
                    seen.add(moved)
                    queue.append(moved)
    return minimalize(seen)


def expand(B) -> NaiveMonomialIdeal:
    """A Borel or squarefree Borel ideal as an explicit monomial ideal."""
    n = B.nvars
    if B.squarefree:
        closure = naive_sqf_borel_closure([m.exponents for m in B.bgens], n)
    else:
        closure = naive_borel_closure([m.exponents for m in B.bgens], n)
    return NaiveMonomialIdeal(n, tuple(closure))


def naive_sqf_borel_closure(T, n: int) -> list[Exps]:
    """Squarefree analogue: moves only between squarefree monomials."""
    start = [tuple(e) for e in T]
    _check_bounds(n, max((sum(e) for e in start), default=0))
    seen = set(start)
    queue = deque(start)
    while queue:
        e = queue.popleft()
        for j in range(n):
            if not e[j]:
                continue
            for i in range(j):
                if e[i]:
                    continue
                moved = list(e)
                moved[j], moved[i] = 0, 1
                moved = tuple(moved)
                if moved not in seen:
                    seen.add(moved)
                    queue.append(moved)
    return minimalize(seen)


def colon_by_monomial(I: NaiveMonomialIdeal, mu: Exps) -> NaiveMonomialIdeal:
    return NaiveMonomialIdeal(I.n, tuple(tuple(max(g - m, 0) for g, m in zip(gen, mu)) for gen in I.generators))


def naive_ass(B) -> list[int]:
    """p such that ``(x_1..x_p) = (B : mu)`` for some standard monomial ``mu`` of degree < maxdeg."""
    I = expand(B)
    n = I.n
    D = max(sum(m.exponents) for m in B.bgens)
    _check_bounds(n, D)
    primes = {tuple(1 if k == p else 0 for k in range(n)) for p in range(n)}
    found = set()
    for d in range(D):
        for mu in monomials_of_degree(n, d):
            if naive_membership(I, mu):
                continue
            ann = colon_by_monomial(I, mu).generators
            if set(ann) <= primes:
                support = sorted(g.index(1) + 1 for g in ann)
                if support != list(range(1, len(support) + 1)):
                    raise AssertionError(f"associated prime on {support} is not of the form (x_1..x_p)")
                found.add(len(support))
    return sorted(found)


def naive_std_count(B, t: int) -> int:
    """Number of degree-t monomials outside B."""
    I = B if isinstance(B, NaiveMonomialIdeal) else expand(B)
    return sum(1 for mu in monomials_of_degree(I.n, t) if not naive_membership(I, mu))


def naive_ideal_ops(I: NaiveMonomialIdeal, J, op: str) -> NaiveMonomialIdeal:
    """``op`` in {"intersect", "product", "colon"}; for colon, ``J`` is a variable index."""
    if op == "intersect":
        gens = (tuple(max(a, b) for a, b in zip(g, h)) for g in I.generators for h in J.generators)
    elif op == "product":
        gens = (tuple(a + b for a, b in zip(g, h)) for g in I.generators for h in J.generators)
    elif op == "colon":
        var = tuple(1 if k == J - 1 else 0 for k in range(I.n))
        return colon_by_monomial(I, var)
    else:
        raise ValueError(f"unknown op {op!r}")
    return NaiveMonomialIdeal(I.n, tuple(set(gens)))


def naive_truncation(I: NaiveMonomialIdeal, d: int, degree_bound: int) -> NaiveMonomialIdeal:
    """Ideal of d-truncations of every monomial of I up to ``degree_bound``."""
    out = set()
    for deg in range(degree_bound + 1):
        for mu in monomials_of_degree(I.n, deg):
            if not naive_membership(I, mu):
                continue
            kept, left = [0] * I.n, d
            for k in range(I.n):
                take = min(mu[k], left)
                kept[k] = take
                left -= take
            out.add(tuple(kept))
    return NaiveMonomialIdeal(I.n, tuple(out))


def minimal_vertex_covers(I: NaiveMonomialIdeal) -> list[frozenset[int]]:
    """Minimal variable sets meeting the support of every generator (1-based)."""
    supports = [frozenset(k + 1 for k, e in enumerate(g) if e) for g in I.generators]
    covers: list[frozenset[int]] = []
    for size in range(I.n + 1):
        for combo in combinations(range(1, I.n + 1), size):
            s = frozenset(combo)
            if any(c <= s for c in covers):
                continue
            if all(s & sup for sup in supports):
                covers.append(s)
    return covers


def std_monomials_upto(I: NaiveMonomialIdeal, cutoff: int) -> set[Exps]:
    return {mu for d in range(cutoff + 1) for mu in monomials_of_degree(I.n, d) if not naive_membership(I, mu)}
