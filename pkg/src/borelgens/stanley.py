"""Stanley decomposition of S/B, Hilbert series, depth and multiplicity.

The decomposition follows the truncation filtration
``(1) = trunc_0(B) ⊇ trunc_1(B) ⊇ ... ⊇ trunc_d(B) = B``: every degree-s
generator ``m`` of ``trunc_s(B)`` outside ``B`` contributes the summand
``m * k[x_j : m x_j not in trunc_{s+1}(B)]``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import comb

from .errors import DomainError
from .ideal import BorelIdeal, codim_pdim, gens_in_degree, membership, truncate_ideal
from .monomial import Monomial
from .series import one_minus_t_pow, padd, pmul, shift, trim


@dataclass(frozen=True)
class StanleySummand:
    base: Monomial
    vars: tuple[int, ...]

    def contains(self, mu: Monomial) -> bool:
        if not self.base.divides(mu):
            return False
        rest = mu / self.base
        return all(i in self.vars for i in rest.support)


@dataclass(frozen=True)
class StanleyDecomposition:
    summands: tuple[StanleySummand, ...]
    ambient: BorelIdeal

    def __len__(self) -> int:
        return len(self.summands)

    def __iter__(self):
        return iter(self.summands)

    def size_counts(self) -> dict[int, int]:
        """Number of summands per ``|Z|``."""
        out: dict[int, int] = defaultdict(int)
        for s in self.summands:
            out[len(s.vars)] += 1
        return dict(sorted(out.items(), reverse=True))

    def min_size(self) -> int:
        return min(len(s.vars) for s in self.summands)


@dataclass(frozen=True)
class HilbertSeries:
    """``sum c t^d / (1-t)^e`` over ``terms``, with normal form ``h(t) / (1-t)^dim``."""

    terms: tuple[tuple[int, int, int], ...]
    h: tuple[int, ...]
    dim: int

    def values(self, cutoff: int) -> list[int]:
        out = []
        for k in range(cutoff + 1):
            total = 0
            for c, d, e in self.terms:
                if k < d:
                    continue
                total += c * (comb(k - d + e - 1, e - 1) if e else int(k == d))
            out.append(total)
        return out

    def values_from_h(self, cutoff: int) -> list[int]:
        """Same stream, expanded from the normal form instead of the term list."""
        out = []
        for k in range(cutoff + 1):
            total = 0
            for d, c in enumerate(self.h):
                if k < d:
                    continue
                total += c * (comb(k - d + self.dim - 1, self.dim - 1) if self.dim else int(k == d))
            out.append(total)
        return out

    def k_polynomial(self, codim: int) -> list[int]:
        """``h(t) (1-t)^codim``, the numerator over ``(1-t)^n``."""
        return pmul(self.h, one_minus_t_pow(codim))


def stanley_decomposition(B: BorelIdeal) -> StanleyDecomposition:
    if B.squarefree:
        raise DomainError("Stanley decompositions are implemented for Borel ideals only")
    if B.is_unit:
        raise DomainError("S/B = 0 for the unit ideal")
    n = B.nvars
    everything = tuple(range(1, n + 1))
    if B.is_zero:
        return StanleyDecomposition((StanleySummand(Monomial.one(n), everything),), B)
    summands = []
    upper = truncate_ideal(B, 0)
    for s in range(B.maxdeg):
        lower = truncate_ideal(B, s + 1)
        for m in gens_in_degree(upper, s):
            if membership(B, m):
                continue
            z = tuple(j for j in everything if not membership(lower, m.times_var(j)))
            summands.append(StanleySummand(m, z))
        upper = lower
    return StanleyDecomposition(tuple(summands), B)


def stanley_depth_depth(B: BorelIdeal) -> tuple[int, int]:
    """Both equal ``n - q``, q the largest variable index among the Borel generators."""
    B.require_proper("depth")
    q = max(m.max_index for m in B.bgens)
    return B.nvars - q, B.nvars - q


def _dimension(B: BorelIdeal) -> int:
    return B.nvars if B.is_zero else B.nvars - codim_pdim(B)[0]


def hilbert_series(B: BorelIdeal, decomposition: StanleyDecomposition | None = None) -> HilbertSeries:
    D = decomposition or stanley_decomposition(B)
    agg: dict[tuple[int, int], int] = defaultdict(int)
    for s in D:
        agg[(s.base.degree, len(s.vars))] += 1
    terms = tuple((c, d, e) for (d, e), c in sorted(agg.items(), key=lambda kv: (kv[0][0], -kv[0][1])))
    dim = _dimension(B)
    h: list[int] = []
    for c, d, e in terms:
        if e > dim:
            raise AssertionError("summand dimension exceeds Krull dimension")
        h = padd(h, [c * x for x in shift(one_minus_t_pow(dim - e), d)])
    return HilbertSeries(terms, tuple(trim(h)), dim)


def hilbert_values(B: BorelIdeal, cutoff: int) -> list[int]:
    if cutoff < 0:
        raise DomainError("cutoff must be nonnegative")
    return hilbert_series(B).values(cutoff)


def multiplicity(B: BorelIdeal) -> int:
    """Number of Stanley summands of the top dimension ``n - codim``."""
    B.require_proper("multiplicity")
    top = _dimension(B)
    return sum(1 for s in stanley_decomposition(B) if len(s.vars) == top)


def grouped_view(D: StanleyDecomposition) -> dict[int, list[StanleySummand]]:
    """Summands grouped by ``j = n - |Z|``; all summands in group j are ``m * k[x_{j+1..n}]``."""
    n = D.ambient.nvars
    groups: dict[int, list[StanleySummand]] = defaultdict(list)
    for s in D:
        groups[n - len(s.vars)].append(s)
    return dict(sorted(groups.items()))
