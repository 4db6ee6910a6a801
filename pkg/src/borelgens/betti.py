"""Graded Betti numbers via Eliahou–Kervaire counts, Poincaré series, and the
pointed pseudo-triangulation numbers.

An EK symbol ``(m, alpha)`` pairs a minimal generator ``m`` with a squarefree
``alpha`` in the variables before ``max(m)``, so generator ``m`` contributes
``C(max(m) - 1, i)`` to ``b_{i, i + deg m}(B)``.  In the squarefree case only
squarefree multidegrees survive, giving ``C(max(m) - deg(m), i)``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from math import comb
from typing import Mapping

from .catalan import catalan_number, w_principal
from .errors import DomainError, InternalError
from .ideal import BorelIdeal, SqfBorelIdeal, WTable, gens_in_degree, intersect, w_table
from .monomial import Monomial
from .series import BiPoly, RationalBiSeries, compose_one_plus_tu, trim


@dataclass(frozen=True)
class BettiTable:
    """``entries[(i, j)] = b_{i,j}``; ``kind`` is ``"ideal"`` (of B) or ``"quotient"`` (of S/B)."""

    entries: Mapping[tuple[int, int], int] = field(default_factory=dict)
    kind: str = "ideal"

    def __post_init__(self):
        if self.kind not in ("ideal", "quotient"):
            raise ValueError(f"unknown Betti table kind {self.kind!r}")
        object.__setattr__(self, "entries", {k: v for k, v in sorted(self.entries.items()) if v})

    __hash__ = None  # type: ignore[assignment]

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def totals(self) -> list[int]:
        top = max((i for i, _ in self.entries), default=-1)
        out = [0] * (top + 1)
        for (i, _), v in self.entries.items():
            out[i] += v
        return out

    def quotient(self) -> BettiTable:
        """Table of ``S/B`` from the table of ``B``."""
        if self.kind == "quotient":
            return self
        shifted = {(i + 1, j): v for (i, j), v in self.entries.items()}
        shifted[(0, 0)] = 1
        return BettiTable(shifted, "quotient")

    def rows(self) -> dict[int, list[int]]:
        """Macaulay2 layout: row ``j - i``, column ``i``."""
        width = len(self.totals())
        out: dict[int, list[int]] = {}
        for (i, j), v in self.entries.items():
            out.setdefault(j - i, [0] * width)[i] = v
        return dict(sorted(out.items()))

    def pdim(self) -> int:
        return len(self.totals()) - 1

    def alternating_sum(self) -> list[int]:
        """``sum_{i,j} (-1)^i b_{i,j} t^j`` as coefficients in t."""
        top = max((j for _, j in self.entries), default=0)
        out = [0] * (top + 1)
        for (i, j), v in self.entries.items():
            out[j] += (-1) ** i * v
        return trim(out)


def _require(B) -> None:
    B.require_proper("Betti numbers")


def _table_from_w(w: WTable, squarefree: bool) -> BettiTable:
    entries: dict[tuple[int, int], int] = defaultdict(int)
    for (d, k), count in w.counts.items():
        free = k - d if squarefree else k - 1
        for i in range(free + 1):
            entries[(i, i + d)] += count * comb(free, i)
    return BettiTable(entries)


def betti_ek(B: BorelIdeal | SqfBorelIdeal) -> BettiTable:
    """Graded Betti numbers of B by counting EK symbols per (degree, max index)."""
    _require(B)
    return _table_from_w(w_table(B), B.squarefree)


def betti_w(w: WTable, squarefree: bool = False) -> BettiTable:
    """Linear resolution of an ideal generated in one degree, from its w-vector."""
    w.single_degree()
    return _table_from_w(w, squarefree)


def _add(a: BettiTable, b: BettiTable, sign: int = 1) -> BettiTable:
    out = dict(a.entries)
    for k, v in b.entries.items():
        out[k] = out.get(k, 0) + sign * v
    if any(v < 0 for v in out.values()):
        raise InternalError("inclusion-exclusion produced a negative Betti number")
    return BettiTable(out)


def betti_ie(B: BorelIdeal) -> BettiTable:
    """Inclusion–exclusion over Borel generators taken in ascending degree.

    ``b(B) = b(B') + b(Borel(m_r)) - b(Borel(m_r) ∩ B')`` where ``m_r`` has the
    largest degree, so the intersection is generated in that single degree.
    Principal pieces come from Catalan diagrams, the intersections from an
    explicit listing of their (single-degree) generators.
    """
    if B.squarefree:
        raise DomainError("betti_ie is implemented for Borel ideals only")
    _require(B)
    ordered = sorted(B.bgens, key=lambda m: m.degree)
    table = betti_w(w_principal(ordered[0]))
    for r in range(1, len(ordered)):
        m_r = ordered[r]
        prior = BorelIdeal(B.nvars, tuple(ordered[:r]))
        overlap = intersect(BorelIdeal(B.nvars, (m_r,)), prior)
        d = m_r.degree
        listed = WTable.from_monomials(gens_in_degree(overlap, d), B.nvars)
        table = _add(_add(table, betti_w(w_principal(m_r))), betti_w(listed), -1)
    return table


# --- Poincaré series --------------------------------------------------------


def poincare_ideal(B: BorelIdeal | SqfBorelIdeal) -> BiPoly:
    """``P_B(t, u) = sum_{i,j} b_{i,j}(B) t^i u^j`` over the polynomial ring."""
    _require(B)
    out = BiPoly()
    one_plus = BiPoly.one_plus_tu()
    for (d, k), count in w_table(B).counts.items():
        power = k - d if B.squarefree else k - 1
        out = out + BiPoly.monomial(0, d, count) * one_plus ** power
    return out


def poincare_residue_field(B: BorelIdeal | SqfBorelIdeal) -> RationalBiSeries:
    """Poincaré series of the residue field over S/B (S/B is Golod).

    Only for ideals generated in a single degree ``d >= 2``.
    """
    _require(B)
    w = w_table(B)
    d = w.single_degree()
    if d < 2:
        raise DomainError("the residue-field series needs generators of degree at least 2")
    n = B.nvars
    f_at = compose_one_plus_tu(w.generating_function(d))
    one_plus = BiPoly.one_plus_tu()
    correction = BiPoly.monomial(2, d) * f_at
    if B.squarefree:
        return RationalBiSeries(one_plus ** (n + d), one_plus ** d - correction)
    return RationalBiSeries(one_plus ** (n + 1), one_plus - correction)


def golod_series(B: BorelIdeal | SqfBorelIdeal) -> RationalBiSeries:
    """``(1+tu)^n / (1 - t^2 P_B(t,u))`` straight from the ideal's Poincaré polynomial."""
    P = poincare_ideal(B)
    return RationalBiSeries(BiPoly.one_plus_tu() ** B.nvars, BiPoly.const(1) - BiPoly.monomial(2, 0) * P)


def poincare_exterior(B: SqfBorelIdeal) -> RationalBiSeries:
    """``sum_m u^{deg m} / (1 - tu)^{max m}`` over minimal generators, as one fraction.

    The same series resolves B over ``S / (x_1^2, ..., x_n^2)``.
    """
    if not B.squarefree:
        raise DomainError("the exterior-algebra series needs a squarefree Borel ideal")
    _require(B)
    w = w_table(B)
    top = max(k for _, k in w.counts)
    one_minus = BiPoly.one_plus_tu(-1)
    num = BiPoly()
    for (d, k), count in w.counts.items():
        num = num + BiPoly.monomial(0, d, count) * one_minus ** (top - k)
    return RationalBiSeries(num, one_minus ** top)


# --- principal x1...xn and pseudo-triangulations -----------------------------


def closed_form_bi(n: int, i: int) -> int:
    """``b_i(Borel(x_1 ... x_n)) = C(2n, n-i-1) C(n+i-1, i) / n``."""
    if n < 1 or i < 0:
        raise DomainError("need n >= 1 and i >= 0")
    k = n - i - 1
    if k < 0:
        return 0
    num = comb(2 * n, k) * comb(n + i - 1, i)
    q, r = divmod(num, n)
    if r:
        raise InternalError(f"closed form not integral at n={n}, i={i}")
    return q


def _staircase(n: int) -> BorelIdeal:
    return BorelIdeal(n, (Monomial.from_factorization(range(1, n + 1), n),))


def ppt_recursion(ell: int) -> dict[tuple[int, int], int]:
    """``a(l, i) = C(l+1, i) C_l - a(l-1, i-2)`` with ``a(l,0) = C_l``, ``a(l,1) = (l+1) C_l``."""
    if ell < 1:
        raise DomainError("ell must be at least 1")
    a: dict[tuple[int, int], int] = {}
    for l in range(1, ell + 1):
        cat = catalan_number(l)
        for i in range(l + 1):
            if i == 0:
                a[(l, i)] = cat
            elif i == 1:
                a[(l, i)] = (l + 1) * cat
            else:
                a[(l, i)] = comb(l + 1, i) * cat - a.get((l - 1, i - 2), 0)
    return a


def ppt_numbers(ell: int) -> dict[tuple[int, int], int]:
    """``a(l, i)`` for ``1 <= l <= ell``, ``0 <= i <= l``, cross-checked three ways."""
    rec = ppt_recursion(ell)
    for l in range(1, ell + 1):
        totals = betti_ek(_staircase(l + 1)).totals()
        for i in range(l + 1):
            via_betti = totals[l - i] if l - i < len(totals) else 0
            via_formula = closed_form_bi(l + 1, l - i)
            if not rec[(l, i)] == via_betti == via_formula:
                raise InternalError(
                    f"a({l},{i}): recursion {rec[(l, i)]}, Betti {via_betti}, closed form {via_formula}"
                )
    return rec
