"""Catalan diagrams and w-vectors of principal (squarefree) Borel ideals."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate

from .errors import DomainError
from .ideal import WTable
from .monomial import Monomial, tau


@dataclass(frozen=True)
class CatalanDiagram:
    shape: Monomial
    rows: tuple[tuple[int, ...], ...]

    @property
    def bottom_row(self) -> tuple[int, ...]:
        return self.rows[-1]

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.rows]

    def entry(self, j: int, k: int) -> int:
        """1-based row ``j``, column ``k``."""
        return self.rows[j - 1][k - 1]

    def diagonal(self) -> list[int]:
        return [r[j] for j, r in enumerate(self.rows) if j < len(r)]


def catalan_diagram(m: Monomial) -> CatalanDiagram:
    """Staircase whose row j has ``i_j`` boxes; box k holds the sum of the first k boxes above."""
    widths = m.factorization
    if not widths:
        raise DomainError("the Catalan diagram of 1 is undefined")
    rows = [(1,) * widths[0]]
    for width in widths[1:]:
        prefix = list(accumulate(rows[-1]))
        rows.append(tuple(prefix[min(k, len(prefix)) - 1] for k in range(1, width + 1)))
    return CatalanDiagram(m, tuple(rows))


def w_principal(m: Monomial) -> WTable:
    """w-vector of Borel(m) in degree deg(m): the bottom row of C(m)."""
    bottom = catalan_diagram(m).bottom_row
    return WTable(m.n, {(m.degree, j): c for j, c in enumerate(bottom, start=1)})


def w_sq_principal(m: Monomial) -> WTable:
    """w-vector of sfBorel(m) through the shift ``w_i(sfBorel(m)) = w_{i-d+1}(Borel(tau m))``."""
    if not m.is_squarefree:
        raise DomainError(f"{m} is not squarefree")
    d = m.degree
    bottom = catalan_diagram(tau(m)).bottom_row
    return WTable(m.n, {(d, j + d - 1): c for j, c in enumerate(bottom, start=1)})


def catalan_number(k: int) -> int:
    from math import comb

    return comb(2 * k, k) // (k + 1)
