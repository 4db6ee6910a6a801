"""Integer polynomials in one variable ``t`` and two variables ``(t, u)``.

Univariate polynomials are plain lists of coefficients, lowest degree first.
Bivariate ones are :class:`BiPoly` (a sparse map ``(i, j) -> c`` for
``c t^i u^j``).  Rational series are numerator/denominator pairs that are never
reduced; equality is decided by cross-multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Mapping, Sequence

from .errors import DomainError


def trim(p: Sequence[int]) -> list[int]:
    out = list(p)
    while out and out[-1] == 0:
        out.pop()
    return out


def padd(p: Sequence[int], q: Sequence[int]) -> list[int]:
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def pmul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def one_minus_t_pow(k: int) -> list[int]:
    """Coefficients of ``(1 - t)^k``."""
    return [(-1) ** i * comb(k, i) for i in range(k + 1)]


def shift(p: Sequence[int], k: int) -> list[int]:
    return trim([0] * k + list(p)) if p else []


def format_poly(p: Sequence[int], var: str = "t") -> str:
    """``1+t+t^2-41t^5`` style."""
    parts = []
    for k, c in enumerate(p):
        if not c:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if abs(c) == 1 else f"{abs(c)}{power}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    head_sign, head = parts[0]
    text = ("-" if head_sign == "-" else "") + head
    return text + "".join(f"{s}{b}" for s, b in parts[1:])


@dataclass(frozen=True)
class BiPoly:
    """Finitely supported ``sum c t^i u^j`` with integer coefficients."""

    coeffs: Mapping[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", {k: v for k, v in sorted(self.coeffs.items()) if v})

    __hash__ = None  # type: ignore[assignment]

    @classmethod
    def const(cls, c: int) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> BiPoly:
        return cls({(i, j): c})

    @classmethod
    def one_plus_tu(cls, sign: int = 1) -> BiPoly:
        return cls({(0, 0): 1, (1, 1): sign})

    def __add__(self, other: BiPoly) -> BiPoly:
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    def __neg__(self) -> BiPoly:
        return BiPoly({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: BiPoly) -> BiPoly:
        return self + (-other)

    def __mul__(self, other) -> BiPoly:
        if isinstance(other, int):
            return BiPoly({k: v * other for k, v in self.coeffs.items()})
        out: dict[tuple[int, int], int] = {}
        for (a, b), c in self.coeffs.items():
            for (x, y), e in other.coeffs.items():
                out[(a + x, b + y)] = out.get((a + x, b + y), 0) + c * e
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> BiPoly:
        out = BiPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.coeffs.get(key, 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def at_u1(self) -> list[int]:
        out: dict[int, int] = {}
        for (i, _), c in self.coeffs.items():
            out[i] = out.get(i, 0) + c
        return trim([out.get(i, 0) for i in range(max(out, default=-1) + 1)])

    def t_coefficient(self, i: int) -> dict[int, int]:
        """Coefficient of ``t^i`` as a map ``u-exponent -> c``."""
        return {j: c for (a, j), c in self.coeffs.items() if a == i}

    def t_degree(self) -> int:
        return max((i for i, _ in self.coeffs), default=-1)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (i, j), c in self.coeffs.items():
            mono = "".join(
                v if e == 1 else f"{v}^{e}" for v, e in (("t", i), ("u", j)) if e
            )
            mag = abs(c)
            body = mono if mono and mag == 1 else f"{mag}{mono}"
            parts.append(("-" if c < 0 else "+", body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return text + "".join(f"{s}{b}" for s, b in parts[1:])

    def to_json(self) -> list[list[int]]:
        return [[i, j, c] for (i, j), c in self.coeffs.items()]


def compose_one_plus_tu(f: Sequence[int], sign: int = 1) -> BiPoly:
    """``f(1 + sign*tu)`` for a univariate ``f`` given by its coefficients."""
    base = BiPoly.one_plus_tu(sign)
    out = BiPoly()
    power = BiPoly.const(1)
    for c in f:
        if c:
            out = out + power * c
        power = power * base
    return out


@dataclass(frozen=True)
class RationalBiSeries:
    """``numerator / denominator`` as a power series in ``t`` over ``Z[u]``."""

    numerator: BiPoly
    denominator: BiPoly

    def __post_init__(self):
        const = self.denominator.t_coefficient(0)
        if const not in ({0: 1}, {0: -1}):
            raise DomainError("denominator must have constant term +-1 in t")

    __hash__ = None  # type: ignore[assignment]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalBiSeries):
            return NotImplemented
        lhs = self.numerator * other.denominator
        rhs = other.numerator * self.denominator
        return (lhs - rhs).is_zero()

    def expand(self, t_degree: int = 12) -> BiPoly:
        """All coefficients ``t^i u^j`` with ``i <= t_degree`` (exact: each is a polynomial in u)."""
        unit = self.denominator.t_coefficient(0)[0]
        den = [self.denominator.t_coefficient(i) for i in range(self.denominator.t_degree() + 1)]
        num = [self.numerator.t_coefficient(i) for i in range(t_degree + 1)]
        out: list[dict[int, int]] = []
        for i in range(t_degree + 1):
            acc = dict(num[i])
            for k in range(1, min(i, len(den) - 1) + 1):
                for a, x in den[k].items():
                    for b, y in out[i - k].items():
                        acc[a + b] = acc.get(a + b, 0) - x * y
            out.append({j: c * unit for j, c in acc.items() if c})
        return BiPoly({(i, j): c for i, row in enumerate(out) for j, c in row.items()})

    def expand_at_u1(self, t_degree: int = 12) -> list[int]:
        series = self.expand(t_degree).at_u1()
        return series + [0] * (t_degree + 1 - len(series))

    def to_json(self) -> dict:
        return {"numerator": self.numerator.to_json(), "denominator": self.denominator.to_json()}
