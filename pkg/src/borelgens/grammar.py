"""Text grammar for monomials and ideals.

::

    monomial := "1" | term ("*" term)*
    term     := var ("^" uint)?
    var      := "x" uint | letter a..z        (letter k aliases x_k)
    ideal    := ("borel" | "sfborel") "{" [monomial ("," monomial)*] "}" ["@" uint]

Whitespace between tokens is ignored.  Without ``@n`` the number of variables
defaults to the largest index mentioned (at least 1).
"""

from __future__ import annotations

import string

from .errors import DomainError, ParseError
from .monomial import Monomial

LETTERS = string.ascii_lowercase


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None) -> ParseError:
        return ParseError(message, self.text, self.pos if pos is None else pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise self.error(f"expected {ch!r}, found {found}")
        self.pos += 1

    def uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an unsigned integer")
        return int(self.text[start:self.pos])

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def var(self) -> int:
        self.skip_ws()
        start = self.pos
        ch = self.text[self.pos] if self.pos < len(self.text) else ""
        if ch == "x" and self.pos + 1 < len(self.text) and self.text[self.pos + 1].isdigit():
            self.pos += 1
            idx = self.uint()
            if idx < 1:
                raise DomainError(f"variable index must be at least 1 (position {start})")
            return idx
        if ch and ch in LETTERS:
            self.pos += 1
            return LETTERS.index(ch) + 1
        raise self.error("expected a variable (x<k> or a letter a..z)")

    def monomial(self) -> dict[int, int]:
        """Exponents keyed by variable index; loose until the ambient size is known."""
        self.skip_ws()
        if self.peek() == "1":
            self.pos += 1
            return {}
        exps: dict[int, int] = {}
        while True:
            i = self.var()
            power = 1
            if self.peek() == "^":
                self.pos += 1
                power = self.uint()
            exps[i] = exps.get(i, 0) + power
            if self.peek() != "*":
                return exps
            self.pos += 1


def _to_monomial(exps: dict[int, int], n: int) -> Monomial:
    top = max(exps, default=0)
    if top > n:
        raise DomainError(f"variable x{top} exceeds the ambient ring of {n} variables")
    vec = [0] * n
    for i, e in exps.items():
        vec[i - 1] = e
    return Monomial(tuple(vec))


def parse_monomial(text: str, nvars: int | None = None) -> Monomial:
    p = _Parser(text)
    exps = p.monomial()
    if not p.at_end():
        raise p.error("unexpected trailing input")
    n = nvars if nvars is not None else max(max(exps, default=0), 1)
    return _to_monomial(exps, n)


def parse_ideal(text: str, nvars: int | None = None):
    from .ideal import BorelIdeal, SqfBorelIdeal

    p = _Parser(text)
    p.skip_ws()
    kind = None
    for word in ("sfborel", "borel"):
        if p.text.startswith(word, p.pos):
            kind = word
            p.pos += len(word)
            break
    if kind is None:
        raise p.error("expected 'borel{' or 'sfborel{'")
    p.expect("{")
    raw: list[dict[int, int]] = []
    if p.peek() != "}":
        raw.append(p.monomial())
        while p.peek() == ",":
            p.pos += 1
            raw.append(p.monomial())
    p.expect("}")
    suffix = None
    if p.peek() == "@":
        p.pos += 1
        at = p.pos
        suffix = p.uint()
        if suffix < 1:
            raise p.error("the ring needs at least one variable", at)
    if not p.at_end():
        raise p.error("unexpected trailing input")
    n = suffix if suffix is not None else nvars
    if n is None:
        n = max((max(e, default=0) for e in raw), default=0) or 1
    gens = [_to_monomial(e, n) for e in raw]
    cls = SqfBorelIdeal if kind == "sfborel" else BorelIdeal
    return cls.from_generators(gens, n)


def parse_expr(text: str, nvars: int | None = None):
    """Parse either an ideal or a bare monomial."""
    stripped = text.lstrip()
    if stripped.startswith("borel") or stripped.startswith("sfborel"):
        return parse_ideal(text, nvars)
    return parse_monomial(text, nvars)


def var_name(i: int, n: int) -> str:
    return LETTERS[i - 1] if n <= len(LETTERS) else f"x{i}"


def format_monomial(m: Monomial) -> str:
    if m.is_one:
        return "1"
    parts = []
    for i, e in enumerate(m.exponents, start=1):
        if e:
            name = var_name(i, m.n)
            parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def format_ideal(ideal) -> str:
    kind = "sfborel" if ideal.squarefree else "borel"
    body = ",".join(format_monomial(m) for m in ideal.bgens)
    return f"{kind}{{{body}}}@{ideal.nvars}"
