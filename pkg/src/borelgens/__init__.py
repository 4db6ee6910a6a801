"""Exact invariants of Borel and squarefree Borel ideals from their Borel generators."""

from .errors import BorelError, DomainError, InternalError, ParseError
from .grammar import format_ideal, format_monomial, parse_expr, parse_ideal, parse_monomial
from .ideal import BorelIdeal, SqfBorelIdeal, WTable
from .monomial import Monomial

__version__ = "0.1.0"

__all__ = [
    "BorelError",
    "BorelIdeal",
    "DomainError",
    "InternalError",
    "Monomial",
    "ParseError",
    "SqfBorelIdeal",
    "WTable",
    "format_ideal",
    "format_monomial",
    "parse_expr",
    "parse_ideal",
    "parse_monomial",
]
