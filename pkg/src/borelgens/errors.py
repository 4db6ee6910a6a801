"""Exception hierarchy shared by the library and the CLI."""


class BorelError(Exception):
    """Base class for every error raised by borelgens."""


class DomainError(BorelError, ValueError):
    """An input is outside the domain of an operation (unit ideal, bad index, ...)."""


class ParseError(BorelError, ValueError):
    """Syntax error in the monomial / ideal text grammar."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(message)
        self.message = message
        self.text = text
        self.pos = pos

    def __str__(self) -> str:
        return f"{self.message} at position {self.pos}\n  {self.text}\n  {' ' * self.pos}^"


class InternalError(BorelError, AssertionError):
    """Two computations that must agree did not."""
