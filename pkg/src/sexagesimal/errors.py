"""Shared exception types for the sexagesimal toolkit."""


class SexagesimalError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SexagesimalError, ValueError):
    """Malformed textual input.

    ``position`` is the 1-based index of the offending character in the
    original input, when known.
    """

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class DomainError(SexagesimalError, ValueError):
    """An operation was called outside its mathematical domain."""
