"""Exception hierarchy shared by the solvers and the command line front end."""

from __future__ import annotations


class SchedulingError(Exception):
    """Base class for every error raised by this package."""


class ParseError(SchedulingError, ValueError):
    """Malformed input text. Carries a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class RangeError(SchedulingError, ValueError):
    """A numeric argument or derived value is outside its permitted range."""


class PreconditionError(SchedulingError, ValueError):
    """An operation was called on an input it does not accept."""


class ResourceLimitError(SchedulingError):
    """The requested computation would exceed a configured cap."""

    def __init__(self, what: str, required: int, cap: int):
        super().__init__(f"{what} requires {required}, exceeding the cap of {cap}")
        self.what = what
        self.required = required
        self.cap = cap


class InvariantError(SchedulingError, RuntimeError):
    """Internal consistency check failed; indicates a bug, not bad input."""
