"""Exception hierarchy shared by every module of the package."""


class FrobcohError(Exception):
    """Base class for all package errors."""


class UsageError(FrobcohError, ValueError):
    """An API was called with mismatched or malformed arguments."""


class InputError(FrobcohError, ValueError):
    """User-supplied mathematical input is outside the supported setting."""


class ParseError(InputError):
    """Polynomial or problem text could not be parsed."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class DispatchError(InputError):
    """A forced algorithm cannot run because one of its hypotheses fails."""


class InvariantViolation(FrobcohError, RuntimeError):
    """An internal mathematical invariant failed; signals a bug or bad input."""
