"""Exception hierarchy."""


class MaxSubError(Exception):
    """Base class for all errors raised by this package."""


class GraphParseError(MaxSubError):
    """Malformed graph text. ``lineno`` is 1-based (0 when not line-specific)."""

    def __init__(self, message, lineno=0):
        self.lineno = lineno
        if lineno:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class ContractError(MaxSubError, ValueError):
    """A precondition of an operation does not hold."""


class OracleLimitError(MaxSubError):
    """The brute-force oracle refused a graph that is too large."""
