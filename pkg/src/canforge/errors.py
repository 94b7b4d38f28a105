"""Exception hierarchy.

Refusals are expected outcomes for valid but unsupported input (hyperelliptic
curves, degenerate polynomials, ...). ``InvariantViolation`` signals a bug.
"""


class CanforgeError(Exception):
    """Base class for all package errors."""


class ParseError(CanforgeError, ValueError):
    def __init__(self, message, line=1, column=1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class RefusalError(CanforgeError):
    """Input is well-formed but outside what the construction handles."""

    reason = "refused"

    def __init__(self, message, **details):
        self.details = details
        super().__init__(message)


class HyperellipticError(RefusalError):
    reason = "hyperelliptic"


class LowGenusError(RefusalError):
    reason = "genus_too_small"


class DegenerateError(RefusalError):
    reason = "degenerate"


class InconclusiveError(RefusalError):
    reason = "nondegeneracy_inconclusive"


class InvariantViolation(CanforgeError, AssertionError):
    """An internal consistency check failed."""
