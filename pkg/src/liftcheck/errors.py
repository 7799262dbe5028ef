"""Exception hierarchy shared across the package.

Exit-code mapping used by the CLI: user-input problems (parse errors, domain
mismatches, violated preconditions) exit 2, internal invariant violations
exit 3.
"""

from __future__ import annotations


class LiftcheckError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LiftcheckError):
    """Scalar domain misuse: mixed moduli, non-prime modulus, inexact division."""


class RingMismatch(LiftcheckError):
    """Two operands belong to different ring contexts."""


class ParseError(LiftcheckError):
    """Malformed expression or script; carries 1-based line and column."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(message)
        self.line = line
        self.column = column

    def __str__(self) -> str:
        base = super().__str__()
        if self.line:
            return f"line {self.line}, col {self.column}: {base}"
        return base


class NonHomogeneous(LiftcheckError):
    """Graded operation received non-homogeneous input."""


class PreconditionError(LiftcheckError):
    """A documented precondition of an operation does not hold."""


class NotApplicable(LiftcheckError):
    """Degree or shape preconditions of a criterion are unmet.

    Reported by the CLI as an outcome, not as a failure.
    """


class BudgetExceeded(LiftcheckError):
    """A degree cap or wall-clock deadline installed by the CLI was hit."""


class InternalError(LiftcheckError):
    """A machine-checked internal invariant failed; maps to exit code 3."""
