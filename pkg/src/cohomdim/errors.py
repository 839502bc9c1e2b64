"""Exception hierarchy.

The CLI maps these onto exit codes: hypothesis violations exit 1, parse
errors exit 2, invariant breaches exit 3.
"""

from __future__ import annotations


class CohomDimError(Exception):
    """Base class for all errors raised by this package."""


class UsageError(CohomDimError, ValueError):
    """Operands from different contexts, or a request outside what was built."""


class DomainError(CohomDimError, ValueError):
    """An operation is undefined for the given value (e.g. leading term of 0)."""


class HypothesisError(CohomDimError, ValueError):
    """Input violates a hypothesis of the cohomological-dimension criterion."""

    def __init__(self, message: str, kind: str = "hypothesis"):
        super().__init__(message)
        self.kind = kind


class InhomogeneousError(HypothesisError):
    def __init__(self, message: str):
        super().__init__(message, kind="inhomogeneous")


class ParameterError(HypothesisError):
    def __init__(self, message: str):
        super().__init__(message, kind="parameter")


class InvariantBreach(CohomDimError, RuntimeError):
    """Two independent computations disagreed. Always a bug."""


class ParseError(CohomDimError, ValueError):
    """Syntax or semantic error in a problem or complex file, with position."""

    def __init__(self, message: str, line: int = 0, column: int = 0,
                 expected: tuple[str, ...] = ()):
        self.msg = message
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        text = f"{line}:{column}: {message}"
        if expected:
            text += " (expected one of: " + ", ".join(expected) + ")"
        super().__init__(text)
