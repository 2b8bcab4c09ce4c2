"""
Exception hierarchy shared by the library, the CLI and the HTTP service.

Every exception keeps its structured context as attributes so callers
(exit-code mapping, HTTP status mapping) never parse messages.
"""

from typing import Any, Optional


class MahlersolError(Exception):
    """Base class for every error raised on purpose by this package."""


class OperatorError(MahlersolError):
    """Raised when a Mahler operator is not admissible."""

    def __init__(self, message: str, reason: str):
        self.reason = reason
        super().__init__(message)


class ExpressionSyntaxError(MahlersolError):
    """Raised by the operator expression parser."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class DomainError(MahlersolError):
    """Raised when an exponent violates the precondition of an operation."""

    def __init__(self, message: str, value: Any = None):
        self.value = value
        super().__init__(message)


class BudgetExceededError(MahlersolError):
    """Raised when a receptacle level would exceed the memory budget."""

    def __init__(self, message: str, requested: int, budget: int):
        self.requested = requested
        self.budget = budget
        super().__init__(message)


class ExtensionError(MahlersolError):
    """Raised when greedy coefficient extension cannot proceed."""

    def __init__(self, message: str, exponent: Optional[Any] = None):
        self.exponent = exponent
        super().__init__(message)


class FieldError(MahlersolError):
    """Raised on invalid coefficient-field operations."""
