"""
Custom exceptions for the poset-limit toolkit.
"""

from typing import Any, Optional


class PosetLimitError(Exception):
    """Base exception for the poset-limit toolkit."""

    def __init__(self, message: str, details: Optional[dict] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class PosetError(PosetLimitError):
    """Exception raised when a relation cannot be a strict partial order."""
    pass


class CycleError(PosetError):
    """Exception raised when closing a relation would create a cycle or loop."""

    def __init__(self, message: str, element: Optional[int] = None,
                 details: Optional[dict] = None):
        super().__init__(message, details)
        self.element = element


class NotClosedError(PosetError):
    """Exception raised when a relation is required closed but is not."""

    def __init__(self, message: str, missing: Optional[tuple] = None,
                 details: Optional[dict] = None):
        super().__init__(message, details)
        self.missing = missing


class EmptySubsetError(PosetError):
    """Exception raised when restricting to an empty label set."""
    pass


class SizeMismatchError(PosetError):
    """Exception raised when two posets must share a ground set but do not."""

    def __init__(self, left: int, right: int, details: Optional[dict] = None):
        super().__init__(f"Ground set sizes differ: {left} != {right}", details)
        self.left = left
        self.right = right


class SizeError(PosetError):
    """Exception raised when a requested sample size is impossible."""
    pass


class NotAPosetError(PosetError):
    """Exception raised when a sampled relation fails the order axioms."""
    pass


class ValidationError(PosetLimitError):
    """Exception raised for invalid arguments."""

    def __init__(self, message: str, field: Optional[str] = None,
                 value: Optional[Any] = None, details: Optional[dict] = None):
        super().__init__(message, details)
        self.field = field
        self.value = value


class ParameterRangeError(ValidationError):
    """Exception raised when a kernel parameter lies outside its range."""
    pass


class BudgetExceededError(PosetLimitError):
    """Exception raised when an exact enumeration would exceed its budget."""

    def __init__(self, message: str, bound: Optional[float] = None,
                 limit: Optional[float] = None, details: Optional[dict] = None):
        super().__init__(message, details)
        self.bound = bound
        self.limit = limit


class DocumentError(PosetLimitError):
    """Exception raised for malformed input documents."""

    def __init__(self, message: str, path: Optional[str] = None,
                 details: Optional[dict] = None):
        super().__init__(message, details)
        self.path = path


class ConfigurationError(PosetLimitError):
    """Exception raised for bad kernel specifications or settings."""
    pass
