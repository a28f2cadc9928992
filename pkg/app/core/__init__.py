"""
Core Module

Configuration, named digraphs, logging and exception handling for the toolkit.
"""

from app.core.config import settings
from app.core.constants import SPECIAL_DIGRAPHS, WITNESS_KINDS
from app.core.exceptions import (
    BudgetExceededError,
    ConfigurationError,
    CycleError,
    DocumentError,
    EmptySubsetError,
    NotAPosetError,
    NotClosedError,
    ParameterRangeError,
    PosetError,
    PosetLimitError,
    SizeError,
    SizeMismatchError,
    ValidationError,
)

__all__ = [
    "settings",
    "SPECIAL_DIGRAPHS",
    "WITNESS_KINDS",
    "BudgetExceededError",
    "ConfigurationError",
    "CycleError",
    "DocumentError",
    "EmptySubsetError",
    "NotAPosetError",
    "NotClosedError",
    "ParameterRangeError",
    "PosetError",
    "PosetLimitError",
    "SizeError",
    "SizeMismatchError",
    "ValidationError",
]
