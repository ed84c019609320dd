"""
Exceptions raised by the Koszul Check toolkit.
"""

from typing import Optional


class KoszulCheckError(Exception):
    """Base class for every error raised by this package."""


class FieldMismatchError(KoszulCheckError, ValueError):
    """Operands live over different ground fields."""


class DependentColumnsError(KoszulCheckError, ValueError):
    """A family of vectors expected to be independent is not."""


class QuiverError(KoszulCheckError, ValueError):
    """Invalid vertex or arrow data."""


class RelationError(KoszulCheckError, ValueError):
    """A relation is not a homogeneous degree-2 element of kQ."""


class DegreeOverflowError(KoszulCheckError):
    """A product or component lies beyond the truncation bound."""


class WindowExhaustedError(KoszulCheckError):
    """The truncation window cannot support the requested computation."""

    def __init__(self, message: str, reached: Optional[int] = None):
        super().__init__(message)
        self.reached = reached


class FunctorDomainError(KoszulCheckError):
    """F was applied to a map whose ends are not generated in one common degree."""


class SearchExceededError(KoszulCheckError):
    """A combinatorial search would exceed its configured bound."""


class InputParseError(KoszulCheckError):
    """An input document could not be parsed."""

    def __init__(self, message: str, location: Optional[str] = None):
        if location:
            message = f"{location}: {message}"
        super().__init__(message)
        self.location = location
