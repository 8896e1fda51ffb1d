"""
Custom exception classes for the power graph products toolkit.
"""

from typing import Optional, Tuple


class PowerGraphError(Exception):
    """Base exception for all power graph product errors."""

    def __init__(self, message: str, details: Optional[str] = None):
        self.message = message
        self.details = details
        super().__init__(self.message)


class GroupError(PowerGraphError):
    """Raised when a finite group cannot be built."""
    pass


class InvalidOrderError(GroupError):
    """Raised when a group family is asked for an unsupported size."""
    pass


class OrderOverflowError(GroupError):
    """Raised when a group would exceed the configured order cap."""
    pass


class GroupValidationError(GroupError):
    """Raised when a Cayley table violates a group axiom.

    ``cell`` names the first violating position: ``(row, col)`` for table
    entries, ``(i, j, k)`` for associativity triples.
    """

    def __init__(self, message: str, cell: Optional[Tuple[int, ...]] = None, details: Optional[str] = None):
        self.cell = cell
        super().__init__(message, details)


class NotClosedError(GroupValidationError):
    """Raised when a table entry is not an element index."""
    pass


class NoIdentityError(GroupValidationError):
    """Raised when no element acts as a two-sided identity."""
    pass


class NotLatinSquareError(GroupValidationError):
    """Raised when a row or column repeats an element."""
    pass


class NoInverseError(GroupValidationError):
    """Raised when an element has no two-sided inverse."""
    pass


class NotAssociativeError(GroupValidationError):
    """Raised when (ij)k != i(jk) for some triple."""
    pass


class CayleyFileError(GroupError):
    """Raised when a Cayley table file cannot be read or parsed."""
    pass


class GroupSpecParseError(PowerGraphError):
    """Raised when a group expression does not parse."""

    def __init__(self, message: str, position: int, details: Optional[str] = None):
        self.position = position
        super().__init__(f"{message} at position {position}", details)


class GraphError(PowerGraphError):
    """Base class for graph construction and comparison errors."""
    pass


class SizeCapError(GraphError):
    """Raised when a graph product would exceed the vertex cap."""
    pass


class TooLargeError(GraphError):
    """Raised when a graph is too large for isomorphism testing."""
    pass


class GraphParseError(GraphError):
    """Raised when a serialized graph cannot be parsed."""
    pass
