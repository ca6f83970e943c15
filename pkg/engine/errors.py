"""
Exceptions raised by the game engine.
"""


class GrundyToolError(ValueError):
    """Base class for all engine errors."""


class IndexOutOfRange(GrundyToolError):
    """Fibonacci index outside 1..93."""


class InvalidRepresentation(GrundyToolError):
    """Index list is not a valid Zeckendorf representation."""


class UndefinedForZero(GrundyToolError):
    """Operation has no value at position 0."""


class PositionOverflow(GrundyToolError):
    """Position or sequence index too large for the exact 64-bit range."""


class InvalidSubtractionSet(GrundyToolError):
    """Subtraction set generator yielded a non-increasing or non-positive value."""


class ValueOverflow(GrundyToolError):
    """A Grundy value does not fit the 2-bit packed table."""

    def __init__(self, position: int, set_name: str):
        super().__init__(f"Grundy value at position {position} exceeds 3 for set {set_name}")
        self.position = position
        self.set_name = set_name


class WindowTooSmall(GrundyToolError):
    """Period scan window does not fit inside the table."""


class PositionOutOfRange(GrundyToolError):
    """Position beyond the end of a table."""


class BoundTooSmall(GrundyToolError):
    """Enumeration bound does not reach the requested position."""


class PartitionViolation(GrundyToolError):
    """A position lies in zero or several of the enumerated sets."""
