"""
Enumerations for position classes and players.
"""

from enum import Enum


class PositionClass(Enum):
    """The three sets of the Beatty partition plus the terminal position 0."""
    TERMINAL = "T"
    CLASS_B = "B"
    CLASS_B1 = "B1"
    CLASS_AB1 = "AB1"

    @property
    def grundy(self) -> int:
        """Sprague-Grundy value shared by every position of the class."""
        return _GRUNDY[self]

    @property
    def code(self) -> int:
        """Compact code used in uint8 class arrays."""
        return _CODES[self]

    @classmethod
    def from_code(cls, code: int) -> 'PositionClass':
        return _BY_CODE[int(code)]


_GRUNDY = {
    PositionClass.TERMINAL: 0,
    PositionClass.CLASS_B: 0,
    PositionClass.CLASS_B1: 1,
    PositionClass.CLASS_AB1: 2,
}
_CODES = {
    PositionClass.TERMINAL: 0,
    PositionClass.CLASS_B: 1,
    PositionClass.CLASS_B1: 2,
    PositionClass.CLASS_AB1: 3,
}
_BY_CODE = {code: position_class for position_class, code in _CODES.items()}

# indexed by class code
GRUNDY_BY_CODE = tuple(_GRUNDY[_BY_CODE[code]] for code in range(4))


class Player(Enum):
    """Winner of a position under optimal play."""
    PREVIOUS = "previous"
    NEXT = "next"
