"""
Exact Fibonacci arithmetic and the Zeckendorf codec.

Convention: F_1 = F_2 = 1, F_3 = 2. Zeckendorf indices are all >= 2, which
makes every representation unique.
"""

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple, Union

from engine.errors import IndexOutOfRange, InvalidRepresentation, PositionOverflow, UndefinedForZero

MAX_FIB_INDEX = 93
POSITION_LIMIT = 1 << 63


def _build_table() -> Tuple[int, ...]:
    values = [0, 1]
    while len(values) <= MAX_FIB_INDEX:
        values.append(values[-1] + values[-2])
    return tuple(values)


# FIBS[i] = F_i for 0 <= i <= 93
FIBS: Tuple[int, ...] = _build_table()


@dataclass(frozen=True)
class ZeckendorfRep:
    """Ascending Fibonacci indices (each >= 2, pairwise non-adjacent)."""
    indices: Tuple[int, ...] = ()

    def __post_init__(self):
        indices = tuple(self.indices)
        object.__setattr__(self, 'indices', indices)
        for position, index in enumerate(indices):
            if not isinstance(index, int) or index < 2 or index > MAX_FIB_INDEX:
                raise InvalidRepresentation(f"Index {index!r} outside 2..{MAX_FIB_INDEX}")
            if position and index - indices[position - 1] < 2:
                raise InvalidRepresentation(
                    f"Indices {indices[position - 1]} and {index} are not ascending and non-adjacent"
                )

    @property
    def z1(self) -> int:
        """Smallest index, 0 for the empty representation."""
        return self.indices[0] if self.indices else 0

    @property
    def z2(self) -> int:
        """Second smallest index, 0 if absent."""
        return self.indices[1] if len(self.indices) > 1 else 0

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)


def fib(i: int) -> int:
    """Return F_i for 1 <= i <= 93."""
    if not 1 <= i <= MAX_FIB_INDEX:
        raise IndexOutOfRange(f"Fibonacci index {i} outside 1..{MAX_FIB_INDEX}")
    return FIBS[i]


def fib_floor_index(x: int) -> int:
    """Largest i with F_i <= x; returns 2 (not 1) for x = 1."""
    if x < 1:
        raise ValueError(f"fib_floor_index needs x >= 1, got {x}")
    if x >= FIBS[MAX_FIB_INDEX] + FIBS[MAX_FIB_INDEX - 1]:
        raise PositionOverflow(f"{x} needs a Fibonacci index above {MAX_FIB_INDEX}")
    return bisect_right(FIBS, x) - 1


def _check_position(x: int) -> None:
    if x < 0:
        raise ValueError(f"Position must be nonnegative, got {x}")
    if x >= POSITION_LIMIT:
        raise PositionOverflow(f"Position {x} is not below 2^63")


def zeckendorf_encode(x: int) -> ZeckendorfRep:
    """Greedy Zeckendorf decomposition of 0 <= x < 2^63."""
    _check_position(x)
    indices = []
    remainder = x
    while remainder:
        index = fib_floor_index(remainder)
        indices.append(index)
        remainder -= FIBS[index]
    return ZeckendorfRep(tuple(reversed(indices)))


def zeckendorf_decode(rep: Union[ZeckendorfRep, Sequence[int]]) -> int:
    """Sum of F_i over the indices; validates the representation."""
    if not isinstance(rep, ZeckendorfRep):
        rep = ZeckendorfRep(tuple(rep))
    return sum(FIBS[i] for i in rep.indices)


def smallest_index(x: int) -> int:
    """z_1 of x, the index of the smallest Fibonacci term."""
    if x == 0:
        raise UndefinedForZero("Position 0 has an empty Zeckendorf representation")
    return zeckendorf_encode(x).z1
