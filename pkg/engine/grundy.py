"""
Brute-force Sprague-Grundy engine for subtraction games.

The sieve is the independent oracle against which the closed form in
engine.theorem is checked.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

import numpy as np

from engine import kernels
from engine.errors import (
    InvalidSubtractionSet,
    PositionOutOfRange,
    ValueOverflow,
    WindowTooSmall,
)
from engine.fibzeck import MAX_FIB_INDEX, fib
from models.position_class import PositionClass
from models.reports import PeriodReport

logger = logging.getLogger(__name__)

SIEVE_LIMIT = 1 << 32
ODD_FIB_SET_NAME = "F(2n+1)-1"


@dataclass(frozen=True)
class SubtractionSet:
    """A named, monotone (possibly unbounded) generator of subtrahends."""
    name: str
    generator: Callable[[], Iterator[int]] = field(compare=False)


def _odd_fibonacci_minus_one() -> Iterator[int]:
    index = 3
    while index <= MAX_FIB_INDEX:
        yield fib(index) - 1
        index += 2


def odd_fibonacci_set() -> SubtractionSet:
    """S = {F_(2n+1) - 1 : n >= 1} = {1, 4, 12, 33, 88, ...}."""
    return SubtractionSet(ODD_FIB_SET_NAME, _odd_fibonacci_minus_one)


def finite_set(values: Iterable[int], name: Optional[str] = None) -> SubtractionSet:
    """Subtraction set with finitely many elements, given ascending."""
    values = tuple(values)
    label = name if name is not None else "{" + ",".join(str(v) for v in values) + "}"
    return SubtractionSet(label, lambda: iter(values))


def subtrahends_upto(subtraction_set: SubtractionSet, limit: int) -> List[int]:
    """All elements of the set that are <= limit, ascending."""
    result: List[int] = []
    previous = 0
    for s in subtraction_set.generator():
        if s <= previous:
            raise InvalidSubtractionSet(
                f"Set {subtraction_set.name} yielded {s} after {previous}; elements must be positive and increasing"
            )
        if s > limit:
            break
        result.append(s)
        previous = s
    return result


def mex(values: Iterable[int]) -> int:
    """Least nonnegative integer not in values."""
    present = set(values)
    candidate = 0
    while candidate in present:
        candidate += 1
    return candidate


class GrundyTable:
    """
    Grundy values of positions 0..max_position, packed two bits per position.

    Read-only once built.
    """

    def __init__(self, packed: np.ndarray, max_position: int, set_name: str, subtrahends: Tuple[int, ...]):
        packed.setflags(write=False)
        self.packed = packed
        self.max_position = max_position
        self.set_name = set_name
        self.subtrahends = subtrahends
        self._values: Optional[np.ndarray] = None

    @classmethod
    def from_values(cls, values: Iterable[int], set_name: str = "", subtrahends: Tuple[int, ...] = ()) -> 'GrundyTable':
        """Pack an explicit value sequence (each 0..3)."""
        values = np.asarray(list(values), dtype=np.uint8)
        if values.size == 0:
            raise ValueError("A table holds at least position 0")
        if values.max() > 3:
            raise ValueOverflow(int(np.argmax(values > 3)), set_name)
        padded = np.zeros(((values.size + 3) // 4) * 4, dtype=np.uint8)
        padded[:values.size] = values
        quads = padded.reshape(-1, 4)
        packed = (quads[:, 0] | (quads[:, 1] << 2) | (quads[:, 2] << 4) | (quads[:, 3] << 6)).astype(np.uint8)
        return cls(packed, values.size - 1, set_name, tuple(subtrahends))

    def __len__(self) -> int:
        return self.max_position + 1

    def __getitem__(self, x: int) -> int:
        if not 0 <= x <= self.max_position:
            raise PositionOutOfRange(f"Position {x} outside table 0..{self.max_position}")
        return int((self.packed[x >> 2] >> ((x & 3) << 1)) & 3)

    def values(self) -> np.ndarray:
        """Unpacked uint8 view of all values (cached, read-only)."""
        if self._values is None:
            values = kernels.unpack_values(self.packed, self.max_position)
            values.setflags(write=False)
            self._values = values
        return self._values

    def class_counts(self) -> Dict[PositionClass, int]:
        """Positions per class, reading each value as its class; position 0 is terminal."""
        tally = np.bincount(self.values()[1:], minlength=4)
        return {
            PositionClass.TERMINAL: 1,
            PositionClass.CLASS_B: int(tally[0]),
            PositionClass.CLASS_B1: int(tally[1]),
            PositionClass.CLASS_AB1: int(tally[2]),
        }

    @property
    def nbytes(self) -> int:
        return int(self.packed.nbytes)


def grundy_sieve(subtraction_set: SubtractionSet, max_position: int) -> GrundyTable:
    """Grundy values of the subtraction game for positions 0..max_position."""
    if not 0 <= max_position < SIEVE_LIMIT:
        raise PositionOutOfRange(f"Sieve size {max_position} outside 0..2^32-1")

    subtrahends = subtrahends_upto(subtraction_set, max_position)
    packed = np.zeros((max_position + 4) // 4, dtype=np.uint8)

    start = time.perf_counter()
    overflow_at = kernels.sieve_packed(np.asarray(subtrahends, dtype=np.int64), max_position, packed)
    elapsed = time.perf_counter() - start

    if overflow_at >= 0:
        logger.error(f"Sieve for {subtraction_set.name} overflowed 2 bits at position {overflow_at}")
        raise ValueOverflow(int(overflow_at), subtraction_set.name)

    logger.debug(f"Sieved {subtraction_set.name} up to {max_position} in {elapsed:.3f}s")
    return GrundyTable(packed, max_position, subtraction_set.name, tuple(subtrahends))


# mex of a 4-bit presence mask
_MEX_OF_MASK = np.array([mex(v for v in range(4) if mask >> v & 1) for mask in range(16)], dtype=np.uint8)


def verify_recursion(table: GrundyTable) -> Optional[int]:
    """
    Recompute mex over options for every position with array operations.

    Returns the first position that disagrees with the table, or None.
    """
    values = table.values()
    mask = np.zeros(len(table), dtype=np.uint8)
    for s in table.subtrahends:
        mask[s:] |= np.left_shift(1, values[:len(table) - s]).astype(np.uint8)
    mismatches = np.flatnonzero(_MEX_OF_MASK[mask] != values)
    return int(mismatches[0]) if mismatches.size else None


def period_scan(table: GrundyTable, max_period: int, max_preperiod: int) -> PeriodReport:
    """Smallest (period, preperiod) with g(x) = g(x + p) on [t, N - p], if any."""
    if max_period < 1 or max_preperiod < 0:
        raise WindowTooSmall(f"Need max_period >= 1 and max_preperiod >= 0, got {max_period}, {max_preperiod}")
    if max_preperiod + 2 * max_period > table.max_position:
        raise WindowTooSmall(
            f"Window {max_preperiod} + 2*{max_period} exceeds table size {table.max_position}"
        )
    start = time.perf_counter()
    preperiod, period = kernels.first_period(table.values(), max_period, max_preperiod)
    found = None if period < 0 else (int(preperiod), int(period))
    return PeriodReport(
        searched_max_period=max_period,
        searched_max_preperiod=max_preperiod,
        found=found,
        class_counts=table.class_counts(),
        elapsed_ms=(time.perf_counter() - start) * 1000.0,
    )


def nim_value_group(table: GrundyTable) -> FrozenSet[int]:
    """XOR closure of the attained values, 0 included."""
    group = {0}
    frontier = {int(v) for v in np.unique(table.values())}
    while frontier:
        group |= frontier
        frontier = {a ^ b for a in group for b in group} - group
    return frozenset(group)


def optimal_moves(table: GrundyTable, x: int) -> List[int]:
    """Subtrahends leading from x to a position of value 0."""
    if not 0 <= x <= table.max_position:
        raise PositionOutOfRange(f"Position {x} outside table 0..{table.max_position}")
    return [s for s in table.subtrahends if s <= x and table[x - s] == 0]
