"""
Float-free lower/upper Wythoff sequences, the composed sequence AB and the
Fibonacci word.

A(n) = floor(n*phi) is computed as (n + isqrt(5 n^2)) // 2, so no floating
point value of phi exists anywhere in this module.
"""

from dataclasses import dataclass
from math import isqrt

import numpy as np

from engine.errors import PositionOverflow
from engine.fibzeck import smallest_index

INDEX_LIMIT = 1 << 62
WORD_LIMIT = 10 ** 8
# 5 n^2 stays below 2^53 here, so a float sqrt is off by at most one
ARRAY_LIMIT = 40_000_000

MORPHISM = {ord('a'): b'ab', ord('b'): b'a'}


def _check_index(n: int) -> None:
    if n < 1:
        raise ValueError(f"Sequence index must be >= 1, got {n}")
    if n >= INDEX_LIMIT:
        raise PositionOverflow(f"Sequence index {n} is not below 2^62")


def lower_wythoff(n: int) -> int:
    """A(n) = floor(n * phi)."""
    _check_index(n)
    return (n + isqrt(5 * n * n)) // 2


def upper_wythoff(n: int) -> int:
    """B(n) = floor(n * phi^2) = n + A(n)."""
    return n + lower_wythoff(n)


def ab(n: int) -> int:
    """2 A(n) + n; AB + 1 is the third class of the partition."""
    return 2 * lower_wythoff(n) + n


def in_A(x: int) -> bool:
    """x is a lower Wythoff number iff its smallest Zeckendorf index is even."""
    return smallest_index(x) % 2 == 0


def in_B(x: int) -> bool:
    return smallest_index(x) % 2 == 1


def lower_wythoff_array(count: int) -> np.ndarray:
    """A(1..count) as an int64 array, exact."""
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    if count > ARRAY_LIMIT:
        raise PositionOverflow(f"Vectorised generation is exact only up to n = {ARRAY_LIMIT}")
    n = np.arange(1, count + 1, dtype=np.int64)
    square = 5 * n * n
    root = np.sqrt(square.astype(np.float64)).astype(np.int64)
    root -= (root * root > square).astype(np.int64)
    root += ((root + 1) * (root + 1) <= square).astype(np.int64)
    return (n + root) // 2


@dataclass(frozen=True)
class FibWord:
    """Finite prefix of the fixed point of a -> ab, b -> a."""
    symbols: bytes = b''

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return self.symbols.decode('ascii')

    def symbol_at(self, k: int) -> str:
        """Symbol at 1-based position k."""
        if not 1 <= k <= len(self.symbols):
            raise IndexError(f"Position {k} outside 1..{len(self.symbols)}")
        return chr(self.symbols[k - 1])

    def a_mask(self) -> np.ndarray:
        """Boolean array, entry k-1 true iff position k holds 'a'."""
        return np.frombuffer(self.symbols, dtype=np.uint8) == ord('a')


def iterate_morphism(word: bytes, k: int) -> bytes:
    """Apply a -> ab, b -> a to word k times."""
    for _ in range(k):
        word = b''.join(MORPHISM[symbol] for symbol in word)
    return word


def fibonacci_word(length: int) -> FibWord:
    """
    Prefix of the Fibonacci word of the given length.

    Uses the concatenation identity w_{k+1} = w_k w_{k-1} between morphism
    iterates instead of rewriting symbol by symbol.
    """
    if length < 0:
        raise ValueError(f"length must be nonnegative, got {length}")
    if length > WORD_LIMIT:
        raise PositionOverflow(f"Word length {length} exceeds {WORD_LIMIT}")
    previous, current = b'a', b'ab'
    while len(current) < length:
        previous, current = current, current + previous
    return FibWord(current[:length])
