"""
Numba-compiled inner loops.

Usage:
    from engine.kernels import sieve_packed

    packed = np.zeros((n + 4) // 4, dtype=np.uint8)
    overflow_at = sieve_packed(subtrahends, n, packed)

Packed tables hold four 2-bit values per byte; position x lives in byte
x >> 2 at bit offset 2 * (x & 3).
"""

import numpy as np
from numba import njit

from engine.fibzeck import FIBS

# F_0..F_92; F_93 does not fit a signed 64-bit integer and is never needed below 2^63
FIBS_I64 = np.array(FIBS[:93], dtype=np.int64)


@njit(cache=True)
def sieve_packed(subtrahends, max_position, packed):
    """
    Fill packed with Grundy values for positions 0..max_position.

    subtrahends must be ascending int64. Returns -1 on success, or the first
    position whose mex exceeds 3.
    """
    count = subtrahends.shape[0]
    for x in range(max_position + 1):
        mask = 0
        for k in range(count):
            s = subtrahends[k]
            if s > x:
                break
            y = x - s
            mask |= 1 << ((packed[y >> 2] >> ((y & 3) << 1)) & 3)
        value = 0
        while mask & (1 << value):
            value += 1
        if value > 3:
            return x
        packed[x >> 2] |= np.uint8(value << ((x & 3) << 1))
    return -1


@njit(cache=True)
def unpack_values(packed, max_position):
    values = np.empty(max_position + 1, dtype=np.uint8)
    for x in range(max_position + 1):
        values[x] = (packed[x >> 2] >> ((x & 3) << 1)) & 3
    return values


@njit(cache=True, nogil=True)
def low_indices(lo, hi, fibs):
    """Smallest and second smallest Zeckendorf index of every x in [lo, hi]; 0 when absent."""
    size = hi - lo + 1
    z1 = np.zeros(size, dtype=np.int8)
    z2 = np.zeros(size, dtype=np.int8)
    top = fibs.shape[0] - 1
    for k in range(size):
        x = lo + k
        first = 0
        second = 0
        i = top
        while x > 0:
            while fibs[i] > x:
                i -= 1
            x -= fibs[i]
            second = first
            first = i
            i -= 2
        z1[k] = first
        z2[k] = second
    return z1, z2


@njit(cache=True)
def first_period(values, max_period, max_preperiod):
    """
    Smallest period p <= max_period whose minimal preperiod is <= max_preperiod.

    Returns (preperiod, period), or (-1, -1) when nothing is found.
    """
    last = values.shape[0] - 1
    for p in range(1, max_period + 1):
        x = last - p
        while x >= 0 and values[x] == values[x + p]:
            x -= 1
        if x + 1 <= max_preperiod:
            return x + 1, p
    return -1, -1
