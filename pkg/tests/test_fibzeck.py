import pytest

from engine.errors import IndexOutOfRange, InvalidRepresentation, PositionOverflow, UndefinedForZero
from engine.fibzeck import (
    MAX_FIB_INDEX,
    ZeckendorfRep,
    fib,
    fib_floor_index,
    smallest_index,
    zeckendorf_decode,
    zeckendorf_encode,
)


@pytest.mark.parametrize("i, expected", [(1, 1), (2, 1), (3, 2), (7, 13), (10, 55)])
def test_fib_values(i, expected):
    assert fib(i) == expected


def test_fib_top_index_fits_unsigned_64_bits():
    assert fib(MAX_FIB_INDEX) == 12200160415121876738
    assert fib(MAX_FIB_INDEX) < 2 ** 64


@pytest.mark.parametrize("i", [0, -1, 94])
def test_fib_rejects_out_of_range_index(i):
    with pytest.raises(IndexOutOfRange):
        fib(i)


@pytest.mark.parametrize("x, expected", [(1, 2), (2, 3), (12, 6), (13, 7)])
def test_fib_floor_index(x, expected):
    assert fib_floor_index(x) == expected


@pytest.mark.parametrize("x, indices", [
    (0, ()),
    (12, (2, 4, 6)),
    (17, (2, 4, 7)),
    (33, (2, 4, 6, 8)),
])
def test_encode_examples(x, indices):
    assert zeckendorf_encode(x).indices == indices


@pytest.mark.parametrize("indices, x", [([], 0), ([2, 4, 6], 12), ([3, 5], 7)])
def test_decode_examples(indices, x):
    assert zeckendorf_decode(indices) == x


@pytest.mark.parametrize("indices", [[3, 4], [5, 3], [1], [2, 2], [0, 4]])
def test_decode_rejects_invalid_representations(indices):
    with pytest.raises(InvalidRepresentation):
        zeckendorf_decode(indices)


@pytest.mark.parametrize("x, expected", [(1, 2), (2, 3), (17, 2)])
def test_smallest_index(x, expected):
    assert smallest_index(x) == expected


def test_smallest_index_of_zero_is_undefined():
    with pytest.raises(UndefinedForZero):
        smallest_index(0)


def test_encode_bounds():
    assert zeckendorf_decode(zeckendorf_encode(2 ** 63 - 1)) == 2 ** 63 - 1
    with pytest.raises(PositionOverflow):
        zeckendorf_encode(2 ** 63)
    with pytest.raises(ValueError):
        zeckendorf_encode(-1)


def test_rep_exposes_two_smallest_indices():
    rep = ZeckendorfRep((2, 4, 7))
    assert (rep.z1, rep.z2, len(rep)) == (2, 4, 3)
    assert (ZeckendorfRep().z1, ZeckendorfRep((5,)).z2) == (0, 0)


def test_round_trip_and_shape():
    for x in range(100_001):
        indices = zeckendorf_encode(x).indices
        assert zeckendorf_decode(indices) == x
        assert all(i >= 2 for i in indices)
        assert all(b - a >= 2 for a, b in zip(indices, indices[1:]))


@pytest.mark.slow
def test_round_trip_to_one_million():
    assert all(zeckendorf_decode(zeckendorf_encode(x)) == x for x in range(1_000_001))


def test_representation_is_unique():
    """Every valid index set with indices up to 25 hits a distinct sum; below 10^5 it is the greedy one."""
    limit = 100_000
    top = fib_floor_index(limit)
    sums = {}

    def extend(smallest_allowed, indices, total):
        for index in range(smallest_allowed, top + 1):
            value = total + fib(index)
            chosen = indices + (index,)
            assert value not in sums
            sums[value] = chosen
            extend(index + 2, chosen, value)

    extend(2, (), 0)
    for x in range(1, limit + 1):
        assert sums[x] == zeckendorf_encode(x).indices


def test_distinct_positions_have_distinct_representations():
    reps = [zeckendorf_encode(x) for x in range(5_000)]
    assert len(set(reps)) == len(reps)
