import numpy as np
import pytest

from engine.errors import InvalidSubtractionSet, PositionOutOfRange, ValueOverflow, WindowTooSmall
from engine.grundy import (
    GrundyTable,
    finite_set,
    grundy_sieve,
    mex,
    nim_value_group,
    optimal_moves,
    odd_fibonacci_set,
    period_scan,
    subtrahends_upto,
    verify_recursion,
)
from models.position_class import PositionClass

PREFIX_TO_17 = [0, 1, 0, 1, 2, 0, 1, 0, 1, 2, 0, 1, 2, 0, 1, 0, 1, 2]


@pytest.mark.parametrize("limit, expected", [
    (0, []),
    (12, [1, 4, 12]),
    (100, [1, 4, 12, 33, 88]),
])
def test_subtrahends_upto(limit, expected):
    assert subtrahends_upto(odd_fibonacci_set(), limit) == expected


def test_odd_fibonacci_set_reaches_the_64_bit_range():
    subtrahends = subtrahends_upto(odd_fibonacci_set(), 2 ** 63)
    assert subtrahends[-1] == 4660046610375530308
    assert len(subtrahends) == 45


@pytest.mark.parametrize("values", [[3, 3], [4, 2], [0, 1]])
def test_non_increasing_sets_are_rejected(values):
    with pytest.raises(InvalidSubtractionSet):
        subtrahends_upto(finite_set(values), 10)


@pytest.mark.parametrize("values, expected", [(set(), 0), ({0, 1, 2}, 3), ({1, 2}, 0), ({0, 2}, 1)])
def test_mex(values, expected):
    assert mex(values) == expected


def test_sieve_small_tables():
    assert grundy_sieve(odd_fibonacci_set(), 4).values().tolist() == [0, 1, 0, 1, 2]
    assert grundy_sieve(odd_fibonacci_set(), 0).values().tolist() == [0]
    table = grundy_sieve(odd_fibonacci_set(), 17)
    assert table[17] == 2
    assert table.values().tolist() == PREFIX_TO_17


def test_sieve_satisfies_recursion(odd_fib_table):
    assert verify_recursion(odd_fib_table) is None
    values = odd_fib_table.values()
    for x in range(0, 2_000):
        options = {int(values[x - s]) for s in odd_fib_table.subtrahends if s <= x}
        assert values[x] == mex(options)


def test_recursion_check_finds_tampering():
    values = list(PREFIX_TO_17)
    values[9] = 0
    tampered = GrundyTable.from_values(values, "tampered", (1, 4, 12))
    assert verify_recursion(tampered) == 9


def test_odd_fibonacci_set_is_ternary(odd_fib_table):
    assert odd_fib_table.values().max() == 2


@pytest.mark.slow
def test_odd_fibonacci_set_is_ternary_to_one_million():
    table = grundy_sieve(odd_fibonacci_set(), 1_000_000)
    assert set(np.unique(table.values()).tolist()) == {0, 1, 2}
    assert table.nbytes == 250_001


def test_sieve_overflow_is_an_error():
    with pytest.raises(ValueOverflow) as info:
        grundy_sieve(finite_set([1, 2, 3, 4]), 10)
    assert info.value.position == 4


def test_sieve_rejects_negative_size():
    with pytest.raises(PositionOutOfRange):
        grundy_sieve(odd_fibonacci_set(), -1)


def test_packing_round_trip_and_bounds():
    table = GrundyTable.from_values([3, 2, 1, 0, 1, 2, 3])
    assert [table[x] for x in range(7)] == [3, 2, 1, 0, 1, 2, 3]
    assert table.nbytes == 2
    with pytest.raises(PositionOutOfRange):
        table[7]
    with pytest.raises(ValueOverflow):
        GrundyTable.from_values([0, 4])


def test_odd_fibonacci_set_has_no_small_period(odd_fib_table):
    report = period_scan(odd_fib_table, 1_000, 10_000)
    assert report.found is None
    assert sum(report.class_counts.values()) == len(odd_fib_table)
    assert report.elapsed_ms >= 0


def test_class_counts_of_first_eighteen():
    counts = grundy_sieve(odd_fibonacci_set(), 18).class_counts()
    assert counts == {
        PositionClass.TERMINAL: 1,
        PositionClass.CLASS_B: 7,
        PositionClass.CLASS_B1: 7,
        PositionClass.CLASS_AB1: 4,
    }


@pytest.mark.slow
def test_odd_fibonacci_set_has_no_period_in_large_window(odd_fib_table):
    assert period_scan(odd_fib_table, 10_000, 50_000).found is None


def test_period_of_single_subtrahend_game():
    table = grundy_sieve(finite_set([1]), 100)
    assert table.values()[:6].tolist() == [0, 1, 0, 1, 0, 1]
    assert period_scan(table, 10, 20).found == (0, 2)


def test_period_of_empty_set_is_one():
    table = grundy_sieve(finite_set([]), 50)
    assert period_scan(table, 5, 10).found == (0, 1)


def test_period_scan_recovers_planted_period():
    values = [2, 3] + [0, 1, 1] * 40
    table = GrundyTable.from_values(values)
    report = period_scan(table, 5, 10)
    assert (report.preperiod, report.period) == (2, 3)
    found_t, found_p = report.found
    assert all(values[x] == values[x + found_p] for x in range(found_t, len(values) - found_p))


def test_period_scan_window_must_fit():
    table = grundy_sieve(odd_fibonacci_set(), 100)
    with pytest.raises(WindowTooSmall):
        period_scan(table, 40, 30)


def test_nim_value_group():
    assert nim_value_group(grundy_sieve(odd_fibonacci_set(), 4)) == {0, 1, 2, 3}
    assert nim_value_group(grundy_sieve(finite_set([]), 10)) == {0}
    assert nim_value_group(grundy_sieve(finite_set([1]), 10)) == {0, 1}


@pytest.mark.parametrize("x, expected", [(4, [4]), (2, []), (9, [4]), (0, [])])
def test_optimal_moves(odd_fib_table, x, expected):
    assert optimal_moves(odd_fib_table, x) == expected


def test_optimal_moves_out_of_range():
    with pytest.raises(PositionOutOfRange):
        optimal_moves(grundy_sieve(odd_fibonacci_set(), 10), 11)


def test_p_positions_have_no_winning_move(odd_fib_table):
    values = odd_fib_table.values()
    for x in range(1, 5_000):
        moves = optimal_moves(odd_fib_table, x)
        assert (values[x] == 0) == (not moves)
