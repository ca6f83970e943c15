"""
Closed-form classification of the game S = {F_(2n+1) - 1}.

Every positive x falls in exactly one of
    B     = {B(n)}      (n >= 1)  -> Grundy value 0
    B + 1 = {B(n) + 1}  (n >= 0)  -> Grundy value 1
    AB + 1 = {AB(n) + 1} (n >= 1) -> Grundy value 2
and the class can be read off the two smallest Zeckendorf indices of x.
This module computes the class both ways and checks them against the
brute-force sieve.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from functools import reduce
from operator import xor
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from engine import kernels
from engine.beatty import INDEX_LIMIT, ab, fibonacci_word, lower_wythoff_array, upper_wythoff
from engine.errors import BoundTooSmall, PartitionViolation, PositionOutOfRange, PositionOverflow, UndefinedForZero
from engine.fibzeck import POSITION_LIMIT, zeckendorf_encode
from engine.grundy import grundy_sieve, odd_fibonacci_set, subtrahends_upto, verify_recursion
from models.position_class import GRUNDY_BY_CODE, Player, PositionClass
from models.reports import Counterexample, FollowerProperties, SumOutcome, VerificationReport, WinningMove

logger = logging.getLogger(__name__)

UNASSIGNED = 255
_GRUNDY_LOOKUP = np.array(GRUNDY_BY_CODE, dtype=np.uint8)


def classify(x: int) -> PositionClass:
    """Class of position x via its Zeckendorf representation, O(log x)."""
    rep = zeckendorf_encode(x)
    if not rep.indices:
        return PositionClass.TERMINAL
    if rep.z1 % 2 == 1:
        return PositionClass.CLASS_B
    if rep.z1 >= 4:
        return PositionClass.CLASS_B1
    if rep.z2 == 0 or rep.z2 % 2 == 1:
        return PositionClass.CLASS_B1
    return PositionClass.CLASS_AB1


def _b_plus_one(n: int) -> int:
    return upper_wythoff(n) + 1 if n else 1


def _ab_plus_one(n: int) -> int:
    return ab(n) + 1


def _enumerates(sequence: Callable[[int], int], first: int, last: int, x: int) -> bool:
    """Whether x = sequence(n) for some first <= n <= last; sequence is increasing."""
    lo, hi = first, last
    while lo < hi:
        mid = (lo + hi) // 2
        if sequence(mid) < x:
            lo = mid + 1
        else:
            hi = mid
    return sequence(lo) == x


def enumeration_memberships(x: int, witnesses: Optional[int] = None) -> List[PositionClass]:
    """Sets among B, B+1, AB+1 whose first `witnesses` terms contain x."""
    if x < 1:
        raise UndefinedForZero(f"Enumerated sets cover positive integers only, got {x}")
    if x >= POSITION_LIMIT:
        raise PositionOverflow(f"Position {x} is not below 2^63")
    # B(n) >= 2n, so n = x // 2 + 1 reaches x; B(2^62 - 1) already exceeds 2^63
    witnesses = min(x // 2 + 1, INDEX_LIMIT - 1) if witnesses is None else witnesses
    if witnesses < 1 or x > upper_wythoff(witnesses):
        raise BoundTooSmall(f"{witnesses} witnesses do not reach position {x}")
    memberships = []
    if _enumerates(upper_wythoff, 1, witnesses, x):
        memberships.append(PositionClass.CLASS_B)
    if _enumerates(_b_plus_one, 0, witnesses, x):
        memberships.append(PositionClass.CLASS_B1)
    if _enumerates(_ab_plus_one, 1, witnesses, x):
        memberships.append(PositionClass.CLASS_AB1)
    return memberships


def classify_by_enumeration(x: int, witnesses: Optional[int] = None) -> PositionClass:
    """
    Class of x by direct membership in the Beatty-generated sets.

    Shares no code with classify beyond the exact Wythoff arithmetic, so the
    two act as independent oracles.
    """
    memberships = enumeration_memberships(x, witnesses)
    if len(memberships) != 1:
        raise PartitionViolation(f"Position {x} lies in {len(memberships)} sets: {memberships}")
    return memberships[0]


def enumerate_classes(max_position: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Membership counts and class codes for positions 0..max_position.

    Position 0 gets count 0 and the terminal code; positions not reached by
    any set keep code UNASSIGNED.
    """
    lower = lower_wythoff_array(max_position // 2 + 1)
    n = np.arange(1, lower.size + 1, dtype=np.int64)
    b = lower + n
    b = b[b <= max_position]
    b1 = np.concatenate(([1], lower + n + 1))
    b1 = b1[b1 <= max_position]
    ab1 = 2 * lower + n + 1
    ab1 = ab1[ab1 <= max_position]

    counts = np.bincount(np.concatenate((b, b1, ab1)), minlength=max_position + 1)
    codes = np.full(max_position + 1, UNASSIGNED, dtype=np.uint8)
    codes[0] = PositionClass.TERMINAL.code
    codes[b] = PositionClass.CLASS_B.code
    codes[b1] = PositionClass.CLASS_B1.code
    codes[ab1] = PositionClass.CLASS_AB1.code
    return counts, codes


def zeckendorf_low_indices(lo: int, hi: int, workers: int = 1) -> Tuple[np.ndarray, np.ndarray]:
    """z1 and z2 for every position in [lo, hi], split across worker threads."""
    if lo < 0 or hi < lo:
        raise ValueError(f"Invalid range [{lo}, {hi}]")
    if workers <= 1 or hi - lo < 1 << 16:
        return kernels.low_indices(lo, hi, kernels.FIBS_I64)

    bounds = np.linspace(lo, hi + 1, workers + 1, dtype=np.int64)
    chunks = [(int(start), int(stop) - 1) for start, stop in zip(bounds[:-1], bounds[1:]) if stop > start]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda chunk: kernels.low_indices(chunk[0], chunk[1], kernels.FIBS_I64), chunks))
    return np.concatenate([p[0] for p in parts]), np.concatenate([p[1] for p in parts])


def codes_from_low_indices(z1: np.ndarray, z2: np.ndarray) -> np.ndarray:
    codes = np.full(z1.shape, PositionClass.CLASS_AB1.code, dtype=np.uint8)
    codes[(z2 == 0) | (z2 % 2 == 1)] = PositionClass.CLASS_B1.code
    codes[z1 >= 4] = PositionClass.CLASS_B1.code
    codes[z1 % 2 == 1] = PositionClass.CLASS_B.code
    codes[z1 == 0] = PositionClass.TERMINAL.code
    return codes


def classify_range(lo: int, hi: int, workers: int = 1) -> np.ndarray:
    """Class codes of the closed form for every position in [lo, hi]."""
    return codes_from_low_indices(*zeckendorf_low_indices(lo, hi, workers))


def _class_name(code: int) -> str:
    return PositionClass.from_code(code).value if code != UNASSIGNED else "none"


def _count_classes(codes: np.ndarray) -> Dict[PositionClass, int]:
    tally = np.bincount(codes[codes != UNASSIGNED], minlength=4)
    return {position_class: int(tally[position_class.code]) for position_class in PositionClass}


def _elapsed_ms(start: float) -> float:
    return (time.perf_counter() - start) * 1000.0


def verify_partition(max_position: int) -> VerificationReport:
    """Every x in [1, max_position] lies in exactly one of B, B+1, AB+1."""
    if max_position < 1:
        raise ValueError(f"verify_partition needs max_position >= 1, got {max_position}")
    start = time.perf_counter()
    counts, codes = enumerate_classes(max_position)

    bad = np.flatnonzero(counts[1:] != 1) + 1
    counterexample = None
    if bad.size:
        x = int(bad[0])
        counterexample = Counterexample(x, f"member of {int(counts[x])} sets")

    report = VerificationReport(
        range_checked=(1, max_position),
        first_counterexample=counterexample,
        class_counts=_count_classes(codes[1:]),
        mismatches=int(bad.size),
        elapsed_ms=_elapsed_ms(start),
    )
    logger.info(f"Partition check on [1, {max_position}]: {'PASS' if report.passed else 'FAIL'}")
    return report


def verify_equivalence(max_position: int, workers: int = 1) -> VerificationReport:
    """Sieve, Zeckendorf closed form and Beatty enumeration agree on [0, max_position]."""
    if max_position < 0:
        raise ValueError(f"verify_equivalence needs max_position >= 0, got {max_position}")
    start = time.perf_counter()
    table = grundy_sieve(odd_fibonacci_set(), max_position)
    sieve = table.values()
    codes = classify_range(0, max_position, workers)
    _, enumerated = enumerate_classes(max_position)

    closed_form = _GRUNDY_LOOKUP[codes]
    bad = np.flatnonzero((closed_form != sieve) | (codes != enumerated))
    counterexample = None
    if bad.size:
        x = int(bad[0])
        counterexample = Counterexample(
            x,
            f"sieve g={int(sieve[x])}, closed form {_class_name(codes[x])} (g={int(closed_form[x])}), "
            f"enumeration {_class_name(enumerated[x])}",
        )
    else:
        recursion_break = verify_recursion(table)
        if recursion_break is not None:
            counterexample = Counterexample(recursion_break, "table value differs from mex over options")

    report = VerificationReport(
        range_checked=(0, max_position),
        first_counterexample=counterexample,
        class_counts=_count_classes(codes),
        mismatches=int(bad.size),
        elapsed_ms=_elapsed_ms(start),
    )
    logger.info(
        f"Equivalence check on [0, {max_position}]: {'PASS' if report.passed else 'FAIL'}, "
        f"{report.mismatches} mismatches in {report.elapsed_ms:.0f} ms"
    )
    return report


def follower_properties(x: int, max_position: int) -> FollowerProperties:
    """Classes reached by the moves from x; position 0 is reported separately."""
    if x < 1:
        raise UndefinedForZero(f"follower_properties needs a positive position, got {x}")
    if x > max_position:
        raise PositionOutOfRange(f"Position {x} beyond bound {max_position}")
    classes = {classify(x - s) for s in subtrahends_upto(odd_fibonacci_set(), x)}
    return FollowerProperties(
        in_b=PositionClass.CLASS_B in classes,
        in_b1=PositionClass.CLASS_B1 in classes,
        in_ab1=PositionClass.CLASS_AB1 in classes,
        terminal=PositionClass.TERMINAL in classes,
    )


def verify_follower_properties(max_position: int, workers: int = 1) -> VerificationReport:
    """
    Finite check of the induction steps on [1, max_position]:

      x in B     -> no follower in B
      x in B+1   -> a follower in B or 0, none in B+1
      x in AB+1  -> a follower in B or 0, one in B+1, none in AB+1
    """
    if max_position < 1:
        raise ValueError(f"verify_follower_properties needs max_position >= 1, got {max_position}")
    start = time.perf_counter()
    codes = classify_range(0, max_position, workers)
    size = max_position + 1
    reaches = {code: np.zeros(size, dtype=bool) for code in range(4)}
    for s in subtrahends_upto(odd_fibonacci_set(), max_position):
        followers = codes[:size - s]
        for code, flags in reaches.items():
            flags[s:] |= followers == code

    b_or_zero = reaches[PositionClass.CLASS_B.code] | reaches[PositionClass.TERMINAL.code]
    in_b1 = reaches[PositionClass.CLASS_B1.code]
    in_ab1 = reaches[PositionClass.CLASS_AB1.code]
    holds = np.select(
        [codes == PositionClass.CLASS_B.code, codes == PositionClass.CLASS_B1.code, codes == PositionClass.CLASS_AB1.code],
        [~reaches[PositionClass.CLASS_B.code], b_or_zero & ~in_b1, b_or_zero & in_b1 & ~in_ab1],
        default=True,
    )
    bad = np.flatnonzero(~holds[1:]) + 1
    counterexample = None
    if bad.size:
        x = int(bad[0])
        properties = follower_properties(x, max_position)
        counterexample = Counterexample(x, f"class {_class_name(codes[x])}, followers {properties}")

    report = VerificationReport(
        range_checked=(1, max_position),
        first_counterexample=counterexample,
        class_counts=_count_classes(codes[1:]),
        mismatches=int(bad.size),
        elapsed_ms=_elapsed_ms(start),
    )
    logger.info(f"Follower properties on [1, {max_position}]: {'PASS' if report.passed else 'FAIL'}")
    return report


def verify_word_agreement(max_position: int, workers: int = 1) -> VerificationReport:
    """Positions in B are exactly the 'b' positions of the Fibonacci word."""
    if max_position < 1:
        raise ValueError(f"verify_word_agreement needs max_position >= 1, got {max_position}")
    start = time.perf_counter()
    is_a = fibonacci_word(max_position).a_mask()
    codes = classify_range(1, max_position, workers)
    bad = np.flatnonzero(is_a == (codes == PositionClass.CLASS_B.code)) + 1
    counterexample = None
    if bad.size:
        x = int(bad[0])
        counterexample = Counterexample(x, f"word symbol {'a' if is_a[x - 1] else 'b'}, class {_class_name(codes[x - 1])}")

    return VerificationReport(
        range_checked=(1, max_position),
        first_counterexample=counterexample,
        class_counts=_count_classes(codes),
        mismatches=int(bad.size),
        elapsed_ms=_elapsed_ms(start),
    )


def verify_subtraction_structure(limit: int = 10 ** 18) -> VerificationReport:
    """
    Each s_n = F_(2n+1) - 1 <= limit has Zeckendorf indices 2, 4, ..., 2n.

    The report ranges over n and counts the class of each s_n.
    """
    start = time.perf_counter()
    subtrahends = subtrahends_upto(odd_fibonacci_set(), limit)
    counterexample = None
    mismatches = 0
    class_counts = dict.fromkeys(PositionClass, 0)
    for n, s in enumerate(subtrahends, start=1):
        class_counts[classify(s)] += 1
        indices = zeckendorf_encode(s).indices
        if indices != tuple(range(2, 2 * n + 1, 2)):
            mismatches += 1
            if counterexample is None:
                counterexample = Counterexample(s, f"indices {list(indices)}")
    return VerificationReport(
        range_checked=(1, len(subtrahends)),
        first_counterexample=counterexample,
        class_counts=class_counts,
        mismatches=mismatches,
        elapsed_ms=_elapsed_ms(start),
    )


def zero_density(report: VerificationReport) -> float:
    """Share of ClassB among the positive positions a report counted."""
    positive = sum(count for position_class, count in report.class_counts.items() if position_class != PositionClass.TERMINAL)
    if not positive:
        return 0.0
    return report.class_counts.get(PositionClass.CLASS_B, 0) / positive


def winner(x: int) -> Player:
    """PREVIOUS iff x is a P-position."""
    return Player.PREVIOUS if classify(x).grundy == 0 else Player.NEXT


def sum_winner(positions: Sequence[int]) -> SumOutcome:
    """
    Winner of the disjunctive sum and, when the mover wins, the first move
    (components ascending, subtrahends ascending) to a zero nim-sum.
    """
    grundies = [classify(x).grundy for x in positions]
    nim_sum = reduce(xor, grundies, 0)
    if nim_sum == 0:
        return SumOutcome(winner=Player.PREVIOUS, nim_sum=0)

    for component, (x, value) in enumerate(zip(positions, grundies)):
        target = value ^ nim_sum
        for s in subtrahends_upto(odd_fibonacci_set(), x):
            if classify(x - s).grundy == target:
                return SumOutcome(winner=Player.NEXT, nim_sum=nim_sum, move=WinningMove(component, s))
    raise RuntimeError(f"No move to nim-sum 0 from {list(positions)}; the closed form is inconsistent")
