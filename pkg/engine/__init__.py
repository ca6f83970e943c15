"""
Game engine: Fibonacci/Zeckendorf arithmetic, Wythoff sequences, the
Sprague-Grundy sieve and the closed-form classification.
"""

from .fibzeck import ZeckendorfRep, fib, zeckendorf_decode, zeckendorf_encode
from .grundy import GrundyTable, SubtractionSet, grundy_sieve, odd_fibonacci_set
from .theorem import classify, classify_by_enumeration, sum_winner, winner

__all__ = [
    'ZeckendorfRep', 'fib', 'zeckendorf_decode', 'zeckendorf_encode',
    'GrundyTable', 'SubtractionSet', 'grundy_sieve', 'odd_fibonacci_set',
    'classify', 'classify_by_enumeration', 'sum_winner', 'winner',
]
