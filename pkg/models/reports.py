"""
Data models for verification outcomes.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from models.position_class import Player, PositionClass


@dataclass(frozen=True)
class Counterexample:
    """First position at which a check failed."""
    position: int
    detail: str

    def to_dict(self) -> Dict[str, Any]:
        return {'position': self.position, 'detail': self.detail}


def counts_by_tag(class_counts: Dict[PositionClass, int]) -> Dict[str, int]:
    """Class tally keyed by tag, every class present."""
    return {position_class.value: class_counts.get(position_class, 0) for position_class in PositionClass}


@dataclass
class VerificationReport:
    """Outcome of an exhaustive check over [lo, hi]."""
    range_checked: Tuple[int, int]
    first_counterexample: Optional[Counterexample] = None
    class_counts: Dict[PositionClass, int] = field(default_factory=dict)
    mismatches: int = 0
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.first_counterexample is None

    @property
    def size(self) -> int:
        lo, hi = self.range_checked
        return max(0, hi - lo + 1)

    def counts_by_tag(self) -> Dict[str, int]:
        return counts_by_tag(self.class_counts)

    def to_dict(self, command: str) -> Dict[str, Any]:
        """JSON report layout consumed by CI."""
        report: Dict[str, Any] = {
            'command': command,
            'range': list(self.range_checked),
            'passed': self.passed,
            'counts': self.counts_by_tag(),
            'mismatches': self.mismatches,
            'elapsed_ms': round(self.elapsed_ms, 3),
        }
        if self.first_counterexample:
            report['counterexample'] = self.first_counterexample.to_dict()
        return report


@dataclass(frozen=True)
class PeriodReport:
    """Result of a bounded search for an eventual period."""
    searched_max_period: int
    searched_max_preperiod: int
    found: Optional[Tuple[int, int]] = None
    class_counts: Dict[PositionClass, int] = field(default_factory=dict)
    elapsed_ms: float = 0.0

    @property
    def preperiod(self) -> Optional[int]:
        return self.found[0] if self.found else None

    @property
    def period(self) -> Optional[int]:
        return self.found[1] if self.found else None

    def to_dict(self, command: str, max_position: int) -> Dict[str, Any]:
        return {
            'command': command,
            'range': [0, max_position],
            'passed': self.found is None,
            'max_period': self.searched_max_period,
            'max_preperiod': self.searched_max_preperiod,
            'found': list(self.found) if self.found else None,
            'counts': counts_by_tag(self.class_counts),
            'elapsed_ms': round(self.elapsed_ms, 3),
        }


@dataclass(frozen=True)
class FollowerProperties:
    """Which classes the followers x - s of a position fall into."""
    in_b: bool
    in_b1: bool
    in_ab1: bool
    terminal: bool

    @property
    def in_b_or_terminal(self) -> bool:
        return self.in_b or self.terminal


@dataclass(frozen=True)
class WinningMove:
    component: int
    subtrahend: int


@dataclass(frozen=True)
class SumOutcome:
    """Winner of a sum of games and, for next-player wins, the first winning move."""
    winner: Player
    nim_sum: int
    move: Optional[WinningMove] = None
