"""
Data models for the subtraction game tool.
"""

from .position_class import Player, PositionClass
from .reports import Counterexample, FollowerProperties, PeriodReport, SumOutcome, VerificationReport, WinningMove
from .output_record import OutputRecord
from .state_enums import Command, PlayState
from .tool_config import ToolConfig

__all__ = [
    'Player', 'PositionClass', 'Counterexample', 'FollowerProperties', 'PeriodReport',
    'SumOutcome', 'VerificationReport', 'WinningMove', 'OutputRecord', 'Command', 'PlayState', 'ToolConfig',
]
