"""
Enumerations for play-mode states and tool commands.
"""

from enum import Enum


class PlayState(Enum):
    """States of an interactive game against the engine."""
    HUMAN_TURN = "human_turn"
    ENGINE_TURN = "engine_turn"
    GAME_OVER = "game_over"


class Command(Enum):
    """Subcommands of the command-line tool."""
    SIEVE = "sieve"
    CLASSIFY = "classify"
    VERIFY = "verify"
    PARTITION = "partition"
    PERIOD = "period"
    GROUP = "group"
    FOLLOWERS = "followers"
    WORD = "word"
    PLAY = "play"
    BENCH = "bench"
