"""
Play-mode state machine: one state per turn kind, driven by PlaySession.
"""

from .base_state import BaseState
from .session import PlaySession

__all__ = ['BaseState', 'PlaySession']
