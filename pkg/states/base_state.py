"""
Base state class for the play-mode state machine.
"""

from abc import ABC, abstractmethod
from typing import Optional, TYPE_CHECKING

if TYPE_CHECKING:
    from models.play_context import PlayContext
    from models.state_enums import PlayState

HUMAN = "human"
ENGINE = "engine"


class BaseState(ABC):
    """
    Abstract base class for all play states.

    Each state receives the shared play context holding positions, streams
    and the outcome.
    """

    def __init__(self, context: 'PlayContext'):
        self.context = context
        self.logger = context.logger

    @abstractmethod
    def execute(self) -> Optional['PlayState']:
        """
        Run one step of the state.

        Returns:
            Optional[PlayState]: Next state, or None to stay in the current state
        """
        pass

    def log_state_entry(self) -> None:
        state_name = self.__class__.__name__.replace('State', '').upper()
        self.logger.debug(f"Entering state: {state_name}")

    def log_state_exit(self, next_state: Optional['PlayState']) -> None:
        state_name = self.__class__.__name__.replace('State', '').upper()
        if next_state:
            self.logger.debug(f"Exiting {state_name} -> {next_state.value.upper()}")
        else:
            self.logger.debug(f"Staying in {state_name}")
