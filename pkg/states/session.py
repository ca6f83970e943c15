"""
Driver loop for an interactive game.
"""

from typing import Dict, Optional

from models.play_context import PlayContext
from models.state_enums import PlayState
from states.base_state import BaseState
from states.engine_turn import EngineTurnState
from states.game_over import GameOverState
from states.human_turn import HumanTurnState


class PlaySession:
    """
    Runs the play state machine until the game is over.

    Each state handles one turn; the session only dispatches and records
    transitions.
    """

    def __init__(self, context: PlayContext, engine_first: bool = False):
        self.context = context
        self.logger = context.logger
        self.current_state = PlayState.ENGINE_TURN if engine_first else PlayState.HUMAN_TURN
        self.running = True
        self.state_registry: Dict[PlayState, BaseState] = {}
        self._register_states()

    def run(self) -> Optional[str]:
        """Play to the end; returns the loser ("human" or "engine")."""
        self.logger.info(f"Starting game from {self.context.positions}")
        while self.running:
            state_handler = self.state_registry[self.current_state]
            next_state = state_handler.execute()

            if self.current_state == PlayState.GAME_OVER:
                self.running = False
            elif next_state and next_state != self.current_state:
                self.logger.debug(f"State transition: {self.current_state.value} -> {next_state.value}")
                self.current_state = next_state
        return self.context.loser

    def _register_states(self) -> None:
        self.state_registry[PlayState.HUMAN_TURN] = HumanTurnState(self.context)
        self.state_registry[PlayState.ENGINE_TURN] = EngineTurnState(self.context)
        self.state_registry[PlayState.GAME_OVER] = GameOverState(self.context)
