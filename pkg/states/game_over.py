"""
GAME_OVER state implementation.
"""

from typing import Optional

from models.state_enums import PlayState
from states.base_state import HUMAN, BaseState


class GameOverState(BaseState):
    """Announces the result; the session stops after this state runs."""

    def execute(self) -> Optional[PlayState]:
        self.log_state_entry()
        if self.context.resigned:
            self.context.say("You resign. The engine wins.")
        elif self.context.loser == HUMAN:
            self.context.say("No legal move: you lose.")
        else:
            self.context.say("The engine has no legal move: you win.")
        self.logger.info(f"Game over after {len(self.context.history)} moves, {self.context.loser} lost")
        return None
