"""
HUMAN_TURN state implementation.

Shows the position, reads a move from the input stream and applies it.
"""

from typing import Optional, Tuple

from models.state_enums import PlayState
from states.base_state import HUMAN, BaseState


class HumanTurnState(BaseState):
    """
    State in which the human player moves.

    This state:
    1. Displays the position(s) and the legal subtrahends
    2. Declares the human the loser if no move exists
    3. Reads and validates a move, re-prompting on illegal input
    4. Treats end of input as resignation
    """

    def execute(self) -> Optional[PlayState]:
        self.log_state_entry()
        context = self.context
        context.say(context.describe_positions())

        if not context.has_legal_move():
            context.loser = HUMAN
            next_state = PlayState.GAME_OVER
            self.log_state_exit(next_state)
            return next_state

        context.say(context.describe_moves())
        reply = context.ask("Your move: ")
        if reply is None:
            context.resigned = True
            context.loser = HUMAN
            next_state = PlayState.GAME_OVER
            self.log_state_exit(next_state)
            return next_state

        try:
            component, subtrahend = self._parse_move(reply)
            before = context.positions[component] if 0 <= component < len(context.positions) else None
            after = context.apply_move(HUMAN, component, subtrahend)
        except ValueError as e:
            context.say(f"Illegal move: {e}")
            self.log_state_exit(None)
            return None

        if context.single:
            context.say(f"You take {subtrahend} from {before}, leaving {after}")
        else:
            context.say(f"You take {subtrahend} from #{component} ({before}), leaving {after}")
        next_state = PlayState.ENGINE_TURN
        self.log_state_exit(next_state)
        return next_state

    def _parse_move(self, reply: str) -> Tuple[int, int]:
        """Read "component subtrahend", or just "subtrahend" in a single game."""
        parts = reply.split()
        try:
            numbers = [int(part) for part in parts]
        except ValueError:
            raise ValueError(f"cannot read {reply!r} as a move") from None

        if len(numbers) == 1 and self.context.single:
            return 0, numbers[0]
        if len(numbers) == 2:
            return numbers[0], numbers[1]
        if self.context.single:
            raise ValueError("enter a subtrahend")
        raise ValueError("enter a component and a subtrahend")
