"""
ENGINE_TURN state implementation.

The engine moves to a zero nim-sum when it can, otherwise it takes the
smallest legal subtrahend from the first component that allows one.
"""

from typing import Optional, Tuple

from engine.theorem import sum_winner
from models.state_enums import PlayState
from states.base_state import ENGINE, BaseState


class EngineTurnState(BaseState):
    """State in which the engine replies with its optimal move."""

    def execute(self) -> Optional[PlayState]:
        self.log_state_entry()
        context = self.context

        if not context.has_legal_move():
            context.loser = ENGINE
            next_state = PlayState.GAME_OVER
            self.log_state_exit(next_state)
            return next_state

        component, subtrahend = self._choose_move()
        before = context.positions[component]
        after = context.apply_move(ENGINE, component, subtrahend)
        if context.single:
            context.say(f"Engine takes {subtrahend} from {before}, leaving {after}")
        else:
            context.say(f"Engine takes {subtrahend} from #{component} ({before}), leaving {after}")

        next_state = PlayState.HUMAN_TURN
        self.log_state_exit(next_state)
        return next_state

    def _choose_move(self) -> Tuple[int, int]:
        outcome = sum_winner(self.context.positions)
        if outcome.move:
            self.logger.debug(f"Winning move found, nim-sum {outcome.nim_sum}")
            return outcome.move.component, outcome.move.subtrahend

        for component in range(len(self.context.positions)):
            moves = self.context.legal_moves(component)
            if moves:
                return component, moves[0]
        raise RuntimeError("Engine asked to move without a legal move")
