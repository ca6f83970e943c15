"""
Shared context for an interactive game against the engine.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, TextIO, Tuple

from engine.grundy import SubtractionSet, odd_fibonacci_set, subtrahends_upto


@dataclass
class PlayContext:
    """
    State shared by all play-mode states.

    Holds the current positions of the component games, the text streams the
    transcript goes through, and the outcome once the game is over.
    """
    positions: List[int]
    input_stream: TextIO
    output_stream: TextIO
    logger: logging.Logger
    subtraction_set: SubtractionSet = field(default_factory=odd_fibonacci_set)
    loser: Optional[str] = None
    resigned: bool = False
    history: List[Tuple[str, int, int]] = field(default_factory=list)

    @property
    def single(self) -> bool:
        return len(self.positions) == 1

    def legal_moves(self, component: int) -> List[int]:
        return subtrahends_upto(self.subtraction_set, self.positions[component])

    def has_legal_move(self) -> bool:
        return any(self.legal_moves(i) for i in range(len(self.positions)))

    def apply_move(self, player: str, component: int, subtrahend: int) -> int:
        """Subtract from one component; returns the new position."""
        if not 0 <= component < len(self.positions):
            raise ValueError(f"No component {component}")
        if subtrahend not in self.legal_moves(component):
            raise ValueError(f"{subtrahend} is not a legal subtrahend from {self.positions[component]}")
        self.positions[component] -= subtrahend
        self.history.append((player, component, subtrahend))
        self.logger.debug(f"{player} took {subtrahend} from component {component}")
        return self.positions[component]

    def describe_positions(self) -> str:
        if self.single:
            return f"Position: {self.positions[0]}"
        return "Positions: " + ", ".join(f"#{i}={x}" for i, x in enumerate(self.positions))

    def describe_moves(self) -> str:
        if self.single:
            moves = self.legal_moves(0)
            return "Legal subtrahends: " + (", ".join(str(s) for s in moves) if moves else "none")
        parts = []
        for i in range(len(self.positions)):
            moves = self.legal_moves(i)
            parts.append(f"#{i}: " + (", ".join(str(s) for s in moves) if moves else "none"))
        return "Legal subtrahends: " + "; ".join(parts)

    def say(self, text: str) -> None:
        self.output_stream.write(text + "\n")
        self.output_stream.flush()

    def ask(self, prompt: str) -> Optional[str]:
        """Write a prompt and read one line; None on end of input."""
        self.output_stream.write(prompt)
        self.output_stream.flush()
        line = self.input_stream.readline()
        if not line:
            return None
        return line.strip()
