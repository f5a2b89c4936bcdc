from dataclasses import dataclass
from typing import AbstractSet, FrozenSet, Iterable, Optional, Sequence, Tuple

from app.core.exceptions import AnalysisError


class ModelError(AnalysisError):
    """A temporal model is malformed or a position lies outside it."""


@dataclass(frozen=True)
class TemporalModel:
    """Positions ``0..last``; ``valuation[n]`` is the set of variables true at n.

    Variables outside ``universe`` are false everywhere, so a model over ρ is a
    word over 2^ρ.
    """

    universe: FrozenSet[str]
    valuation: Tuple[FrozenSet[str], ...]

    def __post_init__(self) -> None:
        if not self.valuation:
            raise ModelError("a temporal model needs at least one position")
        for position, letter in enumerate(self.valuation):
            stray = letter - self.universe
            if stray:
                raise ModelError(
                    f"position {position} sets {sorted(stray)} outside the universe {sorted(self.universe)}"
                )

    @classmethod
    def from_word(
        cls, word: Sequence[AbstractSet[str]], universe: Optional[Iterable[str]] = None
    ) -> "TemporalModel":
        letters = tuple(frozenset(letter) for letter in word)
        declared = frozenset().union(*letters) if universe is None else frozenset(universe)
        return cls(universe=declared, valuation=letters)

    def __len__(self) -> int:
        return len(self.valuation)

    @property
    def last(self) -> int:
        return len(self.valuation) - 1

    def check_position(self, position: int) -> None:
        if not 0 <= position <= self.last:
            raise ModelError(f"position {position} out of range 0..{self.last}")
