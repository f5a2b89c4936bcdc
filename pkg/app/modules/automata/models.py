"""Finite automata over finite alphabets.

Languages are subsets of A^+: the empty word is never accepted, so a DFA whose
initial state is accepting still rejects the empty word.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple, Union

from app.core.exceptions import AnalysisError
from app.modules.frontends.letters import LetterError, parse_letter_name, powerset_names


class AlphabetMismatchError(AnalysisError):
    def __init__(self, left: "Alphabet", right: "Alphabet") -> None:
        super().__init__(f"alphabet mismatch: {list(left.letters)} vs {list(right.letters)}")


class AutomatonStructureError(AnalysisError):
    """A state or letter reference is out of range."""


@dataclass(frozen=True)
class Alphabet:
    letters: Tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.letters:
            raise AutomatonStructureError("alphabet must not be empty")
        if len(set(self.letters)) != len(self.letters):
            raise AutomatonStructureError(f"duplicate letters in alphabet {list(self.letters)}")

    @classmethod
    def of(cls, letters: Iterable[str]) -> "Alphabet":
        return cls(tuple(letters))

    @classmethod
    def powerset(cls, variables: Iterable[str]) -> "Alphabet":
        """The alphabet 2^variables with letters named ``{p,q}``."""
        return cls(powerset_names(variables))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    @cached_property
    def _positions(self) -> Dict[str, int]:
        return {name: index for index, name in enumerate(self.letters)}

    def position(self, name: str) -> Optional[int]:
        return self._positions.get(name)

    def index(self, name: str) -> int:
        try:
            return self._positions[name]
        except KeyError:
            raise LetterError(f"letter {name!r} is not in the alphabet {list(self.letters)}") from None

    def encode(self, word: Sequence[str]) -> Tuple[int, ...]:
        return tuple(self.index(name) for name in word)

    def decode(self, word: Sequence[int]) -> Tuple[str, ...]:
        return tuple(self.letters[index] for index in word)

    @cached_property
    def variable_sets(self) -> Tuple[FrozenSet[str], ...]:
        """Letters read as variable sets; raises ``LetterError`` for plain names."""
        return tuple(parse_letter_name(name) for name in self.letters)

    @cached_property
    def variables(self) -> FrozenSet[str]:
        return frozenset().union(*self.variable_sets)


@dataclass(frozen=True)
class Nfa:
    alphabet: Alphabet
    num_states: int
    initial: FrozenSet[int]
    accepting: FrozenSet[int]
    transitions: FrozenSet[Tuple[int, int, int]]  # (source, letter index, target)

    def __post_init__(self) -> None:
        if self.num_states < 0:
            raise AutomatonStructureError("state count must be non-negative")
        for state in self.initial | self.accepting:
            self._check_state(state)
        for source, letter, target in self.transitions:
            self._check_state(source)
            self._check_state(target)
            if not 0 <= letter < len(self.alphabet):
                raise AutomatonStructureError(f"letter index {letter} out of range")

    def _check_state(self, state: int) -> None:
        if not 0 <= state < self.num_states:
            raise AutomatonStructureError(f"state {state} out of range 0..{self.num_states - 1}")

    @cached_property
    def successors(self) -> Tuple[Tuple[FrozenSet[int], ...], ...]:
        """``successors[state][letter]`` is the set of targets."""
        table = [[set() for _ in self.alphabet.letters] for _ in range(self.num_states)]
        for source, letter, target in self.transitions:
            table[source][letter].add(target)
        return tuple(tuple(frozenset(targets) for targets in row) for row in table)

    def step(self, states: Iterable[int], letter: int) -> FrozenSet[int]:
        result = set()
        for state in states:
            result |= self.successors[state][letter]
        return frozenset(result)

    def to_nfa(self) -> "Nfa":
        return self


@dataclass(frozen=True)
class Dfa:
    alphabet: Alphabet
    num_states: int
    initial: int
    accepting: FrozenSet[int]
    delta: Tuple[Tuple[int, ...], ...]  # delta[state][letter index], total

    def __post_init__(self) -> None:
        if self.num_states < 1:
            raise AutomatonStructureError("a DFA needs at least one state")
        if len(self.delta) != self.num_states:
            raise AutomatonStructureError("transition table does not cover every state")
        if not 0 <= self.initial < self.num_states:
            raise AutomatonStructureError(f"initial state {self.initial} out of range")
        for state in self.accepting:
            if not 0 <= state < self.num_states:
                raise AutomatonStructureError(f"accepting state {state} out of range")
        for row in self.delta:
            if len(row) != len(self.alphabet):
                raise AutomatonStructureError("transition table is not total")
            for target in row:
                if not 0 <= target < self.num_states:
                    raise AutomatonStructureError(f"transition target {target} out of range")

    def run(self, word: Sequence[int], start: Optional[int] = None) -> int:
        state = self.initial if start is None else start
        for letter in word:
            state = self.delta[state][letter]
        return state

    def to_nfa(self) -> Nfa:
        return Nfa(
            alphabet=self.alphabet,
            num_states=self.num_states,
            initial=frozenset({self.initial}),
            accepting=self.accepting,
            transitions=frozenset(
                (state, letter, target)
                for state, row in enumerate(self.delta)
                for letter, target in enumerate(row)
            ),
        )


Automaton = Union[Nfa, Dfa]
