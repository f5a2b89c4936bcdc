from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, model_validator


class AutomatonDocument(BaseModel):
    """The JSON automaton file format.

    States are ``0..states-1``; transitions are ``[source, letter name, target]``.
    A ``dfa`` has exactly one initial state and at most one transition per state
    and letter; missing transitions are sent to a fresh sink when read.
    """

    kind: Literal["nfa", "dfa"] = Field(..., description="Automaton kind")
    alphabet: List[str] = Field(..., min_length=1, description="Letter names, in order")
    states: int = Field(..., ge=0, description="Number of states")
    initial: List[int] = Field(..., description="Initial state ids")
    accepting: List[int] = Field(default_factory=list, description="Accepting state ids")
    transitions: List[Tuple[int, str, int]] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_references(self) -> "AutomatonDocument":
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet contains duplicate letters")
        for field_name in ("initial", "accepting"):
            for state in getattr(self, field_name):
                if not 0 <= state < self.states:
                    raise ValueError(f"{field_name} state {state} is not a state of the automaton")
        letters = set(self.alphabet)
        for source, letter, target in self.transitions:
            if not (0 <= source < self.states and 0 <= target < self.states):
                raise ValueError(f"transition [{source}, {letter!r}, {target}] references an unknown state")
            if letter not in letters:
                raise ValueError(f"transition [{source}, {letter!r}, {target}] uses an unknown letter")
        if self.kind == "dfa":
            if len(self.initial) != 1:
                raise ValueError("a dfa needs exactly one initial state")
            seen = set()
            for source, letter, _target in self.transitions:
                if (source, letter) in seen:
                    raise ValueError(f"dfa has two transitions from state {source} on {letter!r}")
                seen.add((source, letter))
        return self


class LanguageInput(BaseModel):
    """A language given either as an automaton document or as a regex over ``alphabet``."""

    automaton: Optional[AutomatonDocument] = None
    regex: Optional[str] = None
    alphabet: Optional[List[str]] = None

    @model_validator(mode="after")
    def _one_source(self) -> "LanguageInput":
        if (self.automaton is None) == (self.regex is None):
            raise ValueError("give exactly one of 'automaton' or 'regex'")
        if self.regex is not None and not self.alphabet:
            raise ValueError("'regex' needs a nonempty 'alphabet'")
        return self
