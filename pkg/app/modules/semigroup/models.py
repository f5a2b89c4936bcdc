"""Finite semigroups given by a Cayley table and a letter morphism."""

from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from app.modules.automata.models import Alphabet


@dataclass(frozen=True, eq=False)
class FiniteSemigroup:
    """Elements are ``0..size-1``; element ids follow shortlex order of witnesses.

    ``table[s, t]`` is the product s·t (s first, then t, matching δ_{uv} = "read u,
    then v"). ``generators[a]`` is α(a) for the letter with index ``a``.
    ``accepting`` holds the marked sets F₁, F₂, … when language markings were
    requested. ``functions`` keeps the packed transition functions for semigroups
    built from a DFA.
    """

    alphabet: Alphabet
    table: np.ndarray
    generators: Tuple[int, ...]
    witnesses: Tuple[Tuple[str, ...], ...]
    accepting: Tuple[FrozenSet[int], ...] = ()
    functions: Optional[np.ndarray] = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return int(self.table.shape[0])

    @cached_property
    def rows(self) -> List[List[int]]:
        """The Cayley table as nested lists, for tight Python loops."""
        return self.table.tolist()

    def multiply(self, left: int, right: int) -> int:
        return self.rows[left][right]

    def power(self, element: int, exponent: int) -> int:
        if exponent < 1:
            raise ValueError("exponent must be positive")
        result: Optional[int] = None
        base = element
        while exponent:
            if exponent & 1:
                result = base if result is None else self.rows[result][base]
            exponent >>= 1
            if exponent:
                base = self.rows[base][base]
        return result

    def element_of(self, word: Sequence[str]) -> int:
        """α(word) for a nonempty word."""
        if not word:
            raise ValueError("the empty word has no image in a semigroup")
        letters = self.alphabet.encode(word)
        element = self.generators[letters[0]]
        for letter in letters[1:]:
            element = self.rows[element][self.generators[letter]]
        return element

    def is_idempotent(self, element: int) -> bool:
        return self.rows[element][element] == element
