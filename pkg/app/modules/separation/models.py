"""Antichain representation of S†.

A set of semigroup elements is a Python ``int`` used as a bit vector over
element ids. S† is downward closed (C1), so it is stored by its maximal sets
only: T is a member iff T ⊆ M for some stored M. The products T·T′ and the
map T ↦ T^ω ∪ T^(ω+1) are monotone in T and T′, so applying C2 and C3 to
maximal sets alone already yields every maximal set of the closure.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Tuple

from app.modules.semigroup.models import FiniteSemigroup


def to_mask(elements: Iterable[int]) -> int:
    mask = 0
    for element in elements:
        mask |= 1 << element
    return mask


def from_mask(mask: int) -> Tuple[int, ...]:
    elements = []
    while mask:
        low = mask & -mask
        elements.append(low.bit_length() - 1)
        mask ^= low
    return tuple(elements)


@dataclass(frozen=True)
class SubsetFamily:
    """Maximal members of S† over a semigroup of ``size`` elements.

    ``complete`` is False when saturation stopped early; the members then
    cover only part of S†.
    """

    size: int
    members: Tuple[int, ...]
    complete: bool = True

    def contains(self, elements: Iterable[int]) -> bool:
        mask = to_mask(elements)
        return any(mask & ~member == 0 for member in self.members)

    def maximal_sets(self) -> List[FrozenSet[int]]:
        return [frozenset(from_mask(member)) for member in self.members]

    def non_singletons(self) -> List[FrozenSet[int]]:
        return [elements for elements in self.maximal_sets() if len(elements) > 1]

    def is_singleton_family(self) -> bool:
        return all(member & (member - 1) == 0 for member in self.members)


@dataclass(frozen=True)
class SeparationWitness:
    """A pair {t₁, t₂} ∈ S† with t₁ ∈ F₁, t₂ ∈ F₂ and words mapping onto it."""

    left_element: int
    right_element: int
    left_word: Tuple[str, ...]
    right_word: Tuple[str, ...]


@dataclass(frozen=True)
class SeparationOutcome:
    separable: bool
    semigroup: FiniteSemigroup
    omega: int
    family: SubsetFamily
    left_states: int
    right_states: int
    product_states: int
    witness: Optional[SeparationWitness] = None
