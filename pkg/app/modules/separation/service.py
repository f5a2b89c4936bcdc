import logging
from collections import deque
from typing import Callable, Dict, Iterable, List, Optional, Set

import numpy as np

from app.modules.automata.models import Dfa
from app.modules.automata.service import complement, counter_witness, minimize, product_with_markings
from app.modules.frontends.letters import format_word
from app.modules.semigroup.models import FiniteSemigroup
from app.modules.semigroup.service import (
    element_label,
    idempotent_power,
    is_aperiodic,
    syntactic_semigroup,
    transition_semigroup,
)

from .models import SeparationOutcome, SeparationWitness, SubsetFamily, from_mask, to_mask
from .schemas import CounterReport, DefinabilityReport, SeparationReport, SeparationWitnessReport

logger = logging.getLogger(__name__)


def _elements(mask: int) -> np.ndarray:
    return np.fromiter(from_mask(mask), dtype=np.intp)


def set_product(semigroup: FiniteSemigroup, left: int, right: int) -> int:
    """T·T′ = {t·t′ : t ∈ T, t′ ∈ T′} on bit masks."""
    left_elements, right_elements = _elements(left), _elements(right)
    if not left_elements.size or not right_elements.size:
        return 0
    products = np.unique(semigroup.table[np.ix_(left_elements, right_elements)])
    return to_mask(products.tolist())


def set_power(semigroup: FiniteSemigroup, mask: int, exponent: int) -> int:
    if exponent < 1:
        raise ValueError("exponent must be positive")
    result = None
    base = mask
    while exponent:
        if exponent & 1:
            result = base if result is None else set_product(semigroup, result, base)
        exponent >>= 1
        if exponent:
            base = set_product(semigroup, base, base)
    return result


def _idempotent_closure(semigroup: FiniteSemigroup, mask: int, omega: int) -> int:
    power = set_power(semigroup, mask, omega)
    return power | set_product(semigroup, power, mask)


def _generated(semigroup: FiniteSemigroup, seeds: Iterable[int]) -> List[int]:
    """Elements of the subsemigroup generated by ``seeds``."""
    rows = semigroup.rows
    reached = set(seeds)
    frontier = list(reached)
    while frontier:
        element = frontier.pop()
        for other in list(reached):
            for found in (rows[element][other], rows[other][element]):
                if found not in reached:
                    reached.add(found)
                    frontier.append(found)
    return sorted(reached)


def _combinations(semigroup: FiniteSemigroup, current: np.ndarray, members: List[np.ndarray]) -> np.ndarray:
    """Rows T·M for every member M, followed by rows M·T."""
    table = semigroup.table
    rows = np.repeat(np.arange(len(members)), [len(member) for member in members])
    columns = np.concatenate(members)
    after = np.zeros((len(members), semigroup.size), dtype=bool)
    before = np.zeros_like(after)
    for element in current:
        after[rows, table[element, columns]] = True
        before[rows, table[columns, element]] = True
    return np.vstack([after, before])


def _undominated(candidates: np.ndarray, stored: np.ndarray) -> np.ndarray:
    """Which packed candidate rows lie in no packed stored row."""
    keep = np.ones(len(candidates), dtype=bool)
    if not len(stored):
        return keep
    chunk = max(1, (1 << 22) // stored.size)
    outside = ~stored
    for start in range(0, len(candidates), chunk):
        block = candidates[start : start + chunk]
        keep[start : start + chunk] = (block[:, None, :] & outside[None, :, :]).any(axis=2).all(axis=1)
    return keep


def _membership(size: int, members: Iterable[np.ndarray]) -> np.ndarray:
    members = list(members)
    hits = np.zeros((len(members), size), dtype=bool)
    for row, elements in enumerate(members):
        hits[row, elements] = True
    return hits


def saturate(
    semigroup: FiniteSemigroup,
    omega: Optional[int] = None,
    seeds: Optional[Iterable[int]] = None,
    stop: Optional[Callable[[int], bool]] = None,
) -> SubsetFamily:
    """Least family containing the seed singletons and closed under C1, C2 and C3.

    ``seeds`` defaults to every element, which is exact when every element is
    the image of a word (true for transition semigroups); otherwise the
    subsemigroup they generate is seeded. Singletons are all present before
    the first product is taken, so a singleton only contributes its C3 set and
    every other product comes from combining a non-singleton with the whole
    stored family in both orders. Inserted sets evict the stored sets they
    dominate. When ``stop`` accepts an inserted set the search ends and the
    returned family is marked incomplete.
    """
    if omega is None:
        omega = idempotent_power(semigroup)
    seeds = range(semigroup.size) if seeds is None else _generated(semigroup, seeds)

    singles: Set[int] = set()
    sets: Dict[int, np.ndarray] = {}
    queue = deque()

    def finish(complete: bool) -> SubsetFamily:
        members = tuple(1 << element for element in sorted(singles)) + tuple(sets)
        family = SubsetFamily(size=semigroup.size, members=members, complete=complete)
        logger.info(
            "S† has %d maximal sets, %d of them non-singletons%s",
            len(members),
            len(sets),
            "" if complete else " (stopped early)",
        )
        return family

    def insert(candidate: int) -> bool:
        # every singleton of the generated subsemigroup is already seeded
        if candidate & (candidate - 1) == 0:
            return False
        if candidate in sets or any(candidate & ~member == 0 for member in sets):
            return False
        for member in [member for member in sets if member & ~candidate == 0]:
            del sets[member]
        elements = _elements(candidate)
        singles.difference_update(elements.tolist())
        sets[candidate] = elements
        queue.append(candidate)
        return stop is not None and stop(candidate)

    for element in seeds:
        singles.add(element)
        queue.append(1 << element)
        if stop is not None and stop(1 << element):
            return finish(False)

    rounds = 0
    while queue:
        current = queue.popleft()
        if current & (current - 1) == 0:
            if current.bit_length() - 1 not in singles:
                continue
            candidates = [_idempotent_closure(semigroup, current, omega)]
        else:
            if current not in sets:
                continue
            single_elements = np.fromiter(sorted(singles), dtype=np.intp, count=len(singles))
            members = [single_elements[index : index + 1] for index in range(len(single_elements))]
            members.extend(sets.values())
            hits = _combinations(semigroup, sets[current], members)
            hits = hits[hits.sum(axis=1) > 1]
            candidates = [_idempotent_closure(semigroup, current, omega)]
            if len(hits):
                packed = np.unique(np.packbits(hits, axis=1, bitorder="little"), axis=0)
                stored = np.packbits(_membership(semigroup.size, sets.values()), axis=1, bitorder="little")
                fresh = packed[_undominated(packed, stored)]
                candidates.extend(int.from_bytes(row.tobytes(), "little") for row in fresh)
        rounds += 1
        for candidate in candidates:
            if insert(candidate):
                return finish(False)
        logger.debug("Saturation round %d: %d singletons, %d larger sets stored", rounds, len(singles), len(sets))

    return finish(True)


def find_violating_pair(semigroup: FiniteSemigroup, family: SubsetFamily) -> Optional[SeparationWitness]:
    """First {t₁, t₂} ∈ S† with t₁ ∈ F₁ and t₂ ∈ F₂, scanning both in element order."""
    left_marked, right_marked = semigroup.accepting[0], semigroup.accepting[1]
    for left in sorted(left_marked):
        for right in sorted(right_marked):
            if family.contains((left, right)):
                return SeparationWitness(
                    left_element=left,
                    right_element=right,
                    left_word=semigroup.witnesses[left],
                    right_word=semigroup.witnesses[right],
                )
    return None


def fo_separable(
    left: Dfa, right: Dfa, *, max_states: Optional[int] = None, exhaustive: bool = False
) -> SeparationOutcome:
    """Decide whether an FO(<)-definable language separates L(left) from L(right).

    The transition semigroup of the synchronous product recognizes both
    languages; they are separable iff no pair {t₁, t₂} with t₁ ∈ F₁, t₂ ∈ F₂
    lies in S†.

    Saturation stops at the first stored set meeting both F₁ and F₂ unless
    ``exhaustive`` asks for all of S†.
    """
    left_min = minimize(left)
    right_min = minimize(right)
    product_dfa, left_marks, right_marks = product_with_markings(left_min, right_min, max_states=max_states)
    semigroup = transition_semigroup(product_dfa, markings=(left_marks, right_marks), max_states=max_states)
    omega = idempotent_power(semigroup)
    logger.info(
        "Separation: DFAs of %d and %d states, product %d states, |S| = %d, ω(S) = %d",
        left_min.num_states,
        right_min.num_states,
        product_dfa.num_states,
        semigroup.size,
        omega,
    )
    stop = None
    if not exhaustive:
        left_mask, right_mask = to_mask(semigroup.accepting[0]), to_mask(semigroup.accepting[1])

        def stop(member: int) -> bool:
            return bool(member & left_mask) and bool(member & right_mask)

    family = saturate(semigroup, omega, stop=stop)
    witness = find_violating_pair(semigroup, family)
    return SeparationOutcome(
        separable=witness is None,
        semigroup=semigroup,
        omega=omega,
        family=family,
        left_states=left_min.num_states,
        right_states=right_min.num_states,
        product_states=product_dfa.num_states,
        witness=witness,
    )


def fo_definable(dfa: Dfa, *, max_states: Optional[int] = None) -> bool:
    """L(dfa) is FO(<)-definable iff its syntactic semigroup is aperiodic."""
    return is_aperiodic(syntactic_semigroup(dfa, max_states=max_states))


def fo_definable_by_separation(
    dfa: Dfa, *, max_states: Optional[int] = None, exhaustive: bool = False
) -> SeparationOutcome:
    return fo_separable(dfa, complement(dfa), max_states=max_states, exhaustive=exhaustive)


# --- reports --------------------------------------------------------------------


def _labels(semigroup: FiniteSemigroup, elements) -> List[str]:
    return [element_label(semigroup, element) for element in sorted(elements)]


def build_separation_report(outcome: SeparationOutcome) -> SeparationReport:
    semigroup = outcome.semigroup
    witness = None
    if outcome.witness is not None:
        witness = SeparationWitnessReport(
            left_element=element_label(semigroup, outcome.witness.left_element),
            right_element=element_label(semigroup, outcome.witness.right_element),
            left_word=format_word(outcome.witness.left_word),
            right_word=format_word(outcome.witness.right_word),
        )
    return SeparationReport(
        separable=outcome.separable,
        left_states=outcome.left_states,
        right_states=outcome.right_states,
        product_states=outcome.product_states,
        semigroup_size=semigroup.size,
        omega=outcome.omega,
        complete=outcome.family.complete,
        maximal_members=[_labels(semigroup, members) for members in outcome.family.non_singletons()],
        witness=witness,
    )


def build_definability_report(
    dfa: Dfa, *, explain: bool = False, exhaustive: bool = False, max_states: Optional[int] = None
) -> DefinabilityReport:
    minimal = minimize(dfa)
    semigroup = transition_semigroup(minimal, max_states=max_states)
    counter = None
    found = counter_witness(minimal, max_states=max_states)
    if found is not None:
        word, state, cycle_length = found
        counter = CounterReport(word=format_word(word), state=state, cycle_length=cycle_length)
    separation = None
    if explain:
        separation = build_separation_report(
            fo_definable_by_separation(dfa, max_states=max_states, exhaustive=exhaustive)
        )
    return DefinabilityReport(
        definable=is_aperiodic(semigroup),
        minimal_states=minimal.num_states,
        semigroup_size=semigroup.size,
        omega=idempotent_power(semigroup),
        counter=counter,
        separation=separation,
    )
