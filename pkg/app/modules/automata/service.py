import enum
import itertools
import logging
from collections import deque
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from app.core.config import settings
from app.core.exceptions import StateLimitExceeded, resolve_limit
from app.modules.frontends.letters import letter_name
from app.modules.frontends.regex import Concat, Letter, Regex, Star, Union

from .models import Alphabet, AlphabetMismatchError, Automaton, Dfa, Nfa

logger = logging.getLogger(__name__)


class ProductMode(str, enum.Enum):
    INTERSECTION = "intersection"
    UNION = "union"
    DIFFERENCE = "difference"


# --- regular expressions -------------------------------------------------------


def _glushkov(regex: Regex, positions: List[str]):
    """Return (nullable, first, last, follow) for ``regex``; extends ``positions``."""
    if isinstance(regex, Letter):
        positions.append(regex.name)
        index = len(positions)
        return False, {index}, {index}, {}
    if isinstance(regex, Union):
        nullable, first, last, follow = False, set(), set(), {}
        for option in regex.options:
            sub_nullable, sub_first, sub_last, sub_follow = _glushkov(option, positions)
            nullable = nullable or sub_nullable
            first |= sub_first
            last |= sub_last
            _merge_follow(follow, sub_follow)
        return nullable, first, last, follow
    if isinstance(regex, Concat):
        nullable, first, last, follow = True, set(), set(), {}
        for part in regex.parts:
            sub_nullable, sub_first, sub_last, sub_follow = _glushkov(part, positions)
            _merge_follow(follow, sub_follow)
            for position in last:
                follow.setdefault(position, set()).update(sub_first)
            if nullable:
                first |= sub_first
            last = last | sub_last if sub_nullable else set(sub_last)
            nullable = nullable and sub_nullable
        return nullable, first, last, follow
    nullable, first, last, follow = _glushkov(regex.operand, positions)
    for position in last:
        follow.setdefault(position, set()).update(first)
    if isinstance(regex, Star):
        nullable = True
    return nullable, first, last, follow


def _merge_follow(into: Dict[int, set], other: Dict[int, set]) -> None:
    for position, targets in other.items():
        into.setdefault(position, set()).update(targets)


def regex_to_nfa(regex: Regex, alphabet: Alphabet) -> Nfa:
    """Position (Glushkov) automaton of ``regex``; the empty word is dropped.

    State 0 is the initial state, state i is the i-th letter occurrence.
    """
    positions: List[str] = []
    _nullable, first, last, follow = _glushkov(regex, positions)
    letters = [alphabet.index(name) for name in positions]
    transitions = {(0, letters[target - 1], target) for target in first}
    for source, targets in follow.items():
        transitions.update((source, letters[target - 1], target) for target in targets)
    return Nfa(
        alphabet=alphabet,
        num_states=len(positions) + 1,
        initial=frozenset({0}),
        accepting=frozenset(last),
        transitions=frozenset(transitions),
    )


# --- determinization and minimization ------------------------------------------


def determinize(nfa: Automaton, *, max_states: Optional[int] = None) -> Dfa:
    """Subset construction, breadth-first by letter index; the empty subset is the sink."""
    if isinstance(nfa, Dfa):
        return nfa
    limit = resolve_limit(max_states)
    start = frozenset(nfa.initial)
    ids: Dict[FrozenSet[int], int] = {start: 0}
    order = [start]
    delta: List[Tuple[int, ...]] = []
    queue = deque([start])
    while queue:
        subset = queue.popleft()
        row = []
        for letter in range(len(nfa.alphabet)):
            target = nfa.step(subset, letter)
            if target not in ids:
                if len(ids) >= limit:
                    raise StateLimitExceeded("subset construction", limit)
                ids[target] = len(order)
                order.append(target)
                queue.append(target)
            row.append(ids[target])
        delta.append(tuple(row))
    accepting = frozenset(index for index, subset in enumerate(order) if subset & nfa.accepting)
    logger.debug("Determinized %d NFA states into %d DFA states", nfa.num_states, len(order))
    return Dfa(nfa.alphabet, len(order), 0, accepting, tuple(delta))


def _reachable(dfa: Dfa) -> List[int]:
    seen = {dfa.initial}
    order = [dfa.initial]
    queue = deque(order)
    while queue:
        state = queue.popleft()
        for target in dfa.delta[state]:
            if target not in seen:
                seen.add(target)
                order.append(target)
                queue.append(target)
    return order


def _detach_initial(dfa: Dfa) -> Dfa:
    """Give an accepting initial state a non-accepting copy to start from.

    Only nonempty words count, so the state a run starts in must not carry the
    acceptance of the state it re-enters.
    """
    if dfa.initial not in dfa.accepting:
        return dfa
    fresh = dfa.num_states
    return Dfa(
        alphabet=dfa.alphabet,
        num_states=dfa.num_states + 1,
        initial=fresh,
        accepting=dfa.accepting,
        delta=dfa.delta + (dfa.delta[dfa.initial],),
    )


def _renumber(dfa: Dfa, states: Sequence[int], block_of: Dict[int, int]) -> Dfa:
    """Canonical numbering: breadth-first from the initial block, letters in order."""
    representative: Dict[int, int] = {}
    for state in states:
        representative.setdefault(block_of[state], state)
    numbering = {block_of[dfa.initial]: 0}
    order = [block_of[dfa.initial]]
    queue = deque(order)
    while queue:
        block = queue.popleft()
        for target in dfa.delta[representative[block]]:
            target_block = block_of[target]
            if target_block not in numbering:
                numbering[target_block] = len(order)
                order.append(target_block)
                queue.append(target_block)
    delta = tuple(
        tuple(numbering[block_of[target]] for target in dfa.delta[representative[block]])
        for block in order
    )
    accepting = frozenset(numbering[block] for block in order if representative[block] in dfa.accepting)
    return Dfa(dfa.alphabet, len(order), 0, accepting, delta)


def minimize(dfa: Dfa) -> Dfa:
    """Moore partition refinement followed by canonical renumbering.

    Equal languages (within A^+) over the same alphabet give equal ``Dfa`` values.
    """
    dfa = _detach_initial(dfa)
    states = _reachable(dfa)
    block_of = {state: int(state in dfa.accepting) for state in states}
    block_count = len(set(block_of.values()))
    while True:
        signatures: Dict[tuple, int] = {}
        refined = {}
        for state in states:
            signature = (block_of[state],) + tuple(block_of[target] for target in dfa.delta[state])
            refined[state] = signatures.setdefault(signature, len(signatures))
        block_of = refined
        if len(signatures) == block_count:
            break
        block_count = len(signatures)
    minimal = _renumber(dfa, states, block_of)
    logger.debug("Minimized %d states to %d", dfa.num_states, minimal.num_states)
    return minimal


# --- Boolean operations -------------------------------------------------------------


def _check_alphabets(left: Alphabet, right: Alphabet) -> None:
    if left != right:
        raise AlphabetMismatchError(left, right)


def product_with_markings(
    left: Dfa, right: Dfa, *, max_states: Optional[int] = None
) -> Tuple[Dfa, FrozenSet[int], FrozenSet[int]]:
    """Synchronous product over reachable pairs.

    Returns the product (accepting set = intersection) together with the states
    whose left, respectively right, component is accepting.
    """
    _check_alphabets(left.alphabet, right.alphabet)
    limit = resolve_limit(max_states)
    start = (left.initial, right.initial)
    ids = {start: 0}
    order = [start]
    delta = []
    queue = deque(order)
    while queue:
        pair = queue.popleft()
        row = []
        for letter in range(len(left.alphabet)):
            target = (left.delta[pair[0]][letter], right.delta[pair[1]][letter])
            if target not in ids:
                if len(ids) >= limit:
                    raise StateLimitExceeded("product construction", limit)
                ids[target] = len(order)
                order.append(target)
                queue.append(target)
            row.append(ids[target])
        delta.append(tuple(row))
    left_marks = frozenset(index for index, pair in enumerate(order) if pair[0] in left.accepting)
    right_marks = frozenset(index for index, pair in enumerate(order) if pair[1] in right.accepting)
    product_dfa = Dfa(left.alphabet, len(order), 0, left_marks & right_marks, tuple(delta))
    logger.debug("Product of %d x %d states has %d reachable pairs", left.num_states, right.num_states, len(order))
    return product_dfa, left_marks, right_marks


def product(
    left: Dfa,
    right: Dfa,
    mode: ProductMode = ProductMode.INTERSECTION,
    *,
    max_states: Optional[int] = None,
) -> Dfa:
    product_dfa, left_marks, right_marks = product_with_markings(left, right, max_states=max_states)
    mode = ProductMode(mode)
    if mode is ProductMode.INTERSECTION:
        accepting = left_marks & right_marks
    elif mode is ProductMode.UNION:
        accepting = left_marks | right_marks
    else:
        accepting = left_marks - right_marks
    return Dfa(product_dfa.alphabet, product_dfa.num_states, 0, accepting, product_dfa.delta)


def complement(dfa: Dfa) -> Dfa:
    """A^+ minus L(dfa)."""
    return Dfa(
        dfa.alphabet,
        dfa.num_states,
        dfa.initial,
        frozenset(range(dfa.num_states)) - dfa.accepting,
        dfa.delta,
    )


# --- alphabet changes ------------------------------------------------------------------


def project(nfa: Automaton, keep: Iterable[str]) -> Nfa:
    """Restrict every letter to ``keep``; the alphabet becomes 2^keep."""
    nfa = nfa.to_nfa()
    keep = frozenset(keep)
    target_alphabet = Alphabet.powerset(keep)
    mapping = [target_alphabet.index(letter_name(letter & keep)) for letter in nfa.alphabet.variable_sets]
    return Nfa(
        alphabet=target_alphabet,
        num_states=nfa.num_states,
        initial=nfa.initial,
        accepting=nfa.accepting,
        transitions=frozenset((source, mapping[letter], target) for source, letter, target in nfa.transitions),
    )


def extend_alphabet(nfa: Automaton, variables: Iterable[str]) -> Nfa:
    """Cylindrify over 2^(vars ∪ variables): new variables are unconstrained.

    Each old letter ``a`` is replaced by every new letter ``b`` with
    ``b ∩ vars = a``.
    """
    nfa = nfa.to_nfa()
    old_variables = nfa.alphabet.variables
    target_alphabet = Alphabet.powerset(old_variables | frozenset(variables))
    preimage: Dict[int, List[int]] = {}
    for new_index, letter in enumerate(target_alphabet.variable_sets):
        old_index = nfa.alphabet.position(letter_name(letter & old_variables))
        if old_index is not None:
            preimage.setdefault(old_index, []).append(new_index)
    return Nfa(
        alphabet=target_alphabet,
        num_states=nfa.num_states,
        initial=nfa.initial,
        accepting=nfa.accepting,
        transitions=frozenset(
            (source, new_letter, target)
            for source, letter, target in nfa.transitions
            for new_letter in preimage.get(letter, ())
        ),
    )


# --- membership and emptiness -------------------------------------------------------


def accepts(automaton: Automaton, word: Sequence[str]) -> bool:
    """Membership under the A^+ convention: the empty word is always rejected."""
    if not word:
        return False
    encoded = automaton.alphabet.encode(word)
    if isinstance(automaton, Dfa):
        return automaton.run(encoded) in automaton.accepting
    states = frozenset(automaton.initial)
    for letter in encoded:
        states = automaton.step(states, letter)
        if not states:
            return False
    return bool(states & automaton.accepting)


def shortest_word(automaton: Automaton) -> Optional[Tuple[str, ...]]:
    """Shortlex-least accepted nonempty word, or ``None`` for the empty language."""
    nfa = automaton.to_nfa()
    parents: Dict[int, Tuple[Optional[int], int]] = {}
    queue = deque()
    # States reached by one letter seed the search; the initial set itself is not a word.
    for letter in range(len(nfa.alphabet)):
        for state in sorted(nfa.step(nfa.initial, letter)):
            if state not in parents:
                parents[state] = (None, letter)
                queue.append(state)
    while queue:
        state = queue.popleft()
        if state in nfa.accepting:
            return nfa.alphabet.decode(_trace(parents, state))
        for letter in range(len(nfa.alphabet)):
            for target in sorted(nfa.successors[state][letter]):
                if target not in parents:
                    parents[target] = (state, letter)
                    queue.append(target)
    return None


def _trace(parents: Dict[int, Tuple[Optional[int], int]], state: int) -> List[int]:
    letters = []
    current: Optional[int] = state
    while current is not None:
        previous, letter = parents[current]
        letters.append(letter)
        current = previous
    return letters[::-1]


def is_empty(automaton: Automaton) -> bool:
    return shortest_word(automaton) is None


def enumerate_words(alphabet: Alphabet, max_length: Optional[int] = None) -> Iterator[Tuple[str, ...]]:
    """All nonempty words up to ``max_length`` (default WORD_ENUMERATION_LIMIT) in shortlex order."""
    if max_length is None:
        max_length = settings.WORD_ENUMERATION_LIMIT
    for length in range(1, max_length + 1):
        yield from itertools.product(alphabet.letters, repeat=length)


def as_dfa(automaton: Automaton, *, max_states: Optional[int] = None) -> Dfa:
    return automaton if isinstance(automaton, Dfa) else determinize(automaton, max_states=max_states)


# --- counter-freeness ---------------------------------------------------------------


def is_counter_free(dfa: Dfa, *, max_states: Optional[int] = None) -> bool:
    """True iff no δ_w has a non-trivial cycle, i.e. the transition semigroup is aperiodic."""
    from app.modules.semigroup.service import is_aperiodic, transition_semigroup

    return is_aperiodic(transition_semigroup(dfa, markings=(), max_states=max_states))


def counter_witness(dfa: Dfa, *, max_states: Optional[int] = None) -> Optional[Tuple[Tuple[str, ...], int, int]]:
    """A counter ``(w, q, n)``: δ_w(q) ≠ q and δ_{w^n}(q) = q with n > 1.

    Derived from an element of period > 1 in the transition semigroup; ``None``
    when the DFA is counter-free.
    """
    from app.modules.semigroup.service import index_period, transition_semigroup

    semigroup = transition_semigroup(dfa, markings=(), max_states=max_states)
    for element in range(semigroup.size):
        index, period = index_period(semigroup, element)
        if period == 1:
            continue
        # with k >= index and period | k, t = s^(k+1) satisfies t^(period+1) = t != t^2
        k = period * -(-index // period)
        word = semigroup.witnesses[element] * (k + 1)
        encoded = dfa.alphabet.encode(word)
        for state in range(dfa.num_states):
            image = dfa.run(encoded, state)
            if image != state and _returns(dfa, encoded, state, period):
                return word, state, period
    return None


def _returns(dfa: Dfa, encoded: Sequence[int], state: int, period: int) -> bool:
    current = state
    for _ in range(period):
        current = dfa.run(encoded, current)
    return current == state
