import csv
import io
import logging
import math
import random
from typing import AbstractSet, Dict, List, Optional, Sequence, Tuple

import numpy as np

from app.core.exceptions import StateLimitExceeded, resolve_limit
from app.modules.automata.models import Dfa
from app.modules.automata.service import minimize
from app.modules.frontends.letters import format_word

from .models import FiniteSemigroup
from .schemas import ElementReport, SemigroupReport

logger = logging.getLogger(__name__)


def transition_semigroup(
    dfa: Dfa,
    markings: Optional[Sequence[AbstractSet[int]]] = None,
    *,
    max_states: Optional[int] = None,
) -> FiniteSemigroup:
    """The semigroup of functions δ_w, w ∈ A^+, closed breadth-first from the letters.

    Elements are numbered in discovery order, so each element's witness is the
    shortlex-least word inducing it. ``markings`` are sets of DFA states; each
    yields F = {δ_w : δ_w(initial) ∈ marking}. ``None`` marks the DFA's own
    accepting set.
    """
    limit = resolve_limit(max_states)
    if markings is None:
        markings = (dfa.accepting,)
    letter_functions = np.asarray(dfa.delta, dtype=np.int32).T.copy()  # [letter, state]

    functions: List[np.ndarray] = []
    witnesses: List[Tuple[str, ...]] = []
    index: Dict[bytes, int] = {}

    def discover(function: np.ndarray, word: Tuple[str, ...]) -> int:
        key = function.tobytes()
        found = index.get(key)
        if found is not None:
            return found
        if len(functions) >= limit:
            raise StateLimitExceeded("semigroup closure", limit)
        index[key] = len(functions)
        functions.append(function)
        witnesses.append(word)
        return index[key]

    generators = tuple(
        discover(letter_functions[letter], (name,)) for letter, name in enumerate(dfa.alphabet.letters)
    )
    # right[s, a] = s·α(a); each element is right[parent, letter] of the element it was reached from
    origins: Dict[int, Tuple[Optional[int], int]] = {}
    for letter, generator in enumerate(generators):
        origins.setdefault(generator, (None, letter))
    right_rows: List[List[int]] = []
    cursor = 0
    while cursor < len(functions):
        current = functions[cursor]
        word = witnesses[cursor]
        row = []
        for letter, name in enumerate(dfa.alphabet.letters):
            # read the element's word, then the letter
            found = discover(letter_functions[letter][current], word + (name,))
            origins.setdefault(found, (cursor, letter))
            row.append(found)
        right_rows.append(row)
        cursor += 1

    packed = np.stack(functions)
    size = len(functions)
    right = np.asarray(right_rows, dtype=np.int32).reshape(size, len(dfa.alphabet.letters))
    table = np.empty((size, size), dtype=np.int32)
    for element in range(size):
        parent, letter = origins[element]
        table[:, element] = right[:, letter] if parent is None else right[table[:, parent], letter]

    images = packed[:, dfa.initial]
    accepting = tuple(
        frozenset(int(element) for element in np.flatnonzero(np.isin(images, sorted(marking))))
        for marking in markings
    )
    logger.info("Transition semigroup of a %d-state DFA has %d elements", dfa.num_states, size)
    return FiniteSemigroup(
        alphabet=dfa.alphabet,
        table=table,
        generators=generators,
        witnesses=tuple(witnesses),
        accepting=accepting,
        functions=packed,
    )


def syntactic_semigroup(dfa: Dfa, *, max_states: Optional[int] = None) -> FiniteSemigroup:
    return transition_semigroup(minimize(dfa), max_states=max_states)


def index_period(semigroup: FiniteSemigroup, element: int) -> Tuple[int, int]:
    """(index, period) of the sequence s, s², s³, …: s^index = s^(index+period)."""
    seen: Dict[int, int] = {}
    current = element
    exponent = 1
    while current not in seen:
        seen[current] = exponent
        current = semigroup.multiply(current, element)
        exponent += 1
    first = seen[current]
    return first, exponent - first


def idempotent_power(semigroup: FiniteSemigroup) -> int:
    """ω(S): the least n with s^n idempotent for every s.

    The smallest multiple of the lcm of all periods that is at least every index.
    """
    max_index = 1
    periods = 1
    for element in range(semigroup.size):
        index, period = index_period(semigroup, element)
        max_index = max(max_index, index)
        periods = math.lcm(periods, period)
    return periods * -(-max_index // periods)


def is_aperiodic(semigroup: FiniteSemigroup) -> bool:
    return all(index_period(semigroup, element)[1] == 1 for element in range(semigroup.size))


def idempotents(semigroup: FiniteSemigroup) -> List[int]:
    return [element for element in range(semigroup.size) if semigroup.is_idempotent(element)]


def check_associativity(semigroup: FiniteSemigroup, *, samples: Optional[int] = None, seed: int = 0) -> bool:
    """Exhaustive up to 200 elements, ``samples`` random triples above (default 20 000)."""
    rows = semigroup.rows
    size = semigroup.size
    if size <= 200 and samples is None:
        table = semigroup.table
        left_first = table[table, :]  # [s, t, u] = (s·t)·u
        right_first = table[:, table]  # [s, t, u] = s·(t·u)
        return bool(np.array_equal(left_first, right_first))
    rng = random.Random(seed)
    for _ in range(samples or 20000):
        s, t, u = rng.randrange(size), rng.randrange(size), rng.randrange(size)
        if rows[rows[s][t]][u] != rows[s][rows[t][u]]:
            return False
    return True


def element_label(semigroup: FiniteSemigroup, element: int) -> str:
    """``δ_<witness>`` as used in reports."""
    return "δ_" + format_word(semigroup.witnesses[element])


def cayley_csv(semigroup: FiniteSemigroup) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    labels = [element_label(semigroup, element) for element in range(semigroup.size)]
    writer.writerow(["·"] + labels)
    for element, row in enumerate(semigroup.rows):
        writer.writerow([labels[element]] + [labels[product] for product in row])
    return buffer.getvalue()


def build_semigroup_report(semigroup: FiniteSemigroup, *, include_table: bool = False) -> SemigroupReport:
    marked = semigroup.accepting[0] if semigroup.accepting else frozenset()
    elements = []
    for element in range(semigroup.size):
        index, period = index_period(semigroup, element)
        elements.append(
            ElementReport(
                id=element,
                label=element_label(semigroup, element),
                word=format_word(semigroup.witnesses[element]),
                idempotent=semigroup.is_idempotent(element),
                index=index,
                period=period,
                accepting=element in marked,
            )
        )
    return SemigroupReport(
        size=semigroup.size,
        omega=idempotent_power(semigroup),
        aperiodic=is_aperiodic(semigroup),
        associative=check_associativity(semigroup),
        generators={
            letter: element_label(semigroup, semigroup.generators[position])
            for position, letter in enumerate(semigroup.alphabet.letters)
        },
        elements=elements,
        cayley_csv=cayley_csv(semigroup) if include_table else None,
    )
