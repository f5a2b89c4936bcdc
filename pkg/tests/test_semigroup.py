import random

import numpy as np
import pytest

from app.core.exceptions import StateLimitExceeded
from app.modules.automata.models import Alphabet
from app.modules.automata.service import determinize, enumerate_words, minimize, regex_to_nfa
from app.modules.frontends.automaton_io import read_automaton
from app.modules.frontends.regex import parse_regex
from app.modules.semigroup.service import (
    build_semigroup_report,
    cayley_csv,
    check_associativity,
    element_label,
    idempotent_power,
    idempotents,
    index_period,
    is_aperiodic,
    syntactic_semigroup,
    transition_semigroup,
)

from factories import AB, random_dfa


def labels(semigroup, elements):
    return {element_label(semigroup, element) for element in elements}


@pytest.fixture
def two_pattern_semigroup(fixture_path):
    return transition_semigroup(read_automaton(fixture_path("abab_plus.json")))


@pytest.fixture
def two_block_semigroup(fixture_path):
    dfa = read_automaton(fixture_path("two_block_plus.json"))
    return transition_semigroup(dfa, markings=({3}, {1}))


def test_two_pattern_semigroup_elements(two_pattern_semigroup):
    semigroup = two_pattern_semigroup
    assert semigroup.size == 9
    assert labels(semigroup, range(semigroup.size)) == {
        "δ_a",
        "δ_b",
        "δ_aa",
        "δ_ab",
        "δ_ba",
        "δ_aba",
        "δ_bab",
        "δ_abab",
        "δ_baba",
    }
    assert semigroup.element_of(list("bb")) == semigroup.element_of(list("aa"))
    assert semigroup.element_of(list("ababa")) == semigroup.element_of(["a"])


def test_two_pattern_semigroup_omega(two_pattern_semigroup):
    assert idempotent_power(two_pattern_semigroup) == 2
    assert not is_aperiodic(two_pattern_semigroup)
    assert check_associativity(two_pattern_semigroup)


def test_two_block_omega_is_minimal(two_block_semigroup):
    semigroup = two_block_semigroup
    omega = idempotent_power(semigroup)
    assert omega == 4
    assert omega % 2 == 0
    for element in range(semigroup.size):
        assert semigroup.is_idempotent(semigroup.power(element, omega))
    for smaller in range(1, omega):
        assert not all(semigroup.is_idempotent(semigroup.power(s, smaller)) for s in range(semigroup.size))


def test_two_block_markings(two_block_semigroup):
    semigroup = two_block_semigroup
    plus_marked, tail_marked = semigroup.accepting
    assert labels(semigroup, plus_marked) == {"δ_bba"}
    assert labels(semigroup, tail_marked) == {"δ_b", "δ_bbab"}


def test_index_and_period():
    dfa = minimize(determinize(regex_to_nfa(parse_regex("(aaa)+", ["a"]), Alphabet.of(["a"]))))
    semigroup = transition_semigroup(dfa)
    a = semigroup.element_of(["a"])
    assert index_period(semigroup, a) == (1, 3)
    assert idempotent_power(semigroup) == 3
    assert len(idempotents(semigroup)) == 1


def test_elements_act_like_their_witnesses():
    rng = random.Random(37)
    for _ in range(40):
        dfa = random_dfa(rng, max_states=4)
        semigroup = transition_semigroup(dfa)
        for word in enumerate_words(dfa.alphabet, 4):
            if not word:
                continue
            element = semigroup.element_of(word)
            encoded = dfa.alphabet.encode(word)
            expected = [dfa.run(encoded, state) for state in range(dfa.num_states)]
            assert semigroup.functions[element].tolist() == expected


def test_witnesses_are_shortlex_ordered():
    rng = random.Random(39)
    for _ in range(40):
        semigroup = transition_semigroup(random_dfa(rng, max_states=4))
        lengths = [len(witness) for witness in semigroup.witnesses]
        assert lengths == sorted(lengths)
        for element, witness in enumerate(semigroup.witnesses):
            assert semigroup.element_of(witness) == element


def test_product_reads_left_then_right():
    rng = random.Random(47)
    for _ in range(30):
        semigroup = transition_semigroup(random_dfa(rng, max_states=3))
        for s in range(semigroup.size):
            for t in range(semigroup.size):
                joined = semigroup.witnesses[s] + semigroup.witnesses[t]
                assert semigroup.multiply(s, t) == semigroup.element_of(joined)


def test_associativity_sampled_and_exhaustive_agree():
    rng = random.Random(53)
    for _ in range(20):
        semigroup = transition_semigroup(random_dfa(rng, max_states=4))
        assert check_associativity(semigroup)
        assert check_associativity(semigroup, samples=500)


def test_broken_table_fails_associativity(two_pattern_semigroup):
    semigroup = two_pattern_semigroup
    table = semigroup.table.copy()
    table[0, 0] = (table[0, 0] + 1) % semigroup.size
    broken = type(semigroup)(
        alphabet=semigroup.alphabet,
        table=table,
        generators=semigroup.generators,
        witnesses=semigroup.witnesses,
    )
    assert not check_associativity(broken)


def test_syntactic_semigroup_ignores_redundant_states():
    nfa = regex_to_nfa(parse_regex("(abab)+", AB.letters), AB)
    unminimized = determinize(nfa)
    assert syntactic_semigroup(unminimized).size == transition_semigroup(minimize(unminimized)).size


def test_semigroup_state_limit(fixture_path):
    with pytest.raises(StateLimitExceeded):
        transition_semigroup(read_automaton(fixture_path("abab_plus.json")), max_states=5)


def test_power_matches_repeated_product(two_block_semigroup):
    semigroup = two_block_semigroup
    for element in range(semigroup.size):
        current = element
        for exponent in range(1, 7):
            assert semigroup.power(element, exponent) == current
            current = semigroup.multiply(current, element)


def test_cayley_csv_layout(two_pattern_semigroup):
    rows = cayley_csv(two_pattern_semigroup).splitlines()
    assert len(rows) == two_pattern_semigroup.size + 1
    assert rows[0].split(",")[:3] == ["·", "δ_a", "δ_b"]
    assert rows[1].split(",")[:2] == ["δ_a", "δ_aa"]


def test_semigroup_report(two_pattern_semigroup):
    report = build_semigroup_report(two_pattern_semigroup, include_table=True)
    assert report.size == 9
    assert report.omega == 2
    assert report.aperiodic is False
    assert report.associative is True
    assert report.generators == {"a": "δ_a", "b": "δ_b"}
    accepting = [element.label for element in report.elements if element.accepting]
    assert accepting == ["δ_abab"]
    assert report.cayley_csv is not None
    assert build_semigroup_report(two_pattern_semigroup).cayley_csv is None


def test_table_is_numpy_int_matrix(two_pattern_semigroup):
    assert isinstance(two_pattern_semigroup.table, np.ndarray)
    assert two_pattern_semigroup.table.shape == (9, 9)
