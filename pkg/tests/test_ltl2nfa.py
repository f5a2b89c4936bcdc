import random

import pytest

from app.core.exceptions import StateLimitExceeded
from app.modules.automata.service import (
    ProductMode,
    accepts,
    complement,
    determinize,
    enumerate_words,
    extend_alphabet,
    is_empty,
    product,
)
from app.modules.frontends.letters import parse_letter_name
from app.modules.frontends.ltl import Not
from app.modules.frontends.ltl_parser import parse_ltl
from app.modules.ltl2nfa.service import closure, desugar, ltl_to_nfa
from app.modules.ltl_semantics.models import TemporalModel
from app.modules.ltl_semantics.service import evaluate

from factories import random_formula

PARITY_PREMISE = "p & G((p & X true) <-> X !p) & F(!p & !X true)"


def word(*letters):
    return list(letters)


def check_against_evaluator(formula, variables, max_length):
    dfa = determinize(extend_alphabet(ltl_to_nfa(formula), variables))
    for letters in enumerate_words(dfa.alphabet, max_length):
        model = TemporalModel.from_word([parse_letter_name(name) for name in letters], variables)
        assert accepts(dfa, letters) is evaluate(model, 0, formula), (formula, letters)


def test_single_variable_formula():
    nfa = ltl_to_nfa(parse_ltl("p"))
    assert nfa.alphabet.letters == ("{}", "{p}")
    for letters in enumerate_words(nfa.alphabet, 4):
        assert accepts(nfa, letters) is (letters[0] == "{p}")


def test_parity_premise_automaton():
    nfa = ltl_to_nfa(parse_ltl(PARITY_PREMISE))
    assert accepts(nfa, word("{p}", "{}"))
    assert accepts(nfa, word("{p}", "{}", "{p}", "{}"))
    assert not accepts(nfa, word("{p}"))
    assert not accepts(nfa, word("{p}", "{}", "{p}"))


def test_next_true_needs_two_positions():
    nfa = ltl_to_nfa(parse_ltl("X true"))
    assert nfa.alphabet.letters == ("{}",)
    assert not accepts(nfa, word("{}"))
    assert accepts(nfa, word("{}", "{}"))
    assert accepts(nfa, word("{}", "{}", "{}"))


def test_constants():
    assert is_empty(ltl_to_nfa(parse_ltl("false")))
    nfa = ltl_to_nfa(parse_ltl("true"))
    assert accepts(nfa, word("{}"))


def test_desugar_removes_implication_and_global():
    core = desugar(parse_ltl("(p -> q) <-> G p"))
    text = repr(core)
    assert "Implies" not in text
    assert "Iff" not in text
    assert "GlobalRefl" not in text
    assert desugar(parse_ltl("!!p")) == parse_ltl("p")


def test_state_count_bound():
    rng = random.Random(41)
    for _ in range(100):
        formula = random_formula(rng, 3)
        cl = closure(formula)
        nfa = ltl_to_nfa(formula)
        assert nfa.num_states <= 2 ** len(cl.elementary) + 1


def test_state_limit_guards_atom_enumeration():
    with pytest.raises(StateLimitExceeded):
        ltl_to_nfa(parse_ltl("p U (q U (X r & F s))"), max_states=8)


def test_compilation_agrees_with_evaluator():
    rng = random.Random(1)
    for _ in range(300):
        check_against_evaluator(random_formula(rng, 3), ["p", "q"], 4)


@pytest.mark.slow
def test_compilation_agrees_with_evaluator_on_longer_words():
    rng = random.Random(2)
    for _ in range(300):
        check_against_evaluator(random_formula(rng, 3), ["p", "q"], 6)


def test_negation_complements_language():
    rng = random.Random(43)
    for _ in range(60):
        formula = random_formula(rng, 2)
        positive = determinize(extend_alphabet(ltl_to_nfa(formula), ["p", "q"]))
        negative = determinize(extend_alphabet(ltl_to_nfa(Not(formula)), ["p", "q"]))
        assert is_empty(product(positive, negative, ProductMode.INTERSECTION))
        assert is_empty(product(complement(positive), complement(negative), ProductMode.INTERSECTION))
