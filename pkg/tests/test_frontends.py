import io
import json
import random

import pytest

from app.modules.automata.models import Dfa, Nfa
from app.modules.automata.service import accepts, regex_to_nfa
from app.modules.automata.models import Alphabet
from app.modules.frontends.automaton_io import (
    AutomatonFormatError,
    parse_automaton,
    read_automaton,
    write_automaton,
)
from app.modules.frontends.letters import LetterError, format_word, letter_name, parse_letter_name, parse_word
from app.modules.frontends.ltl import (
    FALSE,
    And,
    Eventually,
    GlobalRefl,
    Iff,
    Implies,
    Next,
    Not,
    Or,
    TrueFormula,
    Until,
    Var,
    print_ltl,
)
from app.modules.frontends.ltl_parser import LtlSyntaxError, parse_ltl
from app.modules.frontends.regex import Concat, Letter, Plus, RegexSyntaxError, Star, Union, parse_regex, print_regex

from factories import random_formula

PARITY_PREMISE = "p & G((p & X true) <-> X !p) & F(!p & !X true)"


# --- LTL ---------------------------------------------------------------------------------


def test_parse_ltl_conjunction_with_eventually():
    assert parse_ltl("p & F q") == And(Var("p"), Eventually(Var("q")))


def test_parse_ltl_parity_premise():
    p = Var("p")
    body = Iff(And(p, Next(TrueFormula())), Next(Not(p)))
    last_is_not_p = Eventually(And(Not(p), Not(Next(TrueFormula()))))
    assert parse_ltl(PARITY_PREMISE) == And(And(p, GlobalRefl(body)), last_is_not_p)


def test_parse_ltl_reports_end_of_input():
    with pytest.raises(LtlSyntaxError) as excinfo:
        parse_ltl("p U")
    assert excinfo.value.position == 3


def test_parse_ltl_rejects_unknown_token():
    with pytest.raises(LtlSyntaxError) as excinfo:
        parse_ltl("p # q")
    assert excinfo.value.position == 2


def test_parse_ltl_precedence_and_associativity():
    assert parse_ltl("a -> b -> c") == Implies(Var("a"), Implies(Var("b"), Var("c")))
    assert parse_ltl("a | b & c") == Or(Var("a"), And(Var("b"), Var("c")))
    assert parse_ltl("a U b U c") == Until(Var("a"), Until(Var("b"), Var("c")))
    assert parse_ltl("!a U b") == Until(Not(Var("a")), Var("b"))
    assert parse_ltl("a <-> b | c") == Iff(Var("a"), Or(Var("b"), Var("c")))


def test_parse_ltl_false_is_sugar():
    assert parse_ltl("false") == FALSE == Not(TrueFormula())


def test_parse_ltl_identifiers_starting_with_keywords():
    assert parse_ltl("Xp & Fq") == And(Var("Xp"), Var("Fq"))
    assert parse_ltl("X p") == Next(Var("p"))


def test_print_ltl_round_trips_random_formulas():
    rng = random.Random(7)
    for _ in range(200):
        formula = random_formula(rng, depth=4, variables=("p", "q", "r"))
        assert parse_ltl(print_ltl(formula)) == formula


# --- regular expressions ------------------------------------------------------------------


def test_parse_regex_single_block():
    abab = Concat((Letter("a"), Letter("b"), Letter("a"), Letter("b")))
    assert parse_regex("(abab)+", ["a", "b"]) == Plus(abab)


def test_parse_regex_nested_blocks():
    aa_star = Star(Concat((Letter("a"), Letter("a"))))
    expected = Plus(Concat((Letter("b"), aa_star, Letter("b"), aa_star, Letter("a"))))
    assert parse_regex("(b(aa)*b(aa)*a)+", ["a", "b"]) == expected


def test_parse_regex_rejects_empty_union_operand():
    with pytest.raises(RegexSyntaxError):
        parse_regex("a||b", ["a", "b"])


def test_parse_regex_rejects_unknown_letter():
    with pytest.raises(RegexSyntaxError) as excinfo:
        parse_regex("ac", ["a", "b"])
    assert "not in the alphabet" in str(excinfo.value)
    assert excinfo.value.position == 1


def test_parse_regex_multi_character_letters():
    regex = parse_regex("({p}{})+", ["{}", "{p}"])
    assert regex == Plus(Concat((Letter("{p}"), Letter("{}"))))


def test_print_regex_round_trips():
    for text in ["(abab)+", "(b(aa)*b(aa)*a)* b(aa)*", "a|b|ab", "(a|b)(a|ba)*", "((a|b)|a)b+"]:
        regex = parse_regex(text, ["a", "b"])
        assert parse_regex(print_regex(regex), ["a", "b"]) == regex
    names = ["{}", "{p}"]
    regex = parse_regex("({p}|{}{p})+", names)
    assert parse_regex(print_regex(regex), names) == regex
    assert isinstance(parse_regex("a|b", ["a", "b"]), Union)


# --- letters and words -------------------------------------------------------------------


def test_letter_names_are_sorted_sets():
    assert letter_name({"q", "p"}) == "{p,q}"
    assert letter_name(set()) == "{}"
    assert parse_letter_name("{ q , p }") == frozenset({"p", "q"})


def test_parse_word_literal():
    assert parse_word("{p};{};{p};{}") == (frozenset({"p"}), frozenset(), frozenset({"p"}), frozenset())
    with pytest.raises(LetterError):
        parse_word("{p};q")
    with pytest.raises(LetterError):
        parse_word("")


def test_format_word_picks_separator():
    assert format_word(("a", "b", "a")) == "aba"
    assert format_word(("{p}", "{}")) == "{p};{}"
    assert format_word((frozenset({"p"}), frozenset())) == "{p};{}"


# --- automaton documents -----------------------------------------------------------------


def test_two_pattern_dfa_round_trips(fixture_path):
    dfa = read_automaton(fixture_path("abab_plus.json"))
    assert isinstance(dfa, Dfa)
    assert dfa.num_states == 10
    assert read_automaton(write_automaton(dfa)) == dfa
    assert accepts(dfa, list("abab"))
    assert not accepts(dfa, list("ab"))


def test_single_state_automaton_round_trips():
    nfa = Nfa(Alphabet.of(["a"]), 1, frozenset({0}), frozenset(), frozenset())
    assert read_automaton(write_automaton(nfa)) == nfa


def test_nfa_round_trips_from_stream():
    alphabet = Alphabet.of(["a", "b"])
    nfa = regex_to_nfa(parse_regex("(ab|b)*a", alphabet.letters), alphabet)
    assert read_automaton(io.BytesIO(write_automaton(nfa))) == nfa


def test_missing_initial_is_rejected():
    document = {"kind": "nfa", "alphabet": ["a"], "states": 1, "accepting": [0], "transitions": []}
    with pytest.raises(AutomatonFormatError) as excinfo:
        parse_automaton(json.dumps(document))
    assert "initial" in str(excinfo.value)


def test_unknown_letter_and_state_are_rejected():
    base = {"kind": "nfa", "alphabet": ["a"], "states": 2, "initial": [0], "accepting": [1]}
    with pytest.raises(AutomatonFormatError):
        parse_automaton(json.dumps({**base, "transitions": [[0, "b", 1]]}))
    with pytest.raises(AutomatonFormatError):
        parse_automaton(json.dumps({**base, "transitions": [[0, "a", 2]]}))


def test_dfa_needs_single_initial_state():
    document = {"kind": "dfa", "alphabet": ["a"], "states": 2, "initial": [0, 1], "transitions": []}
    with pytest.raises(AutomatonFormatError):
        parse_automaton(json.dumps(document))


def test_partial_dfa_is_totalized_with_sink():
    document = {
        "kind": "dfa",
        "alphabet": ["a", "b"],
        "states": 2,
        "initial": [0],
        "accepting": [1],
        "transitions": [[0, "a", 1]],
    }
    dfa = parse_automaton(json.dumps(document))
    assert dfa.num_states == 3
    assert dfa.delta == ((1, 2), (2, 2), (2, 2))
    assert accepts(dfa, ["a"])
    assert not accepts(dfa, ["a", "a"])


def test_missing_file_is_a_format_error(tmp_path):
    with pytest.raises(AutomatonFormatError):
        read_automaton(tmp_path / "missing.json")
