import json

from app.cli import EXIT_ERROR, EXIT_NEGATIVE, EXIT_POSITIVE, _csv, main
from app.modules.frontends.automaton_io import read_automaton


def test_sep_two_patterns(capsys):
    code = main(["sep", "--regex", "(abab)+", "--regex", "(baba)+", "--alphabet", "a,b"])
    assert code == EXIT_POSITIVE
    assert capsys.readouterr().out.strip() == "separable"


def test_sep_over_variable_set_letters(capsys):
    code = main(["sep", "--regex", "{p}+", "--regex", "{p,q}+", "--alphabet", "{p},{p,q}"])
    assert code == EXIT_POSITIVE
    assert capsys.readouterr().out.strip() == "separable"


def test_list_arguments_keep_commas_inside_letters():
    assert _csv("{p}, {p,q},{}") == ["{p}", "{p,q}", "{}"]
    assert _csv("a,b,") == ["a", "b"]
    assert _csv("p,q") == ["p", "q"]


def test_sep_two_blocks_from_files(capsys, fixture_path):
    code = main(
        [
            "sep",
            "--aut",
            str(fixture_path("two_block_plus.json")),
            "--aut",
            str(fixture_path("two_block_tail.json")),
            "--explain",
        ]
    )
    out = capsys.readouterr().out
    assert code == EXIT_NEGATIVE
    assert out.splitlines()[0] == "not separable"
    assert "violating pair" in out


def test_sep_json_report(capsys):
    code = main(["sep", "--regex", "(ab)+", "--regex", "(ba)+", "--alphabet", "a,b", "--json"])
    report = json.loads(capsys.readouterr().out)
    assert code == EXIT_POSITIVE
    assert report["separable"] is True


def test_defin(capsys):
    assert main(["defin", "--regex", "(ab)+", "--alphabet", "a,b"]) == EXIT_POSITIVE
    assert capsys.readouterr().out.strip() == "definable"
    assert main(["defin", "--regex", "(abab)+", "--alphabet", "a,b", "--explain"]) == EXIT_NEGATIVE
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "not definable"
    assert "counter:" in out


def test_iep(capsys):
    assert main(["iep", "p & F p", "p & F p"]) == EXIT_POSITIVE
    assert capsys.readouterr().out.splitlines()[0] == "interpolant exists"
    premise = "p & G((p & X true) <-> X !p) & F(!p & !X true)"
    conclusion = "q & G((q & X true) <-> X !q) -> F(!q & !X true)"
    assert main(["iep", premise, conclusion]) == EXIT_NEGATIVE
    lines = capsys.readouterr().out.splitlines()
    assert lines[:2] == ["no interpolant", "entails: yes"]


def test_eval(capsys):
    assert main(["eval", "p & X !p", "{p};{}"]) == EXIT_POSITIVE
    assert capsys.readouterr().out.strip() == "true"
    assert main(["eval", "X true", "{p}"]) == EXIT_NEGATIVE
    assert capsys.readouterr().out.strip() == "false"


def test_ltl2nfa_emits_automaton_json(capsys):
    assert main(["ltl2nfa", "F p"]) == EXIT_POSITIVE
    document = json.loads(capsys.readouterr().out)
    assert document["kind"] == "nfa"
    assert document["alphabet"] == ["{}", "{p}"]


def test_min_writes_readable_dfa(capsys, tmp_path):
    assert main(["min", "--regex", "(ab)+", "--alphabet", "a,b"]) == EXIT_POSITIVE
    target = tmp_path / "min.json"
    target.write_text(capsys.readouterr().out)
    dfa = read_automaton(target)
    assert dfa.num_states == 4


def test_sgrp_table(capsys, fixture_path):
    assert main(["sgrp", "--aut", str(fixture_path("abab_plus.json")), "--table"]) == EXIT_POSITIVE
    out = capsys.readouterr().out
    assert "|S| = 9" in out
    assert "ω(S) = 2" in out
    assert "·,δ_a,δ_b" in out


def test_proj_keeps_variables(capsys, tmp_path):
    assert main(["ltl2nfa", "p & X q"]) == EXIT_POSITIVE
    source = tmp_path / "pq.json"
    source.write_text(capsys.readouterr().out)
    assert main(["proj", "--aut", str(source), "--keep", "p"]) == EXIT_POSITIVE
    document = json.loads(capsys.readouterr().out)
    assert document["alphabet"] == ["{}", "{p}"]


def test_wrong_number_of_inputs(capsys):
    assert main(["sep", "--regex", "(ab)+", "--alphabet", "a,b"]) == EXIT_ERROR
    assert "expects 2" in capsys.readouterr().err


def test_regex_without_alphabet(capsys):
    assert main(["defin", "--regex", "(ab)+"]) == EXIT_ERROR
    assert "--alphabet" in capsys.readouterr().err


def test_syntax_errors_exit_with_usage_code(capsys):
    assert main(["iep", "p U", "q"]) == EXIT_ERROR
    assert capsys.readouterr().err.startswith("error:")
    assert main(["eval", "p", "{p};q"]) == EXIT_ERROR


def test_unknown_command():
    assert main(["frobnicate"]) == EXIT_ERROR


def test_state_limit_is_reported(capsys):
    code = main(["sgrp", "--regex", "(abab)+", "--alphabet", "a,b", "--max-states", "3"])
    assert code == EXIT_ERROR
    assert "error:" in capsys.readouterr().err
