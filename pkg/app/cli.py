"""Command-line surface.

Exit codes: 0 for a positive verdict or success, 1 for a negative verdict,
2 for usage and input errors (message on standard error).
"""

import argparse
import logging
import re
import sys
from typing import Callable, Dict, List, Optional, Sequence

from app.core.config import settings
from app.core.exceptions import AnalysisError
from app.core.logging import configure_logging
from app.modules.automata import service as automata_service
from app.modules.automata.models import Alphabet, Automaton, Dfa
from app.modules.frontends.automaton_io import read_automaton, write_automaton
from app.modules.frontends.letters import parse_word
from app.modules.frontends.ltl import print_ltl
from app.modules.frontends.ltl_parser import parse_ltl
from app.modules.frontends.regex import parse_regex
from app.modules.iep.service import interpolant_exists
from app.modules.ltl2nfa.service import ltl_to_nfa
from app.modules.ltl_semantics.models import TemporalModel
from app.modules.ltl_semantics.schemas import EvalResponse
from app.modules.ltl_semantics.service import evaluate, formula_vars
from app.modules.semigroup.service import build_semigroup_report, transition_semigroup
from app.modules.separation.schemas import SeparationReport
from app.modules.separation.service import build_definability_report, build_separation_report, fo_separable

logger = logging.getLogger(__name__)

EXIT_POSITIVE = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2

# Subcommands taking automaton/regex inputs, with the number they expect.
INPUT_ARITY = {"det": 1, "min": 1, "comp": 1, "proj": 1, "sgrp": 1, "defin": 1, "prod": 2, "sep": 2}


class UsageError(AnalysisError):
    pass


class _InputAction(argparse.Action):
    """Collect ``--regex`` and ``--aut`` into one list, keeping command-line order."""

    def __call__(self, parser, namespace, values, option_string=None):
        inputs = list(getattr(namespace, "inputs", None) or [])
        inputs.append((self.dest, values))
        namespace.inputs = inputs


# a comma followed by "}" before any "{" sits inside a letter such as {p,q}
_LIST_COMMA = re.compile(r",(?![^{]*\})")


def _csv(text: str) -> List[str]:
    return [part.strip() for part in _LIST_COMMA.split(text) if part.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Emit a machine-readable report")
    common.add_argument("--explain", action="store_true", help="Add semigroup diagnostics to the report")
    common.add_argument(
        "--max-states",
        type=int,
        default=None,
        help=f"Resource guard for every construction (default {settings.MAX_STATES})",
    )
    common.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default="WARNING",
        help="Logging level (default WARNING)",
    )

    inputs = argparse.ArgumentParser(add_help=False)
    inputs.add_argument("--regex", action=_InputAction, dest="regex", help="Regular expression (repeatable)")
    inputs.add_argument("--aut", action=_InputAction, dest="aut", help="Automaton JSON file (repeatable)")
    inputs.add_argument("--alphabet", type=_csv, default=None, help="Comma-separated letters for --regex")

    parser = argparse.ArgumentParser(
        prog="starfree-iep",
        description="First-order definability and separability of regular languages, "
        "and Craig interpolant existence for LTL over finite traces.",
    )
    parser.set_defaults(inputs=[])
    commands = parser.add_subparsers(dest="command", required=True)

    evaluate_cmd = commands.add_parser("eval", parents=[common], help="Evaluate a formula on a word")
    evaluate_cmd.add_argument("formula")
    evaluate_cmd.add_argument("word", help="Word literal such as {p};{};{p};{}")
    evaluate_cmd.add_argument("--position", type=int, default=0)
    evaluate_cmd.add_argument("--universe", type=_csv, default=None, help="Variable universe ρ")

    compile_cmd = commands.add_parser("ltl2nfa", parents=[common], help="Compile a formula to an NFA")
    compile_cmd.add_argument("formula")

    language_cmds = {}
    for name, text in (
        ("det", "Determinize"),
        ("min", "Minimize"),
        ("comp", "Complement within A^+"),
        ("sgrp", "Describe the transition semigroup"),
        ("defin", "Decide FO(<)-definability"),
        ("sep", "Decide FO(<)-separability of two languages"),
    ):
        language_cmds[name] = commands.add_parser(name, parents=[common, inputs], help=text)

    product_cmd = commands.add_parser("prod", parents=[common, inputs], help="Synchronous product")
    product_cmd.add_argument(
        "--mode",
        choices=[mode.value for mode in automata_service.ProductMode],
        default=automata_service.ProductMode.INTERSECTION.value,
    )
    project_cmd = commands.add_parser("proj", parents=[common, inputs], help="Project onto a variable set")
    project_cmd.add_argument("--keep", type=_csv, required=True, help="Comma-separated variables to keep")

    sgrp_cmd = language_cmds["sgrp"]
    sgrp_cmd.add_argument("--syntactic", action="store_true", help="Minimize first")
    sgrp_cmd.add_argument("--table", action="store_true", help="Print the Cayley table as CSV")

    iep_cmd = commands.add_parser("iep", parents=[common], help="Decide Craig interpolant existence")
    iep_cmd.add_argument("premise")
    iep_cmd.add_argument("conclusion")
    return parser


# --- inputs -----------------------------------------------------------------------------


def _load_inputs(args: argparse.Namespace) -> List[Automaton]:
    expected = INPUT_ARITY[args.command]
    if len(args.inputs) != expected:
        raise UsageError(f"{args.command} expects {expected} input(s) via --regex/--aut, got {len(args.inputs)}")
    automata = []
    for kind, value in args.inputs:
        if kind == "aut":
            automata.append(read_automaton(value))
            continue
        if not args.alphabet:
            raise UsageError("--regex needs --alphabet")
        alphabet = Alphabet.of(args.alphabet)
        automata.append(automata_service.regex_to_nfa(parse_regex(value, alphabet.letters), alphabet))
    return automata


def _dfas(args: argparse.Namespace) -> List[Dfa]:
    return [automata_service.as_dfa(automaton, max_states=args.max_states) for automaton in _load_inputs(args)]


def _emit_automaton(automaton: Automaton) -> int:
    sys.stdout.write(write_automaton(automaton).decode("utf-8"))
    return EXIT_POSITIVE


# --- commands ---------------------------------------------------------------------------


def _run_eval(args: argparse.Namespace) -> int:
    formula = parse_ltl(args.formula)
    model = TemporalModel.from_word(parse_word(args.word), args.universe)
    value = evaluate(model, args.position, formula)
    if args.json:
        response = EvalResponse(value=value, formula=print_ltl(formula), variables=sorted(formula_vars(formula)))
        print(response.model_dump_json(indent=2))
    else:
        print("true" if value else "false")
    return EXIT_POSITIVE if value else EXIT_NEGATIVE


def _run_ltl2nfa(args: argparse.Namespace) -> int:
    return _emit_automaton(ltl_to_nfa(parse_ltl(args.formula), max_states=args.max_states))


def _run_det(args: argparse.Namespace) -> int:
    return _emit_automaton(_dfas(args)[0])


def _run_min(args: argparse.Namespace) -> int:
    return _emit_automaton(automata_service.minimize(_dfas(args)[0]))


def _run_comp(args: argparse.Namespace) -> int:
    return _emit_automaton(automata_service.complement(_dfas(args)[0]))


def _run_prod(args: argparse.Namespace) -> int:
    left, right = _dfas(args)
    return _emit_automaton(automata_service.product(left, right, args.mode, max_states=args.max_states))


def _run_proj(args: argparse.Namespace) -> int:
    return _emit_automaton(automata_service.project(_load_inputs(args)[0], args.keep))


def _run_sgrp(args: argparse.Namespace) -> int:
    dfa = _dfas(args)[0]
    if args.syntactic:
        dfa = automata_service.minimize(dfa)
    semigroup = transition_semigroup(dfa, max_states=args.max_states)
    report = build_semigroup_report(semigroup, include_table=args.table)
    if args.json:
        print(report.model_dump_json(indent=2))
        return EXIT_POSITIVE
    print(f"|S| = {report.size}")
    print(f"ω(S) = {report.omega}")
    print(f"aperiodic: {'yes' if report.aperiodic else 'no'}")
    for element in report.elements:
        flags = " idempotent" if element.idempotent else ""
        flags += " accepting" if element.accepting else ""
        print(f"  {element.id}: {element.label} index={element.index} period={element.period}{flags}")
    if report.cayley_csv:
        sys.stdout.write(report.cayley_csv)
    return EXIT_POSITIVE


def _print_separation(report: SeparationReport, explain: bool) -> None:
    print("separable" if report.separable else "not separable")
    if explain:
        print(f"DFA states: {report.left_states} and {report.right_states}, product {report.product_states}")
        print(f"|S| = {report.semigroup_size}")
        print(f"ω(S) = {report.omega}")
        print("maximal non-singleton members of S†:")
        for members in report.maximal_members:
            print("  {" + ", ".join(members) + "}")
    if report.witness is not None:
        witness = report.witness
        print(
            f"violating pair: {{{witness.left_element}, {witness.right_element}}} "
            f"from words {witness.left_word} and {witness.right_word}"
        )


def _run_defin(args: argparse.Namespace) -> int:
    report = build_definability_report(
        _dfas(args)[0], explain=args.explain, exhaustive=args.explain, max_states=args.max_states
    )
    if args.json:
        print(report.model_dump_json(indent=2))
    else:
        print("definable" if report.definable else "not definable")
        if args.explain:
            print(f"minimal DFA states: {report.minimal_states}")
            print(f"|S| = {report.semigroup_size}")
            print(f"ω(S) = {report.omega}")
            if report.counter is not None:
                counter = report.counter
                print(f"counter: word {counter.word} cycles state {counter.state} with length {counter.cycle_length}")
            if report.separation is not None:
                print("separation from the complement:")
                _print_separation(report.separation, explain=True)
    return EXIT_POSITIVE if report.definable else EXIT_NEGATIVE


def _run_sep(args: argparse.Namespace) -> int:
    left, right = _dfas(args)
    report = build_separation_report(
        fo_separable(left, right, max_states=args.max_states, exhaustive=args.explain)
    )
    if args.json:
        print(report.model_dump_json(indent=2))
    else:
        _print_separation(report, args.explain)
    return EXIT_POSITIVE if report.separable else EXIT_NEGATIVE


def _run_iep(args: argparse.Namespace) -> int:
    verdict = interpolant_exists(
        parse_ltl(args.premise), parse_ltl(args.conclusion), max_states=args.max_states, exhaustive=args.explain
    )
    if args.json:
        print(verdict.model_dump_json(indent=2))
        return EXIT_POSITIVE if verdict.exists else EXIT_NEGATIVE
    print("interpolant exists" if verdict.exists else "no interpolant")
    print(f"entails: {'yes' if verdict.entails else 'no'}")
    if verdict.countermodel is not None:
        print(f"countermodel: {verdict.countermodel}")
    if args.explain:
        print("shared variables: {" + ",".join(verdict.shared_variables) + "}")
        print(f"DFA states: L_φ {verdict.premise_states}, L_¬ψ {verdict.negated_conclusion_states}")
        print(f"|S| = {verdict.semigroup_size}")
        print(f"ω(S) = {verdict.omega}")
        print("maximal non-singleton members of S†:")
        for members in verdict.maximal_members:
            print("  {" + ", ".join(members) + "}")
        if verdict.witness is not None:
            witness = verdict.witness
            print(
                f"violating pair: {{{witness.left_element}, {witness.right_element}}} "
                f"from words {witness.left_word} and {witness.right_word}"
            )
    return EXIT_POSITIVE if verdict.exists else EXIT_NEGATIVE


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "eval": _run_eval,
    "ltl2nfa": _run_ltl2nfa,
    "det": _run_det,
    "min": _run_min,
    "comp": _run_comp,
    "prod": _run_prod,
    "proj": _run_proj,
    "sgrp": _run_sgrp,
    "defin": _run_defin,
    "sep": _run_sep,
    "iep": _run_iep,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    configure_logging(args.log_level)
    try:
        return COMMANDS[args.command](args)
    except AnalysisError as exc:
        logger.debug("Command %s failed", args.command, exc_info=True)
        print(f"error: {exc.message}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
