"""Reading and writing automata in the JSON file format."""

import logging
from pathlib import Path
from typing import IO, Optional, Union

from pydantic import ValidationError

from app.core.exceptions import AnalysisError
from app.modules.automata.models import Alphabet, Automaton, Dfa, Nfa
from app.modules.automata.service import as_dfa, regex_to_nfa

from .regex import parse_regex
from .schemas import AutomatonDocument, LanguageInput

logger = logging.getLogger(__name__)

Source = Union[str, Path, bytes, IO]


class AutomatonFormatError(AnalysisError):
    """The automaton document is malformed."""


def document_to_automaton(document: AutomatonDocument) -> Automaton:
    alphabet = Alphabet.of(document.alphabet)
    transitions = frozenset(
        (source, alphabet.index(letter), target) for source, letter, target in document.transitions
    )
    if document.kind == "nfa":
        return Nfa(
            alphabet=alphabet,
            num_states=document.states,
            initial=frozenset(document.initial),
            accepting=frozenset(document.accepting),
            transitions=transitions,
        )
    return _total_dfa(alphabet, document, transitions)


def _total_dfa(alphabet: Alphabet, document: AutomatonDocument, transitions) -> Dfa:
    table = [[None] * len(alphabet) for _ in range(document.states)]
    for source, letter, target in transitions:
        table[source][letter] = target
    num_states = document.states
    if any(target is None for row in table for target in row):
        sink = num_states
        num_states += 1
        table.append([sink] * len(alphabet))
        table = [[sink if target is None else target for target in row] for row in table]
        logger.debug("Added sink state %d to a partial dfa", sink)
    return Dfa(
        alphabet=alphabet,
        num_states=num_states,
        initial=document.initial[0],
        accepting=frozenset(document.accepting),
        delta=tuple(tuple(row) for row in table),
    )


def automaton_to_document(automaton: Automaton) -> AutomatonDocument:
    letters = automaton.alphabet.letters
    if isinstance(automaton, Dfa):
        return AutomatonDocument(
            kind="dfa",
            alphabet=list(letters),
            states=automaton.num_states,
            initial=[automaton.initial],
            accepting=sorted(automaton.accepting),
            transitions=[
                (state, letters[letter], target)
                for state, row in enumerate(automaton.delta)
                for letter, target in enumerate(row)
            ],
        )
    return AutomatonDocument(
        kind="nfa",
        alphabet=list(letters),
        states=automaton.num_states,
        initial=sorted(automaton.initial),
        accepting=sorted(automaton.accepting),
        transitions=[(source, letters[letter], target) for source, letter, target in sorted(automaton.transitions)],
    )


def parse_automaton(data: Union[str, bytes]) -> Automaton:
    try:
        document = AutomatonDocument.model_validate_json(data)
    except ValidationError as exc:
        raise AutomatonFormatError(f"malformed automaton document: {_first_error(exc)}") from exc
    return document_to_automaton(document)


def read_automaton(source: Source) -> Automaton:
    """Read from a path, an open stream or raw JSON bytes."""
    if isinstance(source, bytes):
        return parse_automaton(source)
    if isinstance(source, (str, Path)):
        path = Path(source)
        try:
            data = path.read_bytes()
        except OSError as exc:
            raise AutomatonFormatError(f"cannot read automaton file {path}: {exc.strerror}") from exc
        logger.debug("Reading automaton from %s", path)
        return parse_automaton(data)
    return parse_automaton(source.read())


def write_automaton(automaton: Automaton) -> bytes:
    return automaton_to_document(automaton).model_dump_json(indent=2).encode("utf-8") + b"\n"


def _first_error(exc: ValidationError) -> str:
    error = exc.errors()[0]
    location = ".".join(str(part) for part in error.get("loc", ()))
    message = error.get("msg", "invalid value")
    return f"{location}: {message}" if location else message


def resolve_language(language: LanguageInput, *, max_states: Optional[int] = None) -> Dfa:
    """DFA of a language given as a document or as a regex over its alphabet."""
    if language.automaton is not None:
        return as_dfa(document_to_automaton(language.automaton), max_states=max_states)
    alphabet = Alphabet.of(language.alphabet)
    regex = parse_regex(language.regex, alphabet.letters)
    return as_dfa(regex_to_nfa(regex, alphabet), max_states=max_states)
