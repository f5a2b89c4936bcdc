"""Naming of letters that are sets of propositional variables."""

import re
from typing import AbstractSet, FrozenSet, Iterable, Optional, Sequence

from app.core.exceptions import AnalysisError

IDENTIFIER = re.compile(r"^[a-zA-Z][a-zA-Z0-9_]*$")


class LetterError(AnalysisError):
    """A letter or word literal is malformed or not a variable set."""


def letter_name(variables: AbstractSet[str]) -> str:
    """``{"q", "p"}`` -> ``"{p,q}"``; the empty set is ``"{}"``."""
    return "{" + ",".join(sorted(variables)) + "}"


def parse_letter_name(text: str) -> FrozenSet[str]:
    stripped = text.strip()
    if not (stripped.startswith("{") and stripped.endswith("}")):
        raise LetterError(f"letter {text!r} is not a variable set")
    body = stripped[1:-1].strip()
    if not body:
        return frozenset()
    names = [part.strip() for part in body.split(",")]
    for name in names:
        if not IDENTIFIER.match(name):
            raise LetterError(f"invalid variable name {name!r} in letter {text!r}")
    return frozenset(names)


def parse_word(text: str) -> tuple:
    """Parse a word literal such as ``{p};{};{p};{}`` into variable sets."""
    stripped = text.strip()
    if not stripped:
        raise LetterError("a word needs at least one letter")
    return tuple(parse_letter_name(part) for part in stripped.split(";"))


def format_word(word: Sequence, separator: Optional[str] = None) -> str:
    """Render a word.

    Variable-set letters print in the literal syntax (``{p};{}``); plain letter
    names are juxtaposed when they are all single characters (``abab``).
    """
    names = [letter_name(letter) if isinstance(letter, (set, frozenset)) else str(letter) for letter in word]
    if separator is None:
        separator = "" if all(len(name) == 1 for name in names) else ";"
    return separator.join(names)


def powerset_names(variables: Iterable[str]) -> tuple:
    """All letters over ``variables`` in bitmask order of the sorted variables."""
    ordered = sorted(set(variables))
    letters = []
    for mask in range(1 << len(ordered)):
        letters.append(letter_name({name for bit, name in enumerate(ordered) if mask >> bit & 1}))
    return tuple(letters)
