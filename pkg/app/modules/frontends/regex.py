"""Regular expressions over a session alphabet.

Juxtaposition is concatenation, ``|`` is union, ``*`` and ``+`` are postfix.
Letter names are taken from the alphabet, longest name first, so multi-character
names such as ``{p,q}`` can be written inline.
"""

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Tuple

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken

from app.core.exceptions import AnalysisError

logger = logging.getLogger(__name__)

OPERATORS = set("()|*+")


@dataclass(frozen=True)
class Regex:
    pass


@dataclass(frozen=True)
class Letter(Regex):
    name: str


@dataclass(frozen=True)
class Concat(Regex):
    parts: Tuple[Regex, ...]


@dataclass(frozen=True)
class Union(Regex):
    options: Tuple[Regex, ...]


@dataclass(frozen=True)
class Star(Regex):
    operand: Regex


@dataclass(frozen=True)
class Plus(Regex):
    operand: Regex


class RegexSyntaxError(AnalysisError):
    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"regex syntax error at position {position}: {message}")
        self.position = position


_GRAMMAR_TEMPLATE = r"""
?start: union

?union: concat
    | concat ("|" concat)+          -> union

?concat: repeat
    | repeat repeat+                -> concat

?repeat: atom
    | repeat "*"                    -> star
    | repeat "+"                    -> plus

?atom: LETTER                       -> letter
    | "(" union ")"

LETTER: /{letters}/

%import common.WS
%ignore WS
"""


@v_args(inline=True)
class _ToRegex(Transformer):
    def letter(self, token):
        return Letter(str(token))

    def star(self, operand):
        return Star(operand)

    def plus(self, operand):
        return Plus(operand)

    def concat(self, *parts):
        return Concat(tuple(parts))

    def union(self, *options):
        return Union(tuple(options))


@lru_cache(maxsize=64)
def _parser(letters: Tuple[str, ...]) -> Lark:
    alternatives = "|".join(re.escape(name) for name in sorted(letters, key=lambda name: (-len(name), name)))
    # lark regexps are written between slashes
    alternatives = alternatives.replace("/", "\\/")
    return Lark(_GRAMMAR_TEMPLATE.replace("{letters}", alternatives), parser="lalr")


def parse_regex(text: str, alphabet: Sequence[str]) -> Regex:
    letters = tuple(alphabet)
    if not letters:
        raise AnalysisError("regex alphabet must not be empty")
    try:
        tree = _parser(letters).parse(text)
    except UnexpectedCharacters as exc:
        char = text[exc.pos_in_stream]
        if char in OPERATORS:
            raise RegexSyntaxError(f"unexpected {char!r}", exc.pos_in_stream) from exc
        raise RegexSyntaxError(f"letter at {char!r} is not in the alphabet", exc.pos_in_stream) from exc
    except (UnexpectedToken, UnexpectedEOF) as exc:
        token = getattr(exc, "token", None)
        if token is None or token.type == "$END":
            raise RegexSyntaxError("unexpected end of input", len(text)) from exc
        raise RegexSyntaxError(f"unexpected {str(token)!r}", exc.pos_in_stream) from exc
    except UnexpectedInput as exc:
        raise RegexSyntaxError("invalid input", getattr(exc, "pos_in_stream", 0) or 0) from exc
    logger.debug("Parsed regex %r over %d letters", text, len(letters))
    return _ToRegex().transform(tree)


def regex_letters(regex: Regex) -> set:
    if isinstance(regex, Letter):
        return {regex.name}
    if isinstance(regex, Concat):
        return set().union(*(regex_letters(part) for part in regex.parts))
    if isinstance(regex, Union):
        return set().union(*(regex_letters(option) for option in regex.options))
    return regex_letters(regex.operand)


def print_regex(regex: Regex) -> str:
    """Print so that ``parse_regex(print_regex(r), alphabet) == r``.

    Concatenated letters are juxtaposed when every name in ``regex`` is a single
    character, otherwise separated by spaces.
    """
    joiner = "" if all(len(name) == 1 for name in regex_letters(regex)) else " "
    return _print(regex, joiner)


def _print(regex: Regex, joiner: str) -> str:
    if isinstance(regex, Letter):
        return regex.name
    if isinstance(regex, Union):
        return "|".join(
            f"({_print(option, joiner)})" if isinstance(option, Union) else _print(option, joiner)
            for option in regex.options
        )
    if isinstance(regex, Concat):
        return joiner.join(
            f"({_print(part, joiner)})" if isinstance(part, (Concat, Union)) else _print(part, joiner)
            for part in regex.parts
        )
    suffix = "*" if isinstance(regex, Star) else "+"
    inner = _print(regex.operand, joiner)
    if isinstance(regex.operand, (Concat, Union)):
        inner = f"({inner})"
    return inner + suffix
