"""LALR parser for the LTL concrete syntax.

Precedence, tightest first: unary (``!``, ``X``, ``F``, ``G``), ``U``, ``&``,
``|``, ``->``, ``<->``. ``->`` and ``U`` associate to the right, ``&``, ``|``
and ``<->`` to the left.
"""

import logging
from functools import lru_cache
from typing import Optional

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken

from app.core.exceptions import AnalysisError

from .ltl import FALSE, And, Eventually, GlobalRefl, Iff, Implies, LtlFormula, Next, Not, Or, TrueFormula, Until, Var

logger = logging.getLogger(__name__)

# Keywords share the default priority with IDENT so that lark retypes an
# identifier equal to a keyword; "Xp" stays a single identifier.
LTL_GRAMMAR = r"""
?start: iff_expr

?iff_expr: impl_expr
    | iff_expr IFF impl_expr        -> iff

?impl_expr: or_expr
    | or_expr IMPLIES impl_expr     -> implies

?or_expr: and_expr
    | or_expr OR and_expr           -> or_

?and_expr: until_expr
    | and_expr AND until_expr       -> and_

?until_expr: unary
    | unary UNTIL until_expr        -> until

?unary: atom
    | NOT unary                     -> not_
    | NEXT unary                    -> next_
    | EVENTUALLY unary              -> eventually
    | ALWAYS unary                  -> always

?atom: TRUE                         -> true
    | FALSE                         -> false
    | IDENT                         -> var
    | "(" iff_expr ")"

TRUE: "true"
FALSE: "false"
NEXT: "X"
EVENTUALLY: "F"
ALWAYS: "G"
UNTIL: "U"
IDENT: /[a-zA-Z][a-zA-Z0-9_]*/
IFF: "<->"
IMPLIES: "->"
OR: "|"
AND: "&"
NOT: "!"

%import common.WS
%ignore WS
"""


class LtlSyntaxError(AnalysisError):
    """Raised when a formula does not belong to the grammar."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"syntax error at position {position}: {message}")
        self.position = position


@v_args(inline=True)
class _ToFormula(Transformer):
    def true(self, _token):
        return TrueFormula()

    def false(self, _token):
        return FALSE

    def var(self, token):
        return Var(str(token))

    def not_(self, _op, operand):
        return Not(operand)

    def next_(self, _op, operand):
        return Next(operand)

    def eventually(self, _op, operand):
        return Eventually(operand)

    def always(self, _op, operand):
        return GlobalRefl(operand)

    def until(self, eventual, _op, interim):
        return Until(eventual, interim)

    def and_(self, left, _op, right):
        return And(left, right)

    def or_(self, left, _op, right):
        return Or(left, right)

    def implies(self, left, _op, right):
        return Implies(left, right)

    def iff(self, left, _op, right):
        return Iff(left, right)


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark(LTL_GRAMMAR, parser="lalr", maybe_placeholders=False)


def _error_position(exc: UnexpectedInput, text: str) -> int:
    if isinstance(exc, UnexpectedEOF):
        return len(text)
    if isinstance(exc, UnexpectedToken) and exc.token.type == "$END":
        return len(text)
    position: Optional[int] = getattr(exc, "pos_in_stream", None)
    return len(text) if position is None else position


def _describe(exc: UnexpectedInput, text: str) -> str:
    if isinstance(exc, UnexpectedCharacters):
        return f"unknown token {text[exc.pos_in_stream]!r}"
    if isinstance(exc, UnexpectedEOF) or (isinstance(exc, UnexpectedToken) and exc.token.type == "$END"):
        return "unexpected end of input"
    if isinstance(exc, UnexpectedToken):
        return f"unexpected token {str(exc.token)!r}"
    return "invalid input"


def parse_ltl(text: str) -> LtlFormula:
    """Parse ``text`` into an ``LtlFormula``; ``false`` becomes ``!true``."""
    try:
        tree = _parser().parse(text)
    except UnexpectedInput as exc:
        position = _error_position(exc, text)
        logger.debug("LTL parse failed for %r at %d", text, position)
        raise LtlSyntaxError(_describe(exc, text), position) from exc
    return _ToFormula().transform(tree)
