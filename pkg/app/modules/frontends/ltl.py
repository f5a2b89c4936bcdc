"""Abstract syntax of LTL formulas under the strict finite-trace semantics.

``Until(eventual, interim)`` keeps the argument order of the concrete syntax
``a U b``: ``a`` must hold at some strictly later point and ``b`` at every
point strictly in between. This is the reverse of the usual reading of U.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class LtlFormula:
    pass


@dataclass(frozen=True)
class TrueFormula(LtlFormula):
    pass


@dataclass(frozen=True)
class Var(LtlFormula):
    name: str


@dataclass(frozen=True)
class Not(LtlFormula):
    operand: LtlFormula


@dataclass(frozen=True)
class And(LtlFormula):
    left: LtlFormula
    right: LtlFormula


@dataclass(frozen=True)
class Or(LtlFormula):
    left: LtlFormula
    right: LtlFormula


@dataclass(frozen=True)
class Implies(LtlFormula):
    left: LtlFormula
    right: LtlFormula


@dataclass(frozen=True)
class Iff(LtlFormula):
    left: LtlFormula
    right: LtlFormula


@dataclass(frozen=True)
class Next(LtlFormula):
    operand: LtlFormula


@dataclass(frozen=True)
class Eventually(LtlFormula):
    """Strict: some point strictly after the current one."""

    operand: LtlFormula


@dataclass(frozen=True)
class Until(LtlFormula):
    eventual: LtlFormula
    interim: LtlFormula


@dataclass(frozen=True)
class GlobalRefl(LtlFormula):
    """Reflexive always, written ``G``; abbreviates ``φ & !F !φ``."""

    operand: LtlFormula

    def expansion(self) -> LtlFormula:
        return And(self.operand, Not(Eventually(Not(self.operand))))


FALSE = Not(TrueFormula())

_BINARY_SYMBOLS = {And: "&", Or: "|", Implies: "->", Iff: "<->", Until: "U"}
_UNARY_SYMBOLS = {Next: "X ", Eventually: "F ", GlobalRefl: "G "}


def children(formula: LtlFormula) -> tuple:
    if isinstance(formula, (TrueFormula, Var)):
        return ()
    if isinstance(formula, Until):
        return (formula.eventual, formula.interim)
    if isinstance(formula, (And, Or, Implies, Iff)):
        return (formula.left, formula.right)
    return (formula.operand,)


def subformulas(formula: LtlFormula) -> list:
    """Distinct subformulas in post-order (children before parents)."""
    seen = set()
    ordered = []
    stack = [(formula, False)]
    while stack:
        node, expanded = stack.pop()
        if node in seen:
            continue
        if expanded:
            seen.add(node)
            ordered.append(node)
            continue
        stack.append((node, True))
        for child in reversed(children(node)):
            if child not in seen:
                stack.append((child, False))
    return ordered


def print_ltl(formula: LtlFormula) -> str:
    """Print in the concrete syntax accepted by ``parse_ltl``.

    Binary operators are always parenthesized, so printing and re-parsing
    yields the same tree.
    """
    if isinstance(formula, TrueFormula):
        return "true"
    if isinstance(formula, Var):
        return formula.name
    if isinstance(formula, Not):
        return "!" + print_ltl(formula.operand)
    if type(formula) in _UNARY_SYMBOLS:
        return _UNARY_SYMBOLS[type(formula)] + print_ltl(formula.operand)
    if type(formula) in _BINARY_SYMBOLS:
        left, right = children(formula)
        return f"({print_ltl(left)} {_BINARY_SYMBOLS[type(formula)]} {print_ltl(right)})"
    raise ValueError(f"Unsupported LTL construct: {formula!r}")
