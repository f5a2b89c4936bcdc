from typing import Dict, FrozenSet, List

from app.modules.frontends.ltl import (
    And,
    Eventually,
    GlobalRefl,
    Iff,
    Implies,
    LtlFormula,
    Next,
    Not,
    Or,
    TrueFormula,
    Until,
    Var,
    subformulas,
)

from .models import TemporalModel


def formula_vars(formula: LtlFormula) -> FrozenSet[str]:
    """Variables occurring in ``formula``."""
    return frozenset(node.name for node in subformulas(formula) if isinstance(node, Var))


def truth_vector(model: TemporalModel, formula: LtlFormula) -> List[bool]:
    """Truth value of ``formula`` at every position of ``model``."""
    return _vector(model, formula, {})


def _vector(model: TemporalModel, formula: LtlFormula, memo: Dict[LtlFormula, List[bool]]) -> List[bool]:
    cached = memo.get(formula)
    if cached is not None:
        return cached
    length = len(model)
    if isinstance(formula, TrueFormula):
        vector = [True] * length
    elif isinstance(formula, Var):
        vector = [formula.name in letter for letter in model.valuation]
    elif isinstance(formula, Not):
        vector = [not value for value in _vector(model, formula.operand, memo)]
    elif isinstance(formula, And):
        left, right = _vector(model, formula.left, memo), _vector(model, formula.right, memo)
        vector = [a and b for a, b in zip(left, right)]
    elif isinstance(formula, Or):
        left, right = _vector(model, formula.left, memo), _vector(model, formula.right, memo)
        vector = [a or b for a, b in zip(left, right)]
    elif isinstance(formula, Implies):
        left, right = _vector(model, formula.left, memo), _vector(model, formula.right, memo)
        vector = [not a or b for a, b in zip(left, right)]
    elif isinstance(formula, Iff):
        left, right = _vector(model, formula.left, memo), _vector(model, formula.right, memo)
        vector = [a == b for a, b in zip(left, right)]
    elif isinstance(formula, GlobalRefl):
        vector = _vector(model, formula.expansion(), memo)
    else:
        vector = _temporal_vector(model, formula, memo)
    memo[formula] = vector
    return vector


def _temporal_vector(model: TemporalModel, formula: LtlFormula, memo: Dict[LtlFormula, List[bool]]) -> List[bool]:
    # computed right to left; nothing strictly later than the last position
    length = len(model)
    vector = [False] * length
    if isinstance(formula, Next):
        operand = _vector(model, formula.operand, memo)
        for position in range(length - 1):
            vector[position] = operand[position + 1]
    elif isinstance(formula, Eventually):
        operand = _vector(model, formula.operand, memo)
        for position in range(length - 2, -1, -1):
            vector[position] = operand[position + 1] or vector[position + 1]
    elif isinstance(formula, Until):
        eventual = _vector(model, formula.eventual, memo)
        interim = _vector(model, formula.interim, memo)
        for position in range(length - 2, -1, -1):
            vector[position] = eventual[position + 1] or (interim[position + 1] and vector[position + 1])
    else:
        raise ValueError(f"Unsupported LTL construct: {formula!r}")
    return vector


def evaluate(model: TemporalModel, position: int, formula: LtlFormula) -> bool:
    """M, n ⊨ φ under the strict finite-trace semantics."""
    model.check_position(position)
    return truth_vector(model, formula)[position]
