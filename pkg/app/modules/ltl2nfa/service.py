import itertools
import logging
from collections import deque
from typing import Dict, List, Optional, Tuple

from app.core.exceptions import StateLimitExceeded, resolve_limit
from app.modules.automata.models import Alphabet, Nfa
from app.modules.frontends.letters import letter_name
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

from .models import Atom, Closure

logger = logging.getLogger(__name__)

_TEMPORAL = (Next, Eventually, Until)


def desugar(formula: LtlFormula) -> LtlFormula:
    """Rewrite ``->``, ``<->`` and ``G`` into ``&`` and ``!``; drop double negations."""
    if isinstance(formula, (TrueFormula, Var)):
        return formula
    if isinstance(formula, Not):
        operand = desugar(formula.operand)
        return operand.operand if isinstance(operand, Not) else Not(operand)
    if isinstance(formula, Implies):
        return _not_and_not(desugar(formula.left), desugar(formula.right))
    if isinstance(formula, Iff):
        left, right = desugar(formula.left), desugar(formula.right)
        return And(_not_and_not(left, right), _not_and_not(right, left))
    if isinstance(formula, GlobalRefl):
        return desugar(formula.expansion())
    if isinstance(formula, And):
        return And(desugar(formula.left), desugar(formula.right))
    if isinstance(formula, Or):
        return Or(desugar(formula.left), desugar(formula.right))
    if isinstance(formula, Next):
        return Next(desugar(formula.operand))
    if isinstance(formula, Eventually):
        return Eventually(desugar(formula.operand))
    if isinstance(formula, Until):
        return Until(desugar(formula.eventual), desugar(formula.interim))
    raise ValueError(f"Unsupported LTL construct: {formula!r}")


def _not_and_not(premise: LtlFormula, conclusion: LtlFormula) -> LtlFormula:
    negated = conclusion.operand if isinstance(conclusion, Not) else Not(conclusion)
    return Not(And(premise, negated))


def closure(formula: LtlFormula) -> Closure:
    core = desugar(formula)
    nodes = tuple(node for node in subformulas(core) if not isinstance(node, Not))
    elementary = tuple(node for node in nodes if isinstance(node, (Var,) + _TEMPORAL))
    temporal = tuple(node for node in elementary if isinstance(node, _TEMPORAL))
    variables = tuple(sorted({node.name for node in elementary if isinstance(node, Var)}))
    return Closure(formula=core, nodes=nodes, elementary=elementary, temporal=temporal, variables=variables)


def _truth(node: LtlFormula, holds: Dict[LtlFormula, bool]) -> bool:
    if isinstance(node, Not):
        return not holds[node.operand]
    return holds[node]


def _atom(cl: Closure, assignment: Tuple[bool, ...]) -> Atom:
    holds: Dict[LtlFormula, bool] = dict(zip(cl.elementary, assignment))
    for node in cl.nodes:
        if isinstance(node, TrueFormula):
            holds[node] = True
        elif isinstance(node, And):
            holds[node] = _truth(node.left, holds) and _truth(node.right, holds)
        elif isinstance(node, Or):
            holds[node] = _truth(node.left, holds) or _truth(node.right, holds)
    required = []
    for node in cl.temporal:
        if isinstance(node, Next):
            required.append(_truth(node.operand, holds))
        elif isinstance(node, Eventually):
            required.append(_truth(node.operand, holds) or holds[node])
        else:
            eventual, interim = _truth(node.eventual, holds), _truth(node.interim, holds)
            required.append(eventual or (interim and holds[node]))
    return Atom(
        holds=frozenset(node for node, value in holds.items() if value),
        letter=frozenset(node.name for node in cl.elementary if isinstance(node, Var) and holds[node]),
        now=tuple(holds[node] for node in cl.temporal),
        required=tuple(required),
    )


def atoms(cl: Closure) -> List[Atom]:
    """Every assignment to the elementary formulas, in lexicographic order."""
    return [_atom(cl, assignment) for assignment in itertools.product((False, True), repeat=len(cl.elementary))]


def ltl_to_nfa(formula: LtlFormula, *, max_states: Optional[int] = None) -> Nfa:
    """NFA over 2^vars(φ) accepting the nonempty words w with w, 0 ⊨ φ.

    State 0 is pre-initial; the letter of position i is read on the edge into
    the atom for position i. From atom A on letter b the run moves to any atom B
    reading b whose ``required`` values match A's temporal part; atoms where no
    X/F/U formula holds accept.
    """
    limit = resolve_limit(max_states)
    cl = closure(formula)
    if len(cl.elementary) >= limit.bit_length():
        raise StateLimitExceeded("atom enumeration", limit)
    alphabet = Alphabet.powerset(cl.variables)
    all_atoms = atoms(cl)
    by_requirement: Dict[Tuple[bool, ...], List[int]] = {}
    for index, atom in enumerate(all_atoms):
        by_requirement.setdefault(atom.required, []).append(index)
    letter_of = [alphabet.index(letter_name(atom.letter)) for atom in all_atoms]

    core_is_true = _truth_of_root(cl)
    state_of: Dict[int, int] = {}
    queue = deque()
    transitions = set()

    def visit(atom_index: int) -> int:
        if atom_index not in state_of:
            if len(state_of) + 1 >= limit:
                raise StateLimitExceeded("atom construction", limit)
            state_of[atom_index] = len(state_of) + 1
            queue.append(atom_index)
        return state_of[atom_index]

    for index, atom in enumerate(all_atoms):
        if core_is_true(atom):
            transitions.add((0, letter_of[index], visit(index)))
    while queue:
        current = queue.popleft()
        source = state_of[current]
        for successor in by_requirement.get(all_atoms[current].now, ()):
            transitions.add((source, letter_of[successor], visit(successor)))

    accepting = frozenset(state for index, state in state_of.items() if all_atoms[index].is_final)
    logger.info(
        "Compiled formula with %d closure nodes into an NFA of %d states", len(cl.nodes), len(state_of) + 1
    )
    return Nfa(
        alphabet=alphabet,
        num_states=len(state_of) + 1,
        initial=frozenset({0}),
        accepting=accepting,
        transitions=frozenset(transitions),
    )


def _truth_of_root(cl: Closure):
    root = cl.formula
    if isinstance(root, Not):
        return lambda atom: root.operand not in atom.holds
    return lambda atom: root in atom.holds
