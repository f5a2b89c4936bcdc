import logging
from typing import Iterable, Optional

from app.core.exceptions import AnalysisError
from app.modules.automata.models import Dfa
from app.modules.automata.service import (
    ProductMode,
    complement,
    determinize,
    extend_alphabet,
    is_empty,
    minimize,
    product,
    project,
    shortest_word,
)
from app.modules.frontends.letters import format_word
from app.modules.frontends.ltl import LtlFormula, Not
from app.modules.ltl2nfa.service import ltl_to_nfa
from app.modules.ltl_semantics.service import formula_vars
from app.modules.separation.schemas import SeparationWitnessReport
from app.modules.separation.service import build_separation_report, fo_separable

from .schemas import IepVerdict

logger = logging.getLogger(__name__)


class PipelineInvariantError(AnalysisError):
    """An internal consistency check failed; the result must not be trusted."""

    def __init__(self, message: str) -> None:
        super().__init__(message, status_code=500)


def language_of(formula: LtlFormula, shared: Iterable[str], *, max_states: Optional[int] = None) -> Dfa:
    """Minimal DFA over 2^ρ of the ρ-models of ∃q₁…q_m φ, q's being the variables outside ρ."""
    shared = frozenset(shared)
    nfa = ltl_to_nfa(formula, max_states=max_states)
    if shared - nfa.alphabet.variables:
        nfa = extend_alphabet(nfa, shared)
    return minimize(determinize(project(nfa, shared), max_states=max_states))


def _over(formula: LtlFormula, variables: frozenset, max_states: Optional[int]) -> Dfa:
    return determinize(extend_alphabet(ltl_to_nfa(formula, max_states=max_states), variables), max_states=max_states)


def satisfiable(formula: LtlFormula, *, max_states: Optional[int] = None) -> bool:
    return not is_empty(ltl_to_nfa(formula, max_states=max_states))


def entailment_countermodel(
    premise: LtlFormula, conclusion: LtlFormula, *, max_states: Optional[int] = None
) -> Optional[str]:
    """Shortest model of φ & !ψ in the word literal syntax, or ``None`` when φ ⊨ ψ."""
    variables = formula_vars(premise) | formula_vars(conclusion)
    premise_dfa = _over(premise, variables, max_states)
    conclusion_dfa = _over(conclusion, variables, max_states)
    difference = product(premise_dfa, complement(conclusion_dfa), ProductMode.INTERSECTION, max_states=max_states)
    word = shortest_word(difference)
    return None if word is None else format_word(word, separator=";")


def entails(premise: LtlFormula, conclusion: LtlFormula, *, max_states: Optional[int] = None) -> bool:
    return entailment_countermodel(premise, conclusion, max_states=max_states) is None


def interpolant_exists(
    premise: LtlFormula,
    conclusion: LtlFormula,
    *,
    max_states: Optional[int] = None,
    exhaustive: bool = False,
) -> IepVerdict:
    """An interpolant exists iff L_φ and L_¬ψ over the shared variables are FO(<)-separable."""
    shared = formula_vars(premise) & formula_vars(conclusion)
    premise_language = language_of(premise, shared, max_states=max_states)
    negated_language = language_of(Not(conclusion), shared, max_states=max_states)
    outcome = fo_separable(premise_language, negated_language, max_states=max_states, exhaustive=exhaustive)
    countermodel = entailment_countermodel(premise, conclusion, max_states=max_states)
    entailment = countermodel is None
    logger.info(
        "IEP over ρ=%s: L_φ %d states, L_¬ψ %d states, |S| = %d, ω(S) = %d, exists=%s, entails=%s",
        sorted(shared),
        premise_language.num_states,
        negated_language.num_states,
        outcome.semigroup.size,
        outcome.omega,
        outcome.separable,
        entailment,
    )
    if outcome.separable and not entailment:
        raise PipelineInvariantError(
            f"interpolant reported without entailment; countermodel {countermodel}"
        )
    report = build_separation_report(outcome)
    witness: Optional[SeparationWitnessReport] = report.witness
    return IepVerdict(
        exists=outcome.separable,
        entails=entailment,
        shared_variables=sorted(shared),
        premise_states=premise_language.num_states,
        negated_conclusion_states=negated_language.num_states,
        product_states=outcome.product_states,
        semigroup_size=outcome.semigroup.size,
        omega=outcome.omega,
        complete=report.complete,
        maximal_members=report.maximal_members,
        witness=witness,
        countermodel=countermodel,
    )
