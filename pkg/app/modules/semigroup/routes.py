from fastapi import APIRouter

from app.core.exceptions import http_errors
from app.modules.automata.service import minimize
from app.modules.frontends.automaton_io import resolve_language
from app.modules.semigroup.schemas import SemigroupReport, SemigroupRequest
from app.modules.semigroup.service import build_semigroup_report, transition_semigroup

router = APIRouter()


@router.post("", response_model=SemigroupReport)
def describe_semigroup(payload: SemigroupRequest) -> SemigroupReport:
    """Transition (or syntactic) semigroup of a language, with ω(S) and aperiodicity."""
    with http_errors("computing semigroup"):
        dfa = resolve_language(payload, max_states=payload.max_states)
        if payload.syntactic:
            dfa = minimize(dfa)
        semigroup = transition_semigroup(dfa, max_states=payload.max_states)
        return build_semigroup_report(semigroup, include_table=payload.include_table)
