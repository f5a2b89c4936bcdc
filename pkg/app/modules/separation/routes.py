from fastapi import APIRouter

from app.core.exceptions import http_errors
from app.modules.frontends.automaton_io import resolve_language
from app.modules.separation.schemas import (
    DefinabilityReport,
    DefinabilityRequest,
    SeparationReport,
    SeparationRequest,
)
from app.modules.separation.service import build_definability_report, build_separation_report, fo_separable

router = APIRouter()


@router.post("/separable", response_model=SeparationReport)
def check_separable(payload: SeparationRequest) -> SeparationReport:
    with http_errors("checking separability"):
        left = resolve_language(payload.left, max_states=payload.max_states)
        right = resolve_language(payload.right, max_states=payload.max_states)
        return build_separation_report(
            fo_separable(left, right, max_states=payload.max_states, exhaustive=payload.exhaustive)
        )


@router.post("/definable", response_model=DefinabilityReport)
def check_definable(payload: DefinabilityRequest) -> DefinabilityReport:
    with http_errors("checking definability"):
        dfa = resolve_language(payload, max_states=payload.max_states)
        return build_definability_report(
            dfa, explain=True, exhaustive=payload.exhaustive, max_states=payload.max_states
        )
