from fastapi import APIRouter

from app.core.exceptions import http_errors
from app.modules.automata import service as automata_service
from app.modules.automata.schemas import (
    AcceptsRequest,
    AcceptsResponse,
    AutomatonRequest,
    ProductRequest,
    ProjectRequest,
)
from app.modules.frontends.automaton_io import automaton_to_document, document_to_automaton
from app.modules.frontends.schemas import AutomatonDocument

router = APIRouter()


@router.post("/determinize", response_model=AutomatonDocument)
def determinize_automaton(payload: AutomatonRequest) -> AutomatonDocument:
    with http_errors("determinizing automaton"):
        automaton = document_to_automaton(payload.automaton)
        return automaton_to_document(automata_service.determinize(automaton, max_states=payload.max_states))


@router.post("/minimize", response_model=AutomatonDocument)
def minimize_automaton(payload: AutomatonRequest) -> AutomatonDocument:
    with http_errors("minimizing automaton"):
        dfa = automata_service.as_dfa(document_to_automaton(payload.automaton), max_states=payload.max_states)
        return automaton_to_document(automata_service.minimize(dfa))


@router.post("/complement", response_model=AutomatonDocument)
def complement_automaton(payload: AutomatonRequest) -> AutomatonDocument:
    with http_errors("complementing automaton"):
        dfa = automata_service.as_dfa(document_to_automaton(payload.automaton), max_states=payload.max_states)
        return automaton_to_document(automata_service.complement(dfa))


@router.post("/product", response_model=AutomatonDocument)
def product_automaton(payload: ProductRequest) -> AutomatonDocument:
    """Synchronous product; ``mode`` selects intersection, union or difference marking."""
    with http_errors("building product"):
        left = automata_service.as_dfa(document_to_automaton(payload.left), max_states=payload.max_states)
        right = automata_service.as_dfa(document_to_automaton(payload.right), max_states=payload.max_states)
        return automaton_to_document(
            automata_service.product(left, right, payload.mode, max_states=payload.max_states)
        )


@router.post("/project", response_model=AutomatonDocument)
def project_automaton(payload: ProjectRequest) -> AutomatonDocument:
    with http_errors("projecting automaton"):
        return automaton_to_document(automata_service.project(document_to_automaton(payload.automaton), payload.keep))


@router.post("/accepts", response_model=AcceptsResponse)
def accepts_word(payload: AcceptsRequest) -> AcceptsResponse:
    with http_errors("checking membership"):
        automaton = document_to_automaton(payload.automaton)
        shortest = automata_service.shortest_word(automaton)
        return AcceptsResponse(
            accepted=automata_service.accepts(automaton, payload.word),
            shortest_word=None if shortest is None else list(shortest),
        )
