from fastapi import APIRouter

from app.core.exceptions import http_errors
from app.modules.frontends.automaton_io import automaton_to_document
from app.modules.frontends.ltl_parser import parse_ltl
from app.modules.frontends.schemas import AutomatonDocument
from app.modules.ltl2nfa.schemas import LtlNfaRequest
from app.modules.ltl2nfa.service import ltl_to_nfa

router = APIRouter()


@router.post("/nfa", response_model=AutomatonDocument)
def compile_formula(payload: LtlNfaRequest) -> AutomatonDocument:
    """Compile a formula to an NFA over 2^vars."""
    with http_errors("compiling formula"):
        return automaton_to_document(ltl_to_nfa(parse_ltl(payload.formula), max_states=payload.max_states))
