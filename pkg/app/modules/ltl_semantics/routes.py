from fastapi import APIRouter

from app.core.exceptions import http_errors
from app.modules.frontends.letters import parse_word
from app.modules.frontends.ltl import print_ltl
from app.modules.frontends.ltl_parser import parse_ltl
from app.modules.ltl_semantics.models import TemporalModel
from app.modules.ltl_semantics.schemas import EvalRequest, EvalResponse
from app.modules.ltl_semantics.service import evaluate, formula_vars

router = APIRouter()


@router.post("/eval", response_model=EvalResponse)
def evaluate_formula(payload: EvalRequest) -> EvalResponse:
    """Evaluate a formula at a position of a finite model."""
    with http_errors("evaluating formula"):
        formula = parse_ltl(payload.formula)
        model = TemporalModel.from_word(parse_word(payload.word), payload.universe)
        value = evaluate(model, payload.position, formula)
        return EvalResponse(value=value, formula=print_ltl(formula), variables=sorted(formula_vars(formula)))
