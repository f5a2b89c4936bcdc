from fastapi import APIRouter

from app.core.exceptions import http_errors
from app.modules.frontends.ltl_parser import parse_ltl
from app.modules.iep.schemas import IepRequest, IepVerdict
from app.modules.iep.service import interpolant_exists

router = APIRouter()


@router.post("", response_model=IepVerdict)
def check_interpolant(payload: IepRequest) -> IepVerdict:
    """Decide whether the premise and conclusion have a Craig interpolant."""
    with http_errors("deciding interpolant existence"):
        return interpolant_exists(
            parse_ltl(payload.premise),
            parse_ltl(payload.conclusion),
            max_states=payload.max_states,
            exhaustive=payload.exhaustive,
        )
