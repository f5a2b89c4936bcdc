from fastapi import APIRouter

# Import module routers
from app.modules.automata.routes import router as automata_router
from app.modules.iep.routes import router as iep_router
from app.modules.ltl2nfa.routes import router as ltl2nfa_router
from app.modules.ltl_semantics.routes import router as ltl_semantics_router
from app.modules.semigroup.routes import router as semigroup_router
from app.modules.separation.routes import router as separation_router

# Create main API router
api_router = APIRouter()

# Include module routers
api_router.include_router(ltl_semantics_router, prefix="/ltl", tags=["ltl"])
api_router.include_router(ltl2nfa_router, prefix="/ltl", tags=["ltl"])
api_router.include_router(automata_router, prefix="/automata", tags=["automata"])
api_router.include_router(semigroup_router, prefix="/semigroup", tags=["semigroup"])
api_router.include_router(separation_router, prefix="/separation", tags=["separation"])
api_router.include_router(iep_router, prefix="/iep", tags=["iep"])
