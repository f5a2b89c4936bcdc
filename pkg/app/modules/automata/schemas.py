from typing import List, Optional

from pydantic import BaseModel, Field

from app.modules.automata.service import ProductMode
from app.modules.frontends.schemas import AutomatonDocument


class AutomatonRequest(BaseModel):
    automaton: AutomatonDocument
    max_states: Optional[int] = Field(None, gt=0, description="Resource guard for the construction")


class ProductRequest(BaseModel):
    left: AutomatonDocument
    right: AutomatonDocument
    mode: ProductMode = Field(ProductMode.INTERSECTION, description="Which pairs accept")
    max_states: Optional[int] = Field(None, gt=0)


class ProjectRequest(BaseModel):
    automaton: AutomatonDocument
    keep: List[str] = Field(..., description="Variables kept by the projection")


class AcceptsRequest(BaseModel):
    automaton: AutomatonDocument
    word: List[str] = Field(..., description="Letter names; an empty list is the empty word")


class AcceptsResponse(BaseModel):
    accepted: bool
    shortest_word: Optional[List[str]] = Field(None, description="Shortlex-least accepted word, if any")
