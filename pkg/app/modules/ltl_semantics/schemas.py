from typing import List, Optional

from pydantic import BaseModel, Field


class EvalRequest(BaseModel):
    formula: str = Field(..., description="LTL formula")
    word: str = Field(..., description="Model as a word literal, e.g. {p};{};{p};{}")
    position: int = Field(0, ge=0)
    universe: Optional[List[str]] = Field(None, description="Variable universe ρ; defaults to the word's variables")


class EvalResponse(BaseModel):
    value: bool
    formula: str = Field(..., description="The parsed formula, printed back")
    variables: List[str]
