from typing import List, Optional

from pydantic import BaseModel, Field

from app.core.config import settings
from app.modules.separation.schemas import SeparationWitnessReport


class IepRequest(BaseModel):
    premise: str = Field(..., description="LTL formula φ")
    conclusion: str = Field(..., description="LTL formula ψ")
    max_states: Optional[int] = Field(None, gt=0, description="Resource guard for every construction")
    exhaustive: bool = Field(False, description="Saturate all of S† instead of stopping at a witness")


class IepVerdict(BaseModel):
    schema_version: str = Field(default_factory=lambda: settings.REPORT_SCHEMA_VERSION)
    exists: bool = Field(..., description="Whether a Craig interpolant exists")
    entails: bool = Field(..., description="Whether the premise entails the conclusion")
    shared_variables: List[str] = Field(default_factory=list, description="ρ = vars(φ) ∩ vars(ψ)")
    premise_states: int = Field(..., description="States of the minimal DFA of L_φ")
    negated_conclusion_states: int = Field(..., description="States of the minimal DFA of L_¬ψ")
    product_states: int
    semigroup_size: int
    omega: int
    complete: bool = Field(True, description="Whether maximal_members covers all of S†")
    maximal_members: List[List[str]] = Field(
        default_factory=list, description="Maximal non-singleton members of S†, by witness word"
    )
    witness: Optional[SeparationWitnessReport] = None
    countermodel: Optional[str] = Field(None, description="Shortest model of φ & !ψ, if any")
