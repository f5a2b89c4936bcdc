from typing import List, Optional

from pydantic import BaseModel, Field

from app.core.config import settings
from app.modules.frontends.schemas import LanguageInput


class SeparationRequest(BaseModel):
    left: LanguageInput
    right: LanguageInput
    max_states: Optional[int] = Field(None, gt=0)
    exhaustive: bool = Field(False, description="Saturate all of S† instead of stopping at a witness")


class DefinabilityRequest(LanguageInput):
    max_states: Optional[int] = Field(None, gt=0)
    exhaustive: bool = False


class SeparationWitnessReport(BaseModel):
    left_element: str
    right_element: str
    left_word: str
    right_word: str


class SeparationReport(BaseModel):
    schema_version: str = Field(default_factory=lambda: settings.REPORT_SCHEMA_VERSION)
    separable: bool
    left_states: int
    right_states: int
    product_states: int
    semigroup_size: int
    omega: int
    complete: bool = Field(True, description="Whether maximal_members covers all of S†")
    maximal_members: List[List[str]] = Field(default_factory=list)
    witness: Optional[SeparationWitnessReport] = None


class CounterReport(BaseModel):
    word: str
    state: int
    cycle_length: int


class DefinabilityReport(BaseModel):
    schema_version: str = Field(default_factory=lambda: settings.REPORT_SCHEMA_VERSION)
    definable: bool
    minimal_states: int
    semigroup_size: int
    omega: int
    counter: Optional[CounterReport] = None
    separation: Optional[SeparationReport] = Field(
        None, description="fo_separable(L, complement L), computed when explaining"
    )
