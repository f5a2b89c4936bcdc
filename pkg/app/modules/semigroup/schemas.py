from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from app.core.config import settings
from app.modules.frontends.schemas import LanguageInput


class SemigroupRequest(LanguageInput):
    syntactic: bool = Field(True, description="Minimize first, giving the syntactic semigroup")
    include_table: bool = Field(False, description="Attach the Cayley table as CSV")
    max_states: Optional[int] = Field(None, gt=0)


class ElementReport(BaseModel):
    id: int
    label: str
    word: str
    idempotent: bool
    index: int
    period: int
    accepting: bool


class SemigroupReport(BaseModel):
    schema_version: str = Field(default_factory=lambda: settings.REPORT_SCHEMA_VERSION)
    size: int
    omega: int
    aperiodic: bool
    associative: bool
    generators: Dict[str, str] = Field(..., description="letter -> element label")
    elements: List[ElementReport]
    cayley_csv: Optional[str] = None
