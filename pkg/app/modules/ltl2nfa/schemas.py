from typing import Optional

from pydantic import BaseModel, Field


class LtlNfaRequest(BaseModel):
    formula: str = Field(..., description="LTL formula")
    max_states: Optional[int] = Field(None, gt=0)
