import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, field_validator


class MethodEnum(str, Enum):
    ENHANCED = "enhanced"
    PLAIN_VSM = "plain-vsm"


class CandidateLink(BaseModel):
    hlr_id: str = Field(..., min_length=1)
    llr_id: str = Field(..., min_length=1)
    score: float = Field(..., ge=0, le=1)

    model_config = ConfigDict(frozen=True)

    @field_validator("score")
    @classmethod
    def finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("Link score must be finite.")
        return value

    @property
    def pair(self) -> tuple:
        return self.hlr_id, self.llr_id


class LinkerConfig(BaseModel):
    link_threshold: float = Field(0.3, ge=0, le=1)
    method: MethodEnum = MethodEnum.ENHANCED

    model_config = ConfigDict(frozen=True)


class WordSimConfig(BaseModel):
    similarity_threshold: float = Field(0.5, ge=0, le=1)
    synonym_threshold: float = Field(1.0, gt=0)

    model_config = ConfigDict(frozen=True)
