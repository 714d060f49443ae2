from enum import Enum
from typing import List, Optional, Tuple

import orjson
from pydantic import BaseModel, ConfigDict, Field, model_validator


class HayesLevelEnum(str, Enum):
    EXCELLENT = "Excellent"
    GOOD = "Good"
    ACCEPTABLE = "Acceptable"
    UNACCEPTABLE = "Unacceptable"


class HayesBand(BaseModel):
    level: HayesLevelEnum
    min_recall: float = Field(..., ge=0, le=1)
    min_precision: float = Field(..., ge=0, le=1)

    model_config = ConfigDict(frozen=True)


class HayesBands(BaseModel):
    """Acceptance regions for candidate-link generators, best level first."""

    bands: Tuple[HayesBand, ...] = (
        HayesBand(level=HayesLevelEnum.EXCELLENT, min_recall=0.8, min_precision=0.5),
        HayesBand(level=HayesLevelEnum.GOOD, min_recall=0.7, min_precision=0.3),
        HayesBand(level=HayesLevelEnum.ACCEPTABLE, min_recall=0.6, min_precision=0.2),
    )

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def strictly_decreasing(self) -> "HayesBands":
        for upper, lower in zip(self.bands, self.bands[1:]):
            if not (
                upper.min_recall > lower.min_recall
                and upper.min_precision > lower.min_precision
            ):
                raise ValueError("Hayes bands must be strictly decreasing.")
        return self


class EvalReport(BaseModel):
    true_positives: int = Field(..., ge=0, alias="tp")
    false_positives: int = Field(..., ge=0, alias="fp")
    false_negatives: int = Field(..., ge=0, alias="fn")
    precision: float = Field(..., ge=0, le=1)
    recall: float = Field(..., ge=0, le=1)
    f1: float = Field(..., ge=0, le=1)
    f2: float = Field(..., ge=0, le=1)
    hayes_level: HayesLevelEnum

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    def to_json(self) -> bytes:
        return orjson.dumps(
            self.model_dump(by_alias=True, mode="json"),
            option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2,
        )

    @classmethod
    def from_json(cls, payload: bytes | str) -> "EvalReport":
        return cls.model_validate(orjson.loads(payload))

    def render(self) -> str:
        return (
            f"TP={self.true_positives} FP={self.false_positives} "
            f"FN={self.false_negatives}\n"
            f"precision={self.precision:.3f} recall={self.recall:.3f} "
            f"F1={self.f1:.3f} F2={self.f2:.3f}\n"
            f"Hayes level: {self.hayes_level.value}"
        )


class SweepRow(BaseModel):
    threshold: float
    precision: float
    recall: float
    f1: float
    f2: float
    hayes_level: HayesLevelEnum
    link_count: int = 0

    model_config = ConfigDict(frozen=True)


class MethodSummary(BaseModel):
    """Best-F2 operating point of one scoring configuration."""

    method: str
    similarity_threshold: Optional[float] = None
    synonym_threshold: Optional[float] = None
    best: SweepRow
    curve: List[SweepRow] = Field(default_factory=list)

    model_config = ConfigDict(frozen=True)
