from enum import Enum
from typing import FrozenSet, Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from app.exceptions import EmptyInputError


class LevelEnum(str, Enum):
    HIGH = "High"
    LOW = "Low"


class RequirementDoc(BaseModel):
    id: str = Field(..., min_length=1)
    level: LevelEnum
    text: str
    tokens: List[str] = Field(default_factory=list)

    model_config = ConfigDict(frozen=True)

    @field_validator("text")
    @classmethod
    def text_not_blank(cls, value: str) -> str:
        if not value.strip():
            raise ValueError("Requirement text is empty after trimming.")
        return value


class AnswerSet(BaseModel):
    """Gold trace links as (hlr_id, llr_id) pairs."""

    links: FrozenSet[Tuple[str, str]] = Field(default_factory=frozenset)

    model_config = ConfigDict(frozen=True)

    def __len__(self) -> int:
        return len(self.links)

    def __iter__(self) -> Iterator[Tuple[str, str]]:
        return iter(sorted(self.links))

    def __contains__(self, pair: object) -> bool:
        return pair in self.links


class ProjectBundle(BaseModel):
    high: List[RequirementDoc]
    low: List[RequirementDoc]
    answers: Optional[AnswerSet] = None

    model_config = ConfigDict(frozen=True)

    @property
    def pair_count(self) -> int:
        return len(self.high) * len(self.low)

    def documents(self) -> List[RequirementDoc]:
        return [*self.high, *self.low]

    def require_traceable(self) -> None:
        """Tracing needs at least one requirement on each side."""
        if not self.high:
            raise EmptyInputError("No high-level requirements loaded.")
        if not self.low:
            raise EmptyInputError("No low-level requirements loaded.")
