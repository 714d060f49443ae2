from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from app.schemas.links import LinkerConfig, WordSimConfig
from app.schemas.text import NormalizerEnum


class RunConfig(BaseModel):
    """Everything one CLI invocation needs, after flags, config file and env are merged."""

    high: Optional[Path] = None
    low: Optional[Path] = None
    answers: Optional[Path] = None
    embeddings: Optional[Path] = None
    stopwords: Path

    wordsim: WordSimConfig = Field(default_factory=WordSimConfig)
    linker: LinkerConfig = Field(default_factory=LinkerConfig)

    normalizer: NormalizerEnum = NormalizerEnum.LEMMA
    min_token_length: int = Field(2, ge=1)
    sweep_step: float = Field(0.01, gt=0, le=1)
    workers: int = Field(1, ge=1)
    matrix_block_size: int = Field(512, ge=1)
    float_format: str = "%.6f"

    out: Optional[Path] = None

    model_config = ConfigDict(frozen=True)
