import math
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator
from scipy import sparse


class Vocabulary(BaseModel):
    """Lexicographically ordered term space of a corpus."""

    terms: Tuple[str, ...]

    model_config = ConfigDict(frozen=True)

    _index: Dict[str, int] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def sorted_and_unique(self) -> "Vocabulary":
        if list(self.terms) != sorted(set(self.terms)):
            raise ValueError("Vocabulary terms must be unique and sorted.")
        self._index = {term: i for i, term in enumerate(self.terms)}
        return self

    @classmethod
    def from_terms(cls, terms: Iterable[str]) -> "Vocabulary":
        return cls(terms=tuple(sorted(set(terms))))

    @property
    def n(self) -> int:
        return len(self.terms)

    def get(self, term: str) -> Optional[int]:
        return self._index.get(term)

    def term(self, i: int) -> str:
        return self.terms[i]

    def __contains__(self, term: object) -> bool:
        return term in self._index

    def __len__(self) -> int:
        return len(self.terms)


class TfIdfVector(BaseModel):
    owner: str = ""
    n: int = Field(..., ge=0)
    entries: Dict[int, float] = Field(default_factory=dict)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def positive_weights_in_range(self) -> "TfIdfVector":
        for index, weight in self.entries.items():
            if not 0 <= index < self.n:
                raise ValueError(f"Index {index} outside vocabulary of size {self.n}")
            if not (weight > 0 and math.isfinite(weight)):
                raise ValueError(f"Weight at {index} must be positive, got {weight}")
        return self

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def norm(self) -> float:
        return math.sqrt(sum(w * w for w in self.entries.values()))

    def scaled(self, factor: float) -> "TfIdfVector":
        return TfIdfVector(
            owner=self.owner,
            n=self.n,
            entries={i: w * factor for i, w in self.entries.items()},
        )

    def to_dense(self) -> np.ndarray:
        dense = np.zeros(self.n, dtype=np.float64)
        for index, weight in self.entries.items():
            dense[index] = weight
        return dense

    def to_sparse(self) -> sparse.csr_matrix:
        """1 x n row matrix."""
        indices = sorted(self.entries)
        data = [self.entries[i] for i in indices]
        return sparse.csr_matrix(
            (data, indices, [0, len(indices)]), shape=(1, self.n), dtype=np.float64
        )


class IdfTable(BaseModel):
    idf: List[float]
    doc_count: int = Field(..., ge=1)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def non_negative(self) -> "IdfTable":
        if any(value < 0 for value in self.idf):
            raise ValueError("IDF values must be non-negative.")
        return self

    def as_array(self) -> np.ndarray:
        return np.asarray(self.idf, dtype=np.float64)

    def __getitem__(self, index: int) -> float:
        return self.idf[index]
