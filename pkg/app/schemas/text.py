from enum import Enum
from typing import FrozenSet

from pydantic import BaseModel, ConfigDict, field_validator


class NormalizerEnum(str, Enum):
    LEMMA = "lemma"
    PORTER = "porter"
    WORDNET = "wordnet"


class StopwordList(BaseModel):
    words: FrozenSet[str]

    model_config = ConfigDict(frozen=True)

    @field_validator("words")
    @classmethod
    def lowercase_and_non_empty(cls, value: FrozenSet[str]) -> FrozenSet[str]:
        if not value:
            raise ValueError("Stopword list is empty.")
        upper = sorted(word for word in value if word != word.lower())
        if upper:
            raise ValueError(f"Stopwords must be lowercase: {upper[:5]}")
        return value

    def __contains__(self, word: object) -> bool:
        return word in self.words

    def __len__(self) -> int:
        return len(self.words)
