from abc import ABC, abstractmethod
from typing import List, Sequence


class TokenNormalizerInterface(ABC):
    """
    Interface for token normalizers.
    Maps every token to a base form; applying it twice must equal applying it once.
    """

    name: str = "normalizer"

    @abstractmethod
    def step(self, token: str) -> str:
        """
        Apply one reduction to a token, returning it unchanged when no rule fires.
        """
        pass

    def normalize(self, token: str) -> str:
        """
        Reduce a token to its fixed point under `step`.
        """
        current = token
        for _ in range(len(token) + 2):
            reduced = self.step(current)
            if reduced == current:
                return current
            current = reduced
        return current

    def normalize_all(self, tokens: Sequence[str]) -> List[str]:
        return [self.normalize(token) for token in tokens]
