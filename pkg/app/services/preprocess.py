import logging
import re
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import ValidationError

from app.exceptions import ConfigurationError, IoFailure
from app.schemas.requirements import ProjectBundle, RequirementDoc
from app.schemas.text import NormalizerEnum, StopwordList
from .interfaces import TokenNormalizerInterface
from .normalizers import RuleLemmatizer, get_normalizer

logger = logging.getLogger(__name__)

# Unicode letters only: digits, underscores and punctuation split tokens.
TOKEN_PATTERN = re.compile(r"[^\W\d_]+")

_default_lemmatizer = RuleLemmatizer()


def tokenize(text: str, min_length: int = 2) -> List[str]:
    """Lowercased alphabetic tokens in order; shorter than `min_length` are dropped."""
    return [
        token
        for token in TOKEN_PATTERN.findall(text.lower())
        if len(token) >= min_length
    ]


def remove_stopwords(tokens: Sequence[str], stopwords: StopwordList) -> List[str]:
    return [token for token in tokens if token not in stopwords]


def lemmatize(
    tokens: Sequence[str], normalizer: Optional[TokenNormalizerInterface] = None
) -> List[str]:
    return (normalizer or _default_lemmatizer).normalize_all(tokens)


def load_stopwords(path: Path) -> StopwordList:
    """
    Read a stopword file: one word per line, `#` comments and blank lines skipped.

    Raises:
        IoFailure: the file cannot be read.
        ConfigurationError: the file yields no usable words.
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            words = {
                line.strip().lower()
                for line in f
                if line.strip() and not line.lstrip().startswith("#")
            }
    except (OSError, UnicodeDecodeError) as error:
        raise IoFailure(f"Cannot read stopwords {path}: {error}", stage="preprocess")

    try:
        return StopwordList(words=frozenset(words))
    except ValidationError:
        raise ConfigurationError(f"Stopword file {path} contains no words")


class TextPreprocessor:
    """
    Tokenize, drop stopwords, then normalize every token to its base form.
    """

    def __init__(
        self,
        stopwords: StopwordList,
        normalizer: NormalizerEnum | str = NormalizerEnum.LEMMA,
        min_token_length: int = 2,
        workers: int = 1,
    ):
        self.stopwords = stopwords
        self.normalizer = get_normalizer(normalizer)
        self.min_token_length = min_token_length
        self.workers = max(1, workers)

    def preprocess(self, text: str) -> List[str]:
        tokens = tokenize(text, self.min_token_length)
        tokens = remove_stopwords(tokens, self.stopwords)
        return lemmatize(tokens, self.normalizer)

    def preprocess_docs(self, docs: Sequence[RequirementDoc]) -> List[RequirementDoc]:
        """Return copies of `docs` with tokens filled; order is preserved."""
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            token_lists = list(pool.map(self.preprocess, [doc.text for doc in docs]))
        return [
            doc.model_copy(update={"tokens": tokens})
            for doc, tokens in zip(docs, token_lists)
        ]

    def preprocess_bundle(self, bundle: ProjectBundle) -> ProjectBundle:
        high = self.preprocess_docs(bundle.high)
        low = self.preprocess_docs(bundle.low)
        empty = [doc.id for doc in (*high, *low) if not doc.tokens]
        if empty:
            logger.warning(
                "%d requirement(s) are empty after preprocessing: %s",
                len(empty),
                ", ".join(empty[:10]),
            )
        logger.info(
            "Preprocessed %d HLR and %d LLR with the %s normalizer",
            len(high),
            len(low),
            self.normalizer.name,
        )
        return bundle.model_copy(update={"high": high, "low": low})
