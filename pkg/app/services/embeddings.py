import itertools
import logging
from pathlib import Path
from typing import Container, Dict, Iterable, Iterator, List, Optional, Tuple

import numpy as np

from app.exceptions import (
    DimensionMismatchError,
    EmptyInputError,
    IoFailure,
    MalformedRecordError,
)

logger = logging.getLogger(__name__)


class EmbeddingTable:
    """
    Immutable token -> dense vector map of one fixed dimension.
    Tokens are stored lowercase.
    """

    def __init__(self, dim: int, vectors: Dict[str, np.ndarray]):
        if dim <= 0:
            raise DimensionMismatchError(f"Embedding dimension must be positive, got {dim}")
        self._dim = dim
        self._vectors: Dict[str, np.ndarray] = {}
        for token, vector in vectors.items():
            array = np.asarray(vector, dtype=np.float64)
            if array.shape != (dim,):
                raise DimensionMismatchError(
                    f"Vector for {token!r} has shape {array.shape}, expected ({dim},)"
                )
            array.setflags(write=False)
            self._vectors[token.lower()] = array

    @property
    def dim(self) -> int:
        return self._dim

    def __len__(self) -> int:
        return len(self._vectors)

    def __contains__(self, token: object) -> bool:
        return isinstance(token, str) and token.lower() in self._vectors

    def tokens(self) -> List[str]:
        return sorted(self._vectors)

    def lookup(self, token: str) -> Optional[np.ndarray]:
        return self._vectors.get(token.lower())

    def word_cosine(self, t1: str, t2: str) -> Optional[float]:
        """Cosine of two embeddings; None when either token is OOV or a zero vector."""
        first, second = self.lookup(t1), self.lookup(t2)
        if first is None or second is None:
            return None
        norms = float(np.linalg.norm(first)) * float(np.linalg.norm(second))
        if norms == 0.0:
            return None
        value = float(np.dot(first, second)) / norms
        return max(-1.0, min(1.0, value))

    def unit_rows(self, terms: Iterable[str]) -> Tuple[List[int], np.ndarray]:
        """
        Positions of `terms` that have a usable embedding, and their L2-normalized vectors
        stacked in the same order.
        """
        positions, rows = [], []
        for position, term in enumerate(terms):
            vector = self.lookup(term)
            if vector is None:
                continue
            norm = float(np.linalg.norm(vector))
            if norm == 0.0:
                continue
            positions.append(position)
            rows.append(vector / norm)
        if not rows:
            return [], np.zeros((0, self._dim), dtype=np.float64)
        return positions, np.vstack(rows)


def _header_dim(parts: List[str]) -> Optional[int]:
    if len(parts) == 2 and all(part.isdigit() for part in parts):
        return int(parts[1])
    return None


def _split_header(
    lines: Iterable[str],
) -> Tuple[Optional[int], Iterator[Tuple[int, List[str]]]]:
    """
    Declared dimension and the numbered, non-blank records that follow it.

    A leading `<count> <dim>` line is a header only when dim > 1 and the next record
    has dim values; otherwise it is an ordinary one-value record such as `7 1`.
    """
    numbered = (
        (line_no, parts)
        for line_no, line in enumerate(lines, start=1)
        if (parts := line.split())
    )
    first = next(numbered, None)
    if first is None:
        return None, iter(())
    declared = _header_dim(first[1])
    if declared is None or declared < 2:
        return None, itertools.chain([first], numbered)
    second = next(numbered, None)
    if second is None:
        return declared, iter(())
    if len(second[1]) - 1 == declared:
        return declared, itertools.chain([second], numbered)
    return None, itertools.chain([first, second], numbered)


def load_embeddings(
    path: Path, vocab_filter: Optional[Container[str]] = None
) -> EmbeddingTable:
    """
    Load a word2vec/GloVe style text file.

    An optional `<count> <dim>` header is accepted. The dimension is taken from the
    header or the first record and enforced on every following record. With
    `vocab_filter`, only tokens it contains are kept.

    Raises:
        IoFailure: the file cannot be opened or decoded.
        MalformedRecordError: a record has no values or a value is not a number.
        DimensionMismatchError: a record length differs from the established dimension.
        EmptyInputError: the file holds no records.
    """
    vectors: Dict[str, np.ndarray] = {}
    records = 0
    try:
        with open(path, "r", encoding="utf-8") as f:
            dim, rows = _split_header(f)
            for line_no, parts in rows:
                if len(parts) < 2:
                    raise MalformedRecordError(
                        f"{path}:{line_no}: record has no vector values",
                        stage="embeddings",
                    )
                width = len(parts) - 1
                if dim is None:
                    dim = width
                elif width != dim:
                    raise DimensionMismatchError(
                        f"{path}:{line_no}: expected {dim} values, found {width}"
                    )
                records += 1

                token = parts[0].lower()
                if token in vectors:
                    continue
                if vocab_filter is not None and token not in vocab_filter:
                    continue
                try:
                    vectors[token] = np.asarray(parts[1:], dtype=np.float64)
                except ValueError:
                    raise MalformedRecordError(
                        f"{path}:{line_no}: non-numeric vector value for {token!r}",
                        stage="embeddings",
                    )
    except (OSError, UnicodeDecodeError) as error:
        raise IoFailure(f"Cannot read embeddings {path}: {error}", stage="embeddings")

    if dim is None or records == 0:
        raise EmptyInputError(f"{path}: no embedding records", stage="embeddings")

    logger.info(
        "Loaded %d of %d embedding records (dim=%d) from %s",
        len(vectors),
        records,
        dim,
        path,
    )
    return EmbeddingTable(dim, vectors)


def lookup(table: EmbeddingTable, token: str) -> Optional[np.ndarray]:
    return table.lookup(token)


def word_cosine(table: EmbeddingTable, t1: str, t2: str) -> Optional[float]:
    return table.word_cosine(t1, t2)


def oov_rate(terms: Iterable[str], table: Optional[EmbeddingTable]) -> float:
    """Fraction of `terms` without a usable embedding (1.0 without a table)."""
    terms = list(terms)
    if not terms:
        return 0.0
    if table is None:
        return 1.0
    positions, _ = table.unit_rows(terms)
    return 1.0 - len(positions) / len(terms)
