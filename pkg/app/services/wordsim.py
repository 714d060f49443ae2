import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy import sparse

from app.exceptions import (
    DimensionMismatchError,
    IndexOutOfRangeError,
    InvalidMatrixError,
    UnknownTermError,
)
from app.schemas.links import WordSimConfig
from app.schemas.vectors import Vocabulary
from .embeddings import EmbeddingTable

logger = logging.getLogger(__name__)


def _strip_diagonal(matrix: sparse.spmatrix) -> sparse.csr_matrix:
    """Fresh CSR copy without diagonal entries or explicit zeros."""
    coo = sparse.coo_matrix(matrix, dtype=np.float64)
    keep = (coo.row != coo.col) & (coo.data != 0)
    stripped = sparse.csr_matrix(
        (coo.data[keep], (coo.row[keep], coo.col[keep])), shape=coo.shape
    )
    stripped.sort_indices()
    return stripped


class WordSimilarityMatrix:
    """
    n x n word-similarity matrix with an implicit unit diagonal.

    Only nonzero off-diagonal entries are stored. `precap` keeps the floored entries
    before the synonym cap for inspection; it equals `offdiag` when no row was capped.
    """

    def __init__(
        self,
        offdiag: sparse.spmatrix,
        precap: Optional[sparse.spmatrix] = None,
        vocab: Optional[Vocabulary] = None,
    ):
        rows, cols = offdiag.shape
        if rows != cols:
            raise DimensionMismatchError(
                f"Similarity matrix must be square, got {offdiag.shape}", stage="wordsim"
            )
        if vocab is not None and vocab.n != rows:
            raise DimensionMismatchError(
                f"Matrix size {rows} does not match vocabulary size {vocab.n}",
                stage="wordsim",
            )
        offdiag = _strip_diagonal(offdiag)
        if offdiag.nnz and (offdiag.data.min() < 0 or offdiag.data.max() > 1):
            raise InvalidMatrixError("Off-diagonal similarities must lie in [0, 1]")

        if precap is None:
            precap = offdiag.copy()
        else:
            if precap.shape != offdiag.shape:
                raise DimensionMismatchError(
                    f"Pre-cap matrix {precap.shape} does not match {offdiag.shape}",
                    stage="wordsim",
                )
            precap = _strip_diagonal(precap)

        self._offdiag = offdiag
        self._precap = precap
        self.vocab = vocab

    @classmethod
    def identity(cls, n: int, vocab: Optional[Vocabulary] = None) -> "WordSimilarityMatrix":
        return cls(sparse.csr_matrix((n, n), dtype=np.float64), vocab=vocab)

    @classmethod
    def from_dense(
        cls, values: np.ndarray, vocab: Optional[Vocabulary] = None
    ) -> "WordSimilarityMatrix":
        """Build from a dense array; its diagonal is ignored."""
        return cls(sparse.csr_matrix(np.asarray(values, dtype=np.float64)), vocab=vocab)

    @property
    def n(self) -> int:
        return self._offdiag.shape[0]

    @property
    def offdiag(self) -> sparse.csr_matrix:
        return self._offdiag

    @property
    def precap(self) -> sparse.csr_matrix:
        return self._precap

    @property
    def nnz(self) -> int:
        return self._offdiag.nnz

    def _check_row(self, i: int) -> None:
        if not 0 <= i < self.n:
            raise IndexOutOfRangeError(f"Row {i} outside matrix of size {self.n}")

    def get(self, i: int, j: int) -> float:
        self._check_row(i)
        self._check_row(j)
        if i == j:
            return 1.0
        return float(self._offdiag[i, j])

    def row_offdiag_sum(self, i: int) -> float:
        self._check_row(i)
        start, end = self._offdiag.indptr[i], self._offdiag.indptr[i + 1]
        return float(self._offdiag.data[start:end].sum())

    def is_identity(self) -> bool:
        return self._offdiag.nnz == 0

    def apply(self, rows: sparse.spmatrix) -> sparse.csr_matrix:
        """
        Multiply the matrix into every row vector of `rows`: (sim . x)_i = sum_j sim_ij x_j.
        For an (r x n) input this is x + x @ offdiag.T.
        """
        rows = sparse.csr_matrix(rows, dtype=np.float64)
        if rows.shape[1] != self.n:
            raise DimensionMismatchError(
                f"Vector size {rows.shape[1]} does not match matrix size {self.n}",
                stage="simfunc",
            )
        if self._offdiag.nnz == 0:
            return rows.copy()
        return sparse.csr_matrix(rows + rows @ self._offdiag.T)

    def to_dense(self) -> np.ndarray:
        dense = self._offdiag.toarray()
        np.fill_diagonal(dense, 1.0)
        return dense

    def term_index(self, term: str) -> int:
        if self.vocab is None:
            raise UnknownTermError("Matrix has no vocabulary attached")
        index = self.vocab.get(term)
        if index is None:
            raise UnknownTermError(f"Term {term!r} is not in the vocabulary")
        return index

    def neighbors(self, i: int, k: int) -> List[Tuple[int, float, float]]:
        """
        Top-k off-diagonal entries of row i as (column, post-cap value, pre-cap value),
        highest post-cap first, ties broken by column.
        """
        self._check_row(i)
        start, end = self._offdiag.indptr[i], self._offdiag.indptr[i + 1]
        columns = self._offdiag.indices[start:end]
        values = self._offdiag.data[start:end]
        order = sorted(range(len(columns)), key=lambda p: (-values[p], columns[p]))
        return [
            (int(columns[p]), float(values[p]), float(self._precap[i, columns[p]]))
            for p in order[: max(k, 0)]
        ]

    def precap_row_sum(self, i: int) -> float:
        self._check_row(i)
        start, end = self._precap.indptr[i], self._precap.indptr[i + 1]
        return float(self._precap.data[start:end].sum())

    def capped_rows(self) -> int:
        diff = sparse.csr_matrix(self._precap - self._offdiag)
        diff.eliminate_zeros()
        return int(np.count_nonzero(np.diff(diff.indptr)))

    def triples(self) -> List[Tuple[int, int, float]]:
        """Stored off-diagonal entries as (row, column, value), row-major."""
        coo = self._offdiag.tocoo()
        entries = sorted(zip(coo.row.tolist(), coo.col.tolist(), coo.data.tolist()))
        return [(int(i), int(j), float(v)) for i, j, v in entries]


def cap_rows(raw: sparse.spmatrix, synonym_threshold: float) -> sparse.csr_matrix:
    """
    Rescale every row whose off-diagonal sum exceeds `synonym_threshold` so it sums
    to exactly that budget: sim_ij * synonym_threshold / sum_{j != i} sim_ij.
    Rows within budget are left untouched. The diagonal of `raw` is ignored.
    """
    if synonym_threshold <= 0:
        raise InvalidMatrixError("synonym_threshold must be positive")
    raw = _strip_diagonal(raw)
    sums = np.asarray(raw.sum(axis=1)).ravel()
    factors = np.ones_like(sums)
    over = sums > synonym_threshold
    factors[over] = synonym_threshold / sums[over]
    capped = sparse.csr_matrix(sparse.diags(factors) @ raw)
    capped.sort_indices()
    return capped


def _floored_block(
    unit: np.ndarray,
    start: int,
    stop: int,
    similarity_threshold: float,
) -> sparse.csr_matrix:
    """Clamped, floored cosines of rows start:stop against every embedded term."""
    block = unit[start:stop] @ unit.T
    np.clip(block, 0.0, 1.0, out=block)
    block[np.arange(stop - start), np.arange(start, stop)] = 0.0
    block[block < similarity_threshold] = 0.0
    return sparse.csr_matrix(block)


def build_matrix(
    vocab: Vocabulary,
    table: EmbeddingTable,
    cfg: WordSimConfig,
    workers: int = 1,
    block_size: int = 512,
) -> WordSimilarityMatrix:
    """
    Word-similarity matrix over `vocab`.

    Per row: clamped embedding cosines, entries below similarity_threshold zeroed, then
    the synonym_threshold cap. The diagonal is 1 and never floored or rescaled. Terms
    without a usable embedding keep a unit row and column. Rows are built in fixed
    blocks, so the result does not depend on `workers`.
    """
    positions, unit = table.unit_rows(vocab.terms)
    n, embedded = vocab.n, len(positions)

    blocks: Sequence[Tuple[int, int]] = [
        (start, min(start + max(block_size, 1), embedded))
        for start in range(0, embedded, max(block_size, 1))
    ]
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        parts = list(
            pool.map(
                lambda span: _floored_block(
                    unit, span[0], span[1], cfg.similarity_threshold
                ),
                blocks,
            )
        )

    if parts:
        local = sparse.vstack(parts, format="csr")
    else:
        local = sparse.csr_matrix((embedded, embedded), dtype=np.float64)

    # Scatter embedded-term rows/columns back into vocabulary positions.
    scatter = sparse.csr_matrix(
        (np.ones(embedded), (positions, np.arange(embedded))),
        shape=(n, embedded),
    )
    floored = sparse.csr_matrix(scatter @ local @ scatter.T)
    floored.sort_indices()
    capped = cap_rows(floored, cfg.synonym_threshold)

    matrix = WordSimilarityMatrix(capped, precap=floored, vocab=vocab)
    logger.info(
        "Built %dx%d word-similarity matrix: %d embedded terms, %d nonzeros, %d capped rows",
        n,
        n,
        embedded,
        matrix.nnz,
        matrix.capped_rows(),
    )
    return matrix


def row_offdiag_sum(m: WordSimilarityMatrix, i: int) -> float:
    return m.row_offdiag_sum(i)
