import math

import numpy as np
from scipy import sparse

from app.exceptions import DimensionMismatchError
from app.schemas.vectors import TfIdfVector
from .wordsim import WordSimilarityMatrix


def _check_same_space(a: TfIdfVector, b: TfIdfVector) -> None:
    if a.n != b.n:
        raise DimensionMismatchError(
            f"Vectors live in different spaces ({a.n} vs {b.n})", stage="simfunc"
        )


def cosine(a: TfIdfVector, b: TfIdfVector) -> float:
    """Plain cosine; 0 when either vector is all-zero."""
    _check_same_space(a, b)
    if a.is_zero or b.is_zero:
        return 0.0
    small, large = (a, b) if len(a.entries) <= len(b.entries) else (b, a)
    dot = sum(
        weight * large.entries[index]
        for index, weight in small.entries.items()
        if index in large.entries
    )
    if dot == 0:
        return 0.0
    return min(1.0, dot / (a.norm() * b.norm()))


def _row_cosine(x: sparse.csr_matrix, y: sparse.csr_matrix) -> float:
    norms = math.sqrt(x.multiply(x).sum()) * math.sqrt(y.multiply(y).sum())
    if norms == 0:
        return 0.0
    return min(1.0, float(x.multiply(y).sum()) / norms)


def enhanced_similarity(
    a: TfIdfVector, b: TfIdfVector, m: WordSimilarityMatrix
) -> float:
    """(cos(A, sim . B) + cos(B, sim . A)) / 2; 0 when either vector is all-zero."""
    _check_same_space(a, b)
    if a.n != m.n:
        raise DimensionMismatchError(
            f"Vector size {a.n} does not match matrix size {m.n}", stage="simfunc"
        )
    if a.is_zero or b.is_zero:
        return 0.0
    row_a, row_b = a.to_sparse(), b.to_sparse()
    forward = _row_cosine(row_a, m.apply(row_b))
    backward = _row_cosine(row_b, m.apply(row_a))
    return (forward + backward) / 2


def _row_norms(rows: sparse.csr_matrix) -> np.ndarray:
    return np.sqrt(np.asarray(rows.multiply(rows).sum(axis=1)).ravel())


def _safe_divide(numerator: np.ndarray, denominator: np.ndarray) -> np.ndarray:
    out = np.zeros_like(numerator)
    np.divide(numerator, denominator, out=out, where=denominator > 0)
    return np.minimum(out, 1.0)


def pairwise_enhanced(
    high: sparse.csr_matrix, low: sparse.csr_matrix, m: WordSimilarityMatrix
) -> np.ndarray:
    """
    Enhanced similarity of every (high row, low row) pair as a dense
    (len(high) x len(low)) array. Rows are independent, so splitting `high`
    into chunks yields identical values.
    """
    if high.shape[1] != m.n or low.shape[1] != m.n:
        raise DimensionMismatchError(
            f"Vector sizes {high.shape[1]}/{low.shape[1]} do not match matrix size {m.n}",
            stage="simfunc",
        )
    high_mapped = m.apply(high)
    low_mapped = m.apply(low)

    forward = np.asarray((high @ low_mapped.T).todense())
    backward = np.asarray((high_mapped @ low.T).todense())

    high_norm, low_norm = _row_norms(high), _row_norms(low)
    high_mapped_norm, low_mapped_norm = _row_norms(high_mapped), _row_norms(low_mapped)

    forward = _safe_divide(forward, np.outer(high_norm, low_mapped_norm))
    backward = _safe_divide(backward, np.outer(high_mapped_norm, low_norm))
    return (forward + backward) / 2


def enhanced_similarity_dense_oracle(
    a: TfIdfVector, b: TfIdfVector, m: WordSimilarityMatrix
) -> float:
    """Reference computation with dense vectors and naive O(n^2) products."""
    n = m.n
    dense_m = m.to_dense().tolist()
    x, y = a.to_dense().tolist(), b.to_dense().tolist()

    def matvec(vector):
        return [sum(dense_m[i][j] * vector[j] for j in range(n)) for i in range(n)]

    def dense_cosine(u, v):
        nu = math.sqrt(sum(value * value for value in u))
        nv = math.sqrt(sum(value * value for value in v))
        if nu == 0 or nv == 0:
            return 0.0
        return sum(p * q for p, q in zip(u, v)) / (nu * nv)

    if not any(x) or not any(y):
        return 0.0
    return (dense_cosine(x, matvec(y)) + dense_cosine(y, matvec(x))) / 2
