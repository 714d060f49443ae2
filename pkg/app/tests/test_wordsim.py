import numpy as np
import pytest
from scipy import sparse

from app.exceptions import IndexOutOfRangeError, InvalidMatrixError, UnknownTermError
from app.schemas import Vocabulary, WordSimConfig
from app.services.embeddings import EmbeddingTable
from app.services.wordsim import WordSimilarityMatrix, build_matrix, cap_rows


def random_raw(rng: np.random.Generator, n: int, density: float) -> np.ndarray:
    values = rng.random((n, n))
    values[rng.random((n, n)) > density] = 0.0
    np.fill_diagonal(values, 0.0)
    return values


@pytest.fixture
def table() -> EmbeddingTable:
    return EmbeddingTable(
        2,
        {
            "authenticate": np.array([1.0, 0.1]),
            "login": np.array([0.9, 0.2]),
            "signin": np.array([0.95, 0.15]),
            "archive": np.array([0.1, 1.0]),
            "blank": np.array([0.0, 0.0]),
        },
    )


@pytest.fixture
def vocab() -> Vocabulary:
    return Vocabulary.from_terms(
        ["archive", "authenticate", "blank", "football", "login", "signin"]
    )


class TestCapRows:
    """Test the synonym threshold row cap"""

    def test_cap_property(self, rng):
        """Test every capped row sums to at most the budget and matches the rescale"""
        for _ in range(500):
            n = int(rng.integers(2, 12))
            synonym_threshold = float(rng.choice([0.25, 0.5, 1.0, 2.0]))
            raw = random_raw(rng, n, density=float(rng.uniform(0.2, 1.0)))
            capped = cap_rows(sparse.csr_matrix(raw), synonym_threshold).toarray()

            sums = raw.sum(axis=1)
            for i in range(n):
                assert capped[i].sum() <= synonym_threshold + 1e-9
                expected = raw[i]
                if sums[i] > synonym_threshold:
                    expected = raw[i] * synonym_threshold / sums[i]
                np.testing.assert_allclose(capped[i], expected, atol=1e-12)

    def test_row_within_budget_untouched(self):
        """Test rows under the budget keep their values"""
        raw = np.array([[0.0, 0.3, 0.2], [0.6, 0.0, 0.7], [0.0, 0.0, 0.0]])
        capped = cap_rows(sparse.csr_matrix(raw), 1.0).toarray()
        np.testing.assert_allclose(capped[0], raw[0])
        np.testing.assert_allclose(capped[1], [0.6 / 1.3, 0.0, 0.7 / 1.3])
        np.testing.assert_allclose(capped[2], 0.0)

    def test_row_rescaled_to_budget(self):
        """Test a row summing to 2 is halved under a budget of 1"""
        raw = np.zeros((4, 4))
        raw[0, 1:] = [0.6, 0.6, 0.8]
        capped = cap_rows(sparse.csr_matrix(raw), 1.0).toarray()
        np.testing.assert_allclose(capped[0], [0.0, 0.3, 0.3, 0.4])
        assert capped[0].sum() == pytest.approx(1.0)
        np.testing.assert_allclose(capped[1:], 0.0)

    def test_non_positive_budget(self):
        """Test the budget must be positive"""
        with pytest.raises(InvalidMatrixError):
            cap_rows(sparse.csr_matrix((2, 2)), 0.0)


class TestWordSimilarityMatrix:
    """Test matrix invariants and accessors"""

    def test_identity(self):
        """Test the identity has a unit diagonal and no off-diagonal entries"""
        matrix = WordSimilarityMatrix.identity(4)
        assert matrix.is_identity()
        np.testing.assert_array_equal(matrix.to_dense(), np.eye(4))

    def test_diagonal_is_implicit(self):
        """Test a dense diagonal is ignored and read back as 1"""
        matrix = WordSimilarityMatrix.from_dense(np.array([[0.3, 0.5], [0.0, 7.0]]))
        assert matrix.get(0, 0) == 1.0
        assert matrix.get(1, 1) == 1.0
        assert matrix.get(0, 1) == 0.5
        assert matrix.nnz == 1

    def test_out_of_range_values(self):
        """Test off-diagonal values outside [0, 1] are rejected"""
        with pytest.raises(InvalidMatrixError):
            WordSimilarityMatrix.from_dense(np.array([[1.0, 1.5], [0.0, 1.0]]))

    def test_row_index_out_of_range(self):
        """Test row access outside the matrix"""
        matrix = WordSimilarityMatrix.identity(3)
        with pytest.raises(IndexOutOfRangeError):
            matrix.row_offdiag_sum(3)
        with pytest.raises(IndexError):
            matrix.get(-1, 0)

    def test_unknown_term(self, vocab):
        """Test term lookup outside the vocabulary"""
        matrix = WordSimilarityMatrix.identity(vocab.n, vocab)
        with pytest.raises(UnknownTermError):
            matrix.term_index("crawler")


class TestBuildMatrix:
    """Test matrix construction from embeddings"""

    def test_floor_and_unit_rows(self, vocab, table):
        """Test floored cosines, and unit rows for terms without embeddings"""
        matrix = build_matrix(vocab, table, WordSimConfig(similarity_threshold=0.9, synonym_threshold=10))
        auth, login = vocab.get("authenticate"), vocab.get("login")
        assert matrix.get(auth, login) == pytest.approx(table.word_cosine("authenticate", "login"))
        assert matrix.get(auth, vocab.get("archive")) == 0.0
        for term in ("football", "blank"):
            index = vocab.get(term)
            assert matrix.row_offdiag_sum(index) == 0.0
            assert matrix.to_dense()[:, index].sum() == 1.0

    def test_cap_applied(self, vocab, table):
        """Test a capped row keeps its pre-cap values for inspection"""
        matrix = build_matrix(vocab, table, WordSimConfig(similarity_threshold=0.5, synonym_threshold=0.5))
        auth = vocab.get("authenticate")
        assert matrix.precap_row_sum(auth) > 0.5
        assert matrix.row_offdiag_sum(auth) == pytest.approx(0.5)
        assert matrix.capped_rows() >= 3
        neighbors = matrix.neighbors(auth, k=10)
        assert {vocab.term(column) for column, _, _ in neighbors} == {"login", "signin"}
        for column, post, pre in neighbors:
            assert post < pre

    def test_entries_follow_embedding_cosines(self, rng):
        """Test every entry is the floored cosine, rescaled only in over-budget rows"""
        for _ in range(20):
            terms = [f"w{i}" for i in range(int(rng.integers(3, 15)))]
            table = EmbeddingTable(
                4, {term: rng.normal(size=4) for term in terms if rng.random() < 0.8}
            )
            vocab = Vocabulary.from_terms(terms)
            cfg = WordSimConfig(
                similarity_threshold=float(rng.uniform(0.05, 0.9)),
                synonym_threshold=float(rng.choice([0.5, 1.0, 3.0])),
            )
            matrix = build_matrix(vocab, table, cfg)

            floored = np.zeros((vocab.n, vocab.n))
            for i, first in enumerate(vocab.terms):
                for j, second in enumerate(vocab.terms):
                    cosine = table.word_cosine(first, second)
                    if i != j and cosine is not None and cosine >= cfg.similarity_threshold:
                        floored[i, j] = cosine
            for i in range(vocab.n):
                total = floored[i].sum()
                assert matrix.precap_row_sum(i) == pytest.approx(total, abs=1e-9)
                scale = 1.0 if total <= cfg.synonym_threshold else cfg.synonym_threshold / total
                for j in range(vocab.n):
                    expected = 1.0 if i == j else floored[i, j] * scale
                    assert matrix.get(i, j) == pytest.approx(expected, abs=1e-9)

    def test_threshold_one_gives_identity(self, vocab, table):
        """Test a similarity threshold of 1 keeps only exact duplicates"""
        matrix = build_matrix(vocab, table, WordSimConfig(similarity_threshold=1.0))
        assert matrix.is_identity()

    def test_block_and_worker_independence(self, rng):
        """Test block size and worker count do not change the matrix"""
        terms = [f"term{i:03d}" for i in range(40)]
        table = EmbeddingTable(
            5, {term: rng.normal(size=5) for term in terms if term != "term007"}
        )
        vocab = Vocabulary.from_terms(terms)
        cfg = WordSimConfig(similarity_threshold=0.3, synonym_threshold=1.0)
        reference = build_matrix(vocab, table, cfg, workers=1, block_size=512)
        for workers, block_size in [(1, 3), (4, 7), (8, 1)]:
            other = build_matrix(vocab, table, cfg, workers=workers, block_size=block_size)
            np.testing.assert_allclose(other.to_dense(), reference.to_dense(), atol=1e-15)
        assert reference.row_offdiag_sum(vocab.get("term007")) == 0.0

    def test_neighbors_and_triples(self, vocab, table):
        """Test top-k ordering and row-major triples"""
        matrix = build_matrix(vocab, table, WordSimConfig(similarity_threshold=0.9, synonym_threshold=10))
        auth = vocab.get("authenticate")
        top = matrix.neighbors(auth, k=1)
        assert len(top) == 1
        assert vocab.term(top[0][0]) == "signin"
        assert matrix.neighbors(auth, k=50) == matrix.neighbors(auth, k=2)
        triples = matrix.triples()
        assert triples == sorted(triples)
        assert all(i != j and 0 < value <= 1 for i, j, value in triples)
