import logging
import math
from collections import Counter
from typing import Dict, List, Sequence

import numpy as np
import pandas as pd
from scipy import sparse

from app.exceptions import EmptyCorpusError, MissingVectorError
from app.schemas.requirements import LevelEnum, ProjectBundle
from app.schemas.vectors import IdfTable, TfIdfVector, Vocabulary

logger = logging.getLogger(__name__)


def build_vocabulary(docs: Sequence[Sequence[str]]) -> Vocabulary:
    """
    Union of all tokens, indexed in lexicographic order.

    Raises:
        EmptyCorpusError: no document contributes a token.
    """
    terms = {token for doc in docs for token in doc}
    if not terms:
        raise EmptyCorpusError()
    return Vocabulary.from_terms(terms)


def compute_idf(docs: Sequence[Sequence[str]], vocab: Vocabulary) -> IdfTable:
    """idf[t] = ln(N / df_t) with N the number of documents, unsmoothed."""
    doc_count = len(docs)
    df = np.zeros(vocab.n, dtype=np.int64)
    for doc in docs:
        for token in set(doc):
            index = vocab.get(token)
            if index is not None:
                df[index] += 1

    idf = [math.log(doc_count / count) if count else 0.0 for count in df.tolist()]
    return IdfTable(idf=idf, doc_count=max(doc_count, 1))


def vectorize(
    doc: Sequence[str], vocab: Vocabulary, idf: IdfTable, owner: str = ""
) -> TfIdfVector:
    """Raw term count times idf; zero weights and unknown tokens are not stored."""
    entries: Dict[int, float] = {}
    for token, count in Counter(doc).items():
        index = vocab.get(token)
        if index is None:
            continue
        weight = count * idf[index]
        if weight > 0:
            entries[index] = weight
    return TfIdfVector(owner=owner, n=vocab.n, entries=entries)


def stack_vectors(vectors: Sequence[TfIdfVector], n: int) -> sparse.csr_matrix:
    """Rows of a (len(vectors) x n) CSR matrix, one per vector."""
    if not vectors:
        return sparse.csr_matrix((0, n), dtype=np.float64)
    return sparse.vstack([vector.to_sparse() for vector in vectors], format="csr")


class CorpusVectors:
    """
    Shared term space of an HLR/LLR bundle and one TF-IDF vector per requirement.
    """

    def __init__(self, bundle: ProjectBundle):
        docs = [doc.tokens for doc in bundle.documents()]
        self.vocab = build_vocabulary(docs)
        self.idf = compute_idf(docs, self.vocab)
        self.high: Dict[str, TfIdfVector] = {
            doc.id: vectorize(doc.tokens, self.vocab, self.idf, owner=doc.id)
            for doc in bundle.high
        }
        self.low: Dict[str, TfIdfVector] = {
            doc.id: vectorize(doc.tokens, self.vocab, self.idf, owner=doc.id)
            for doc in bundle.low
        }
        zero = sum(vector.is_zero for vector in (*self.high.values(), *self.low.values()))
        logger.info(
            "Vectorized %d documents over a vocabulary of %d terms (%d all-zero)",
            len(docs),
            self.vocab.n,
            zero,
        )

    def vector(self, level: LevelEnum, doc_id: str) -> TfIdfVector:
        table = self.high if level is LevelEnum.HIGH else self.low
        try:
            return table[doc_id]
        except KeyError:
            raise MissingVectorError(f"No vector for {level.value} requirement {doc_id!r}")

    def vectors(self, level: LevelEnum, ids: Sequence[str]) -> List[TfIdfVector]:
        return [self.vector(level, doc_id) for doc_id in ids]

    def term_document_frame(self) -> pd.DataFrame:
        """Docs as rows (`High:ID` / `Low:ID`), terms as columns, TF-IDF weights as cells."""
        rows = [
            *((f"{LevelEnum.HIGH.value}:{key}", vec) for key, vec in self.high.items()),
            *((f"{LevelEnum.LOW.value}:{key}", vec) for key, vec in self.low.items()),
        ]
        matrix = stack_vectors([vector for _, vector in rows], self.vocab.n)
        return pd.DataFrame(
            matrix.toarray(),
            index=pd.Index([label for label, _ in rows], name="doc"),
            columns=list(self.vocab.terms),
        )
