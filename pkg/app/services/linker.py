import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

import numpy as np

from app.exceptions import EmptyAnswerSetError
from app.schemas.links import CandidateLink, LinkerConfig, MethodEnum
from app.schemas.reports import SweepRow
from app.schemas.requirements import AnswerSet, LevelEnum, ProjectBundle
from .evalkit import confusion, report_from_counts
from .simfunc import pairwise_enhanced
from .vectorize import CorpusVectors, stack_vectors
from .wordsim import WordSimilarityMatrix

logger = logging.getLogger(__name__)


def default_grid(step: float = 0.01) -> List[float]:
    """Thresholds 0, step, 2*step, ... up to 1 inclusive."""
    if not 0 < step <= 1:
        raise ValueError("Sweep step must lie in (0, 1]")
    count = int(round(1 / step))
    grid = [round(i * step, 10) for i in range(count + 1) if i * step <= 1 + 1e-9]
    if grid[-1] < 1.0:
        grid.append(1.0)
    return grid


def score_all(
    bundle: ProjectBundle,
    vectors: CorpusVectors,
    matrix: Optional[WordSimilarityMatrix],
    cfg: LinkerConfig,
    workers: int = 1,
    chunk_size: int = 64,
) -> List[CandidateLink]:
    """
    Score every HLR x LLR pair, sorted by (hlr_id, llr_id).

    PlainVSM scores with the identity matrix. HLR rows are scored in fixed chunks,
    so parallel and sequential runs give identical values.

    Raises:
        MissingVectorError: a requirement has no vector.
    """
    n = vectors.vocab.n
    if cfg.method is MethodEnum.PLAIN_VSM or matrix is None:
        matrix = WordSimilarityMatrix.identity(n, vectors.vocab)

    high_ids = sorted(doc.id for doc in bundle.high)
    low_ids = sorted(doc.id for doc in bundle.low)
    high = stack_vectors(vectors.vectors(LevelEnum.HIGH, high_ids), n)
    low = stack_vectors(vectors.vectors(LevelEnum.LOW, low_ids), n)

    spans = [
        (start, min(start + chunk_size, len(high_ids)))
        for start in range(0, len(high_ids), chunk_size)
    ]
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        blocks = list(
            pool.map(
                lambda span: pairwise_enhanced(high[span[0] : span[1]], low, matrix),
                spans,
            )
        )
    scores = np.vstack(blocks) if blocks else np.zeros((0, len(low_ids)))

    links = [
        CandidateLink(hlr_id=hlr_id, llr_id=llr_id, score=float(scores[i, j]))
        for i, hlr_id in enumerate(high_ids)
        for j, llr_id in enumerate(low_ids)
    ]
    logger.info(
        "Scored %d pairs (%d HLR x %d LLR) with %s",
        len(links),
        len(high_ids),
        len(low_ids),
        cfg.method.value,
    )
    return links


def filter_links(
    scored: Sequence[CandidateLink], threshold: float
) -> List[CandidateLink]:
    """Pairs with score >= threshold, in input order."""
    return [link for link in scored if link.score >= threshold]


def sweep(
    scored: Sequence[CandidateLink],
    answers: AnswerSet,
    thresholds: Sequence[float],
) -> List[SweepRow]:
    """
    One metrics row per threshold, in the given threshold order.

    Raises:
        EmptyAnswerSetError: the answer set has no links.
    """
    if not len(answers):
        raise EmptyAnswerSetError()
    rows = []
    for threshold in thresholds:
        retrieved = filter_links(scored, threshold)
        report = report_from_counts(*confusion(retrieved, answers))
        rows.append(
            SweepRow(
                threshold=threshold,
                precision=report.precision,
                recall=report.recall,
                f1=report.f1,
                f2=report.f2,
                hayes_level=report.hayes_level,
                link_count=len(retrieved),
            )
        )
    return rows
