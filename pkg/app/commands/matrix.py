from typing import Annotated

import typer

from app.exceptions import UnknownTermError
from app.services.normalizers import get_normalizer
from app.services.pipeline import TracePipeline
from app.services.wordsim import WordSimilarityMatrix
from .common import (
    ConfigOption,
    EmbeddingsOption,
    HighOption,
    LowOption,
    NormalizerOption,
    SimThresholdOption,
    StopwordsOption,
    SynThresholdOption,
    WorkersOption,
    console,
    handle_errors,
    load_run_config,
)


def resolve_term(matrix: WordSimilarityMatrix, term: str, normalizer) -> int:
    """Vocabulary index of `term`, trying it verbatim and then in normalized form."""
    try:
        return matrix.term_index(term)
    except UnknownTermError:
        normalized = normalizer.normalize(term.lower())
        if normalized == term:
            raise
        return matrix.term_index(normalized)


@handle_errors
def cmd_matrix_inspect(
    term: Annotated[str, typer.Option("--term", help="Vocabulary term to inspect.")],
    k: Annotated[int, typer.Option("-k", help="Number of neighbors to list.")] = 10,
    high: HighOption = None,
    low: LowOption = None,
    embeddings: EmbeddingsOption = None,
    stopwords: StopwordsOption = None,
    sim_threshold: SimThresholdOption = None,
    syn_threshold: SynThresholdOption = None,
    normalizer: NormalizerOption = None,
    workers: WorkersOption = None,
    config: ConfigOption = None,
):
    """List the k strongest neighbors of a term with pre- and post-cap similarities."""
    cfg = load_run_config(
        config,
        high=high,
        low=low,
        embeddings=embeddings,
        stopwords=stopwords,
        sim_threshold=sim_threshold,
        syn_threshold=syn_threshold,
        normalizer=normalizer,
        workers=workers,
    )
    pipeline = TracePipeline(cfg)
    matrix = pipeline.matrix()
    index = resolve_term(matrix, term, get_normalizer(cfg.normalizer))
    vocab = pipeline.prepare().vectors.vocab

    console.print(
        f"{vocab.term(index)} (row {index}): off-diagonal sum "
        f"{matrix.row_offdiag_sum(index):.6f} post-cap, "
        f"{matrix.precap_row_sum(index):.6f} pre-cap, "
        f"synonym threshold {cfg.wordsim.synonym_threshold:g}"
    )
    neighbors = matrix.neighbors(index, k)
    if not neighbors:
        console.print("no neighbors")
        return
    for column, post, pre in neighbors:
        console.print(f"  {vocab.term(column)}\t{post:.6f}\t(pre-cap {pre:.6f})")
