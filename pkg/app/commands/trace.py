import logging
from pathlib import Path
from typing import Annotated, Optional

import typer

from app.datasets import write_links_csv, write_matrix_triples, write_term_matrix_csv
from app.schemas.links import MethodEnum
from app.services.evalkit import evaluate
from app.services.linker import filter_links
from app.services.pipeline import TracePipeline
from .common import (
    AnswersOption,
    ConfigOption,
    EmbeddingsOption,
    HighOption,
    LinkThresholdOption,
    LowOption,
    MethodOption,
    NormalizerOption,
    OutOption,
    SimThresholdOption,
    StopwordsOption,
    SynThresholdOption,
    WorkersOption,
    console,
    handle_errors,
    load_run_config,
)

logger = logging.getLogger(__name__)

DEFAULT_LINKS_PATH = Path("links.csv")


@handle_errors
def cmd_trace(
    high: HighOption = None,
    low: LowOption = None,
    answers: AnswersOption = None,
    embeddings: EmbeddingsOption = None,
    stopwords: StopwordsOption = None,
    sim_threshold: SimThresholdOption = None,
    syn_threshold: SynThresholdOption = None,
    link_threshold: LinkThresholdOption = None,
    method: MethodOption = None,
    normalizer: NormalizerOption = None,
    workers: WorkersOption = None,
    config: ConfigOption = None,
    out: OutOption = None,
    dump_terms: Annotated[
        Optional[Path],
        typer.Option("--dump-terms", help="Also write the term-document matrix as CSV."),
    ] = None,
    dump_matrix: Annotated[
        Optional[Path],
        typer.Option(
            "--dump-matrix",
            help="Also write the word-similarity matrix as `term_i,term_j,value` rows.",
        ),
    ] = None,
):
    """
    Run the full pipeline and write candidate links scoring at least the link threshold.

    Links go to --out (default: links.csv). When --answers is given the links are
    also evaluated.
    """
    cfg = load_run_config(
        config,
        high=high,
        low=low,
        answers=answers,
        embeddings=embeddings,
        stopwords=stopwords,
        sim_threshold=sim_threshold,
        syn_threshold=syn_threshold,
        link_threshold=link_threshold,
        method=method,
        normalizer=normalizer,
        workers=workers,
        out=out,
    )
    pipeline = TracePipeline(cfg)
    prepared = pipeline.prepare()
    scored = pipeline.score()
    links = filter_links(scored, cfg.linker.link_threshold)

    out_path = cfg.out or DEFAULT_LINKS_PATH
    write_links_csv(links, out_path, cfg.float_format)

    if dump_terms is not None:
        write_term_matrix_csv(
            prepared.vectors.term_document_frame(), dump_terms, cfg.float_format
        )
    if dump_matrix is not None:
        matrix = pipeline.matrix()
        write_matrix_triples(
            matrix.triples(), prepared.vectors.vocab, dump_matrix, cfg.float_format
        )

    console.print(f"method: {cfg.linker.method.value}")
    console.print(f"pairs scored: {len(scored)}")
    console.print(
        f"links written: {len(links)} (threshold {cfg.linker.link_threshold:g}) -> {out_path}"
    )
    console.print(f"vocabulary size: {prepared.vectors.vocab.n}")
    if prepared.table is not None:
        console.print(f"OOV rate: {prepared.oov_rate:.2%}")
    if cfg.linker.method is MethodEnum.ENHANCED:
        matrix = pipeline.matrix()
        console.print(
            f"matrix nonzeros: {matrix.nnz} ({matrix.capped_rows()} capped rows)"
        )

    if prepared.bundle.answers is not None and len(prepared.bundle.answers):
        console.print(evaluate(links, prepared.bundle.answers).render())
