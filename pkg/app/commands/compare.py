import logging
from itertools import product
from typing import Annotated, List

import typer
from pydantic import ValidationError
from rich.table import Table

from app.datasets import write_compare_csv, write_grid_csv
from app.exceptions import ConfigurationError
from app.schemas.links import MethodEnum, WordSimConfig
from app.schemas.reports import MethodSummary
from app.services.pipeline import TracePipeline
from .common import (
    AnswersOption,
    ConfigOption,
    EmbeddingsOption,
    HighOption,
    LowOption,
    NormalizerOption,
    OutOption,
    SimThresholdOption,
    StopwordsOption,
    SweepStepOption,
    SynThresholdOption,
    WorkersOption,
    console,
    handle_errors,
    load_run_config,
    parse_float_list,
)

logger = logging.getLogger(__name__)

DEFAULT_SIM_GRID = "0.3,0.4,0.5,0.6,0.7,0.8"
DEFAULT_SYN_GRID = "0.5,1,2"


def _results_table(title: str, summaries: List[MethodSummary]) -> Table:
    table = Table(title=title)
    for column in ("Method", "Threshold", "Recall", "Precision", "F1", "F2", "Hayes level"):
        table.add_column(column)
    for summary in summaries:
        best = summary.best
        table.add_row(
            summary.method,
            f"{best.threshold:g}",
            f"{best.recall:.3f}",
            f"{best.precision:.3f}",
            f"{best.f1:.3f}",
            f"{best.f2:.3f}",
            best.hayes_level.value,
        )
    return table


@handle_errors
def cmd_compare(
    high: HighOption = None,
    low: LowOption = None,
    answers: AnswersOption = None,
    embeddings: EmbeddingsOption = None,
    stopwords: StopwordsOption = None,
    sim_threshold: SimThresholdOption = None,
    syn_threshold: SynThresholdOption = None,
    normalizer: NormalizerOption = None,
    sweep_step: SweepStepOption = None,
    workers: WorkersOption = None,
    config: ConfigOption = None,
    out: OutOption = None,
):
    """Enhanced similarity against the plain VSM baseline, each at its best-F2 threshold."""
    cfg = load_run_config(
        config,
        high=high,
        low=low,
        answers=answers,
        embeddings=embeddings,
        stopwords=stopwords,
        sim_threshold=sim_threshold,
        syn_threshold=syn_threshold,
        normalizer=normalizer,
        sweep_step=sweep_step,
        workers=workers,
        out=out,
    )
    pipeline = TracePipeline(cfg)
    summaries = [
        pipeline.summarize(MethodEnum.ENHANCED),
        pipeline.summarize(MethodEnum.PLAIN_VSM),
    ]
    console.print(_results_table("Best F2 per method", summaries))
    if cfg.out is not None:
        write_compare_csv(summaries, cfg.out, cfg.float_format)


@handle_errors
def cmd_grid(
    high: HighOption = None,
    low: LowOption = None,
    answers: AnswersOption = None,
    embeddings: EmbeddingsOption = None,
    stopwords: StopwordsOption = None,
    normalizer: NormalizerOption = None,
    sweep_step: SweepStepOption = None,
    workers: WorkersOption = None,
    config: ConfigOption = None,
    out: OutOption = None,
    sim_grid: Annotated[
        str,
        typer.Option("--sim-grid", help="Comma separated similarity thresholds."),
    ] = DEFAULT_SIM_GRID,
    syn_grid: Annotated[
        str,
        typer.Option("--syn-grid", help="Comma separated synonym thresholds."),
    ] = DEFAULT_SYN_GRID,
):
    """
    Search similarity and synonym thresholds, sweeping the link threshold for each
    pair, and report the best configuration next to the plain VSM baseline.
    """
    cfg = load_run_config(
        config,
        high=high,
        low=low,
        answers=answers,
        embeddings=embeddings,
        stopwords=stopwords,
        normalizer=normalizer,
        sweep_step=sweep_step,
        workers=workers,
        out=out,
    )
    try:
        configs = [
            WordSimConfig(similarity_threshold=sim, synonym_threshold=syn)
            for sim, syn in product(
                parse_float_list(sim_grid, "--sim-grid"),
                parse_float_list(syn_grid, "--syn-grid"),
            )
        ]
    except ValidationError as error:
        raise ConfigurationError(f"Invalid grid value: {error.errors()[0]['msg']}")

    pipeline = TracePipeline(cfg)
    summaries = []
    for wordsim in configs:
        summary = pipeline.summarize(MethodEnum.ENHANCED, wordsim)
        logger.info(
            "sim=%g syn=%g: best F2 %.3f at %g",
            wordsim.similarity_threshold,
            wordsim.synonym_threshold,
            summary.best.f2,
            summary.best.threshold,
        )
        summaries.append(summary)
    baseline = pipeline.summarize(MethodEnum.PLAIN_VSM)

    if cfg.out is not None:
        write_grid_csv(summaries, cfg.out, cfg.float_format)

    best = summaries[0]
    for summary in summaries[1:]:
        if summary.best.f2 > best.best.f2:
            best = summary
    console.print(
        f"best configuration: similarity threshold {best.similarity_threshold:g}, "
        f"synonym threshold {best.synonym_threshold:g}"
    )
    console.print(_results_table("Best F2 over the grid", [best, baseline]))
    delta = best.best.f2 - baseline.best.f2
    console.print(f"F2 over plain VSM: {delta:+.3f}")
