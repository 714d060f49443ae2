from pathlib import Path

from app.datasets import write_sweep_csv
from app.services.evalkit import DEFAULT_HAYES_BANDS
from app.services.pipeline import TracePipeline
from .common import (
    AnswersOption,
    ConfigOption,
    EmbeddingsOption,
    HighOption,
    LowOption,
    MethodOption,
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
)

DEFAULT_SWEEP_PATH = Path("sweep.csv")


@handle_errors
def cmd_sweep(
    high: HighOption = None,
    low: LowOption = None,
    answers: AnswersOption = None,
    embeddings: EmbeddingsOption = None,
    stopwords: StopwordsOption = None,
    sim_threshold: SimThresholdOption = None,
    syn_threshold: SynThresholdOption = None,
    method: MethodOption = None,
    normalizer: NormalizerOption = None,
    sweep_step: SweepStepOption = None,
    workers: WorkersOption = None,
    config: ConfigOption = None,
    out: OutOption = None,
):
    """
    Evaluate every link threshold of the grid and write one metrics row per threshold
    to --out (default: sweep.csv). Requires --answers.
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
        method=method,
        normalizer=normalizer,
        sweep_step=sweep_step,
        workers=workers,
        out=out,
    )
    summary = TracePipeline(cfg).summarize(cfg.linker.method)

    out_path = cfg.out or DEFAULT_SWEEP_PATH
    write_sweep_csv(summary.curve, out_path, cfg.float_format)

    best = summary.best
    console.print(f"{len(summary.curve)} thresholds swept ({summary.method}) -> {out_path}")
    console.print(
        f"best F2: {best.f2:.3f} at threshold {best.threshold:g} "
        f"(precision {best.precision:.3f}, recall {best.recall:.3f}, "
        f"{best.link_count} links)"
    )
    console.print(f"Hayes level: {best.hayes_level.value}")
    for band in DEFAULT_HAYES_BANDS.bands:
        console.print(
            f"  {band.level.value}: recall >= {band.min_recall:g}, "
            f"precision >= {band.min_precision:g}"
        )
