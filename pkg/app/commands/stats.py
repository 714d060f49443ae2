from app.services.pipeline import TracePipeline
from .common import (
    AnswersOption,
    ConfigOption,
    EmbeddingsOption,
    HighOption,
    LowOption,
    NormalizerOption,
    StopwordsOption,
    console,
    handle_errors,
    load_run_config,
)


@handle_errors
def cmd_stats(
    high: HighOption = None,
    low: LowOption = None,
    answers: AnswersOption = None,
    embeddings: EmbeddingsOption = None,
    stopwords: StopwordsOption = None,
    normalizer: NormalizerOption = None,
    config: ConfigOption = None,
):
    """Dataset shape: requirement counts, gold links, candidate pairs and vocabulary."""
    cfg = load_run_config(
        config,
        high=high,
        low=low,
        answers=answers,
        embeddings=embeddings,
        stopwords=stopwords,
        normalizer=normalizer,
    )
    prepared = TracePipeline(cfg).prepare(require_embeddings=False)
    bundle = prepared.bundle
    empty = sum(1 for doc in bundle.documents() if not doc.tokens)

    console.print(f"HLR: {len(bundle.high)}")
    console.print(f"LLR: {len(bundle.low)}")
    if bundle.answers is not None:
        console.print(f"gold links: {len(bundle.answers)}")
    console.print(f"candidate pairs: {bundle.pair_count}")
    console.print(f"vocabulary size: {prepared.vectors.vocab.n}")
    console.print(f"empty after preprocessing: {empty}")
    if prepared.table is not None:
        console.print(f"OOV rate: {prepared.oov_rate:.2%}")
