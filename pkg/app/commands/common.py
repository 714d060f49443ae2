import functools
import logging
from pathlib import Path
from typing import Annotated, Callable, List, Optional

import typer
from rich.console import Console

from app.config import build_run_config, get_settings
from app.exceptions import ConfigurationError, TraceabilityError
from app.schemas.links import MethodEnum
from app.schemas.run import RunConfig
from app.schemas.text import NormalizerEnum

logger = logging.getLogger(__name__)

console = Console(soft_wrap=True, highlight=False)
err_console = Console(stderr=True, soft_wrap=True, highlight=False)


def handle_errors(func: Callable) -> Callable:
    """Turn pipeline errors into `error[<stage>]: <message>` and the error's exit code."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except TraceabilityError as error:
            logger.debug("Command failed", exc_info=True)
            err_console.print(f"error[{error.stage}]: {error}", markup=False)
            raise typer.Exit(code=error.exit_code)

    return wrapper


def load_run_config(config: Optional[Path], **flags) -> RunConfig:
    return build_run_config(get_settings(), config_file=config, **flags)


def parse_float_list(raw: str, option: str) -> List[float]:
    """`"0.3,0.4"` -> [0.3, 0.4]; order is kept and duplicates are dropped."""
    values: List[float] = []
    for part in raw.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            value = float(part)
        except ValueError:
            raise ConfigurationError(f"{option}: {part!r} is not a number")
        if value not in values:
            values.append(value)
    if not values:
        raise ConfigurationError(f"{option}: expected a comma separated list of numbers")
    return values


HighOption = Annotated[
    Optional[Path],
    typer.Option("--high", help="High-level requirements, one `ID<TAB>text` per line."),
]
LowOption = Annotated[
    Optional[Path],
    typer.Option("--low", help="Low-level requirements, one `ID<TAB>text` per line."),
]
AnswersOption = Annotated[
    Optional[Path],
    typer.Option("--answers", help="Gold links, one `HLR_ID LLR_ID` per line."),
]
EmbeddingsOption = Annotated[
    Optional[Path],
    typer.Option(
        "--embeddings",
        help="Word vectors in text format. Required for the enhanced method.",
    ),
]
StopwordsOption = Annotated[
    Optional[Path],
    typer.Option(
        "--stopwords",
        help="Stopword list. Default: bundled English list (env TRACE_STOPWORDS_PATH).",
    ),
]
SimThresholdOption = Annotated[
    Optional[float],
    typer.Option(
        "--sim-threshold",
        help="Word cosines below this are dropped. Default: 0.5 (env TRACE_SIMILARITY_THRESHOLD).",
    ),
]
SynThresholdOption = Annotated[
    Optional[float],
    typer.Option(
        "--syn-threshold",
        help="Budget for the off-diagonal sum of each matrix row. "
        "Default: 1.0 (env TRACE_SYNONYM_THRESHOLD).",
    ),
]
LinkThresholdOption = Annotated[
    Optional[float],
    typer.Option(
        "--link-threshold",
        help="Keep pairs scoring at least this. Default: 0.3 (env TRACE_LINK_THRESHOLD).",
    ),
]
MethodOption = Annotated[
    Optional[MethodEnum],
    typer.Option(
        "--method", help="Scoring method. Default: enhanced (env TRACE_METHOD)."
    ),
]
NormalizerOption = Annotated[
    Optional[NormalizerEnum],
    typer.Option(
        "--normalizer",
        help="Token normalizer: lemma, porter or wordnet. Default: lemma (env TRACE_NORMALIZER).",
    ),
]
SweepStepOption = Annotated[
    Optional[float],
    typer.Option(
        "--sweep-step",
        help="Spacing of the link-threshold grid over [0, 1]. "
        "Default: 0.01 (env TRACE_SWEEP_STEP).",
    ),
]
WorkersOption = Annotated[
    Optional[int],
    typer.Option(
        "--workers",
        help="Worker threads for matrix construction and scoring. "
        "Default: 4 (env TRACE_WORKERS).",
    ),
]
ConfigOption = Annotated[
    Optional[Path],
    typer.Option(
        "--config",
        help="Experiment file (key=value or YAML); flags override it.",
    ),
]
OutOption = Annotated[
    Optional[Path],
    typer.Option("--out", help="Output file."),
]
