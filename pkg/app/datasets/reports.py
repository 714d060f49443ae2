import io
import logging
from pathlib import Path
from typing import List, Sequence

import pandas as pd

from app.exceptions import IoFailure, MalformedLinkError
from app.schemas.links import CandidateLink
from app.schemas.reports import EvalReport, MethodSummary, SweepRow
from app.schemas.vectors import Vocabulary
from .corpus import _content_lines

logger = logging.getLogger(__name__)

LINK_COLUMNS = ["hlr_id", "llr_id", "score"]
SWEEP_COLUMNS = ["threshold", "precision", "recall", "f1", "f2"]
GRID_COLUMNS = [
    "similarity_threshold",
    "synonym_threshold",
    "threshold",
    "precision",
    "recall",
    "f1",
    "f2",
    "hayes_level",
]
COMPARE_COLUMNS = ["method", "threshold", "recall", "precision", "f1", "f2", "hayes_level"]


def _write_frame(frame: pd.DataFrame, path: Path, float_format: str, **kwargs) -> None:
    try:
        frame.to_csv(
            path,
            float_format=float_format,
            lineterminator="\n",
            encoding="utf-8",
            **{"index": False, **kwargs},
        )
    except OSError as error:
        raise IoFailure(f"Cannot write {path}: {error}")
    logger.debug("Wrote %d rows to %s", len(frame), path)


def write_links_csv(
    links: Sequence[CandidateLink], path: Path, float_format: str = "%.6f"
) -> None:
    frame = pd.DataFrame(
        [link.model_dump() for link in links], columns=LINK_COLUMNS
    )
    _write_frame(frame, path, float_format)


def write_sweep_csv(
    rows: Sequence[SweepRow], path: Path, float_format: str = "%.6f"
) -> None:
    frame = pd.DataFrame(
        [row.model_dump(include=set(SWEEP_COLUMNS)) for row in rows],
        columns=SWEEP_COLUMNS,
    )
    _write_frame(frame, path, float_format)


def write_grid_csv(
    summaries: Sequence[MethodSummary], path: Path, float_format: str = "%.6f"
) -> None:
    records = [
        {
            "similarity_threshold": summary.similarity_threshold,
            "synonym_threshold": summary.synonym_threshold,
            **summary.best.model_dump(include=set(SWEEP_COLUMNS)),
            "hayes_level": summary.best.hayes_level.value,
        }
        for summary in summaries
    ]
    _write_frame(pd.DataFrame(records, columns=GRID_COLUMNS), path, float_format)


def write_compare_csv(
    summaries: Sequence[MethodSummary], path: Path, float_format: str = "%.6f"
) -> None:
    records = [
        {
            "method": summary.method,
            **summary.best.model_dump(include=set(SWEEP_COLUMNS)),
            "hayes_level": summary.best.hayes_level.value,
        }
        for summary in summaries
    ]
    _write_frame(pd.DataFrame(records, columns=COMPARE_COLUMNS), path, float_format)


def write_report_json(report: EvalReport, path: Path) -> None:
    try:
        Path(path).write_bytes(report.to_json() + b"\n")
    except OSError as error:
        raise IoFailure(f"Cannot write {path}: {error}", stage="evalkit")


def write_term_matrix_csv(
    frame: pd.DataFrame, path: Path, float_format: str = "%.6f"
) -> None:
    """Term-document matrix: docs as rows, terms as columns."""
    _write_frame(frame, path, float_format, index=True)


def write_matrix_triples(
    triples: Sequence[tuple], vocab: Vocabulary, path: Path, float_format: str = "%.6f"
) -> None:
    frame = pd.DataFrame(
        [(vocab.term(i), vocab.term(j), value) for i, j, value in triples],
        columns=["term_i", "term_j", "value"],
    )
    _write_frame(frame, path, float_format)


def load_links(path: Path) -> List[tuple]:
    """
    Retrieved links as (hlr_id, llr_id) pairs, from either a links CSV with a
    `hlr_id,llr_id,score` header or an answer-format file.

    Raises:
        IoFailure: the file cannot be read.
        MalformedLinkError: a row lacks one of the two ids.
    """
    lines = list(_content_lines(path))
    if lines and lines[0][1].replace(" ", "").lower().startswith("hlr_id,llr_id"):
        # Parse the same comment-free lines the header check looked at.
        content = io.StringIO("\n".join(line for _, line in lines))
        try:
            frame = pd.read_csv(
                content,
                dtype={"hlr_id": str, "llr_id": str},
                keep_default_na=False,
                skipinitialspace=True,
            )
        except pd.errors.ParserError as error:
            raise MalformedLinkError(f"{path}: cannot parse links CSV: {error}")
        pairs = []
        for (line_no, _), hlr_id, llr_id in zip(
            lines[1:], frame["hlr_id"], frame["llr_id"]
        ):
            if not hlr_id or not llr_id:
                raise MalformedLinkError(f"{path}:{line_no}: missing hlr_id or llr_id")
            pairs.append((hlr_id, llr_id))
        return pairs

    pairs = []
    for line_no, line in lines:
        fields = line.split()
        if len(fields) < 2:
            raise MalformedLinkError(f"{path}:{line_no}: expected 'HLR_ID LLR_ID'")
        pairs.append((fields[0], fields[1]))
    return pairs
