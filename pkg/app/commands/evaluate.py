from pathlib import Path
from typing import Annotated, Optional

import typer

from app.datasets import load_answer_set, load_links, write_report_json
from app.services.evalkit import evaluate
from .common import console, handle_errors


@handle_errors
def cmd_eval(
    links: Annotated[
        Path,
        typer.Option(
            "--links", help="Retrieved links: a links CSV or an answer-format file."
        ),
    ],
    answers: Annotated[
        Path, typer.Option("--answers", help="Gold links, one `HLR_ID LLR_ID` per line.")
    ],
    json_out: Annotated[
        Optional[Path],
        typer.Option("--json-out", help="Also write the report as JSON."),
    ] = None,
):
    """Compare retrieved links against a gold answer set."""
    report = evaluate(load_links(links), load_answer_set(answers))
    console.print(report.render())
    if json_out is not None:
        write_report_json(report, json_out)
