import sys
from typing import Annotated

import click
import typer

from app.commands import (
    cmd_compare,
    cmd_eval,
    cmd_grid,
    cmd_matrix_inspect,
    cmd_stats,
    cmd_sweep,
    cmd_trace,
)
from app.config import configure_logging, get_settings

app = typer.Typer(
    name="req-trace",
    help="Recover trace links between high- and low-level requirements.",
    no_args_is_help=True,
    add_completion=False,
    pretty_exceptions_enable=False,
)


@app.callback()
def main(
    verbose: Annotated[
        bool, typer.Option("--verbose", "-v", help="Log debug detail to stderr.")
    ] = False,
    quiet: Annotated[
        bool, typer.Option("--quiet", "-q", help="Only log warnings and errors.")
    ] = False,
):
    level = get_settings().LOG_LEVEL
    if verbose:
        level = "DEBUG"
    elif quiet:
        level = "WARNING"
    configure_logging(level)


app.command("trace")(cmd_trace)
app.command("eval")(cmd_eval)
app.command("sweep")(cmd_sweep)
app.command("matrix-inspect")(cmd_matrix_inspect)
app.command("compare")(cmd_compare)
app.command("grid")(cmd_grid)
app.command("stats")(cmd_stats)


def run() -> None:
    """Console entry point; click usage errors exit with 1 instead of click's 2."""
    try:
        result = app(standalone_mode=False)
    except click.UsageError as error:
        error.show()
        sys.exit(1)
    except click.ClickException as error:
        error.show()
        sys.exit(error.exit_code)
    except click.Abort:
        sys.exit(1)
    sys.exit(result if isinstance(result, int) else 0)


if __name__ == "__main__":
    run()
