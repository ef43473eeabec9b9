"""Euclidean angle command."""

from pathlib import Path

import click

from ..geometry import find_alpha0
from ..scripting import knotcs_exception, knotcs_logging
from ..scripting.knotcs_table import CellResult
from . import cli
from .config import OutputFormat
from .options import knot_option, load_config, run_options
from .output import ALPHA0_COLUMNS, emit_rows, format_number


@cli.command()
@knot_option
@run_options
def alpha0(
    n: int,
    config_file: Path | None,
    intervals: int | None,
    output_format: str | None,
    precision: int | None,
    jobs: int | None,
    verbose: bool,
) -> None:
    """Print the Euclidean angle alpha0 of X_{2n}."""
    knotcs_logging.configure(verbose=verbose)
    config = load_config(
        config_file,
        intervals=intervals,
        output_format=output_format,
        precision=precision,
        jobs=jobs,
    )
    interceptor = knotcs_exception.Interceptor()
    with interceptor:
        value = find_alpha0(n, config.alpha0_tol, settings=config.settings.tracking)
        if config.format is OutputFormat.TEXT:
            click.echo(format_number(value, config.precision))
        else:
            row = CellResult(n=n, k=None, alpha0=value)
            emit_rows([row], ALPHA0_COLUMNS, config.format, config.precision)
    raise SystemExit(interceptor.exitcode())
