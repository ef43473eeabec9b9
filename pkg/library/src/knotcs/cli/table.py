"""Table command."""

import sys
from pathlib import Path

import click

from ..scripting import knotcs_logging, knotcs_table
from ..scripting.knotcs_table import TableName
from . import cli
from .options import load_config, run_options
from .output import emit_table


@cli.command()
@click.argument("which", type=click.Choice([name.value for name in TableName]))
@run_options
def table(
    which: str,
    config_file: Path | None,
    intervals: int | None,
    output_format: str | None,
    precision: int | None,
    jobs: int | None,
    verbose: bool,
) -> None:
    """Compute table WHICH: 1-1 (X_{2n}, n > 0), 1-2 (T_{2n}, n < 0) or 2 (knots)."""
    knotcs_logging.configure(verbose=verbose)
    config = load_config(
        config_file,
        intervals=intervals,
        output_format=output_format,
        precision=precision,
        jobs=jobs,
    )
    result = knotcs_table.run(
        TableName(which),
        settings=config.settings,
        jobs=config.jobs,
        progress=sys.stderr.isatty(),
    )
    emit_table(result.table, result.rows, config.format, config.precision)

    if result.failed:
        click.echo(f"{len(result.failed)} cell(s) failed:", err=True)
        for row in result.failed:
            label = f"n={row.n}" if row.k is None else f"n={row.n} k={row.k}"
            click.echo(f"  {label}: {row.error}", err=True)
