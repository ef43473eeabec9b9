"""Single-value commands: orbifold, covering and knot Chern-Simons invariants."""

from pathlib import Path

import click

from ..csinv import covering_from_orbifold, knot_cs, orbifold_cs
from ..geometry import geometric_branch
from ..scripting import knotcs_exception, knotcs_logging
from ..scripting.knotcs_table import CellResult
from . import cli
from .config import OutputFormat, RunConfig
from .options import knot_option, load_config, order_option, run_options
from .output import COVER_COLUMNS, CS_COLUMNS, KNOT_COLUMNS, emit_rows, format_cs


def _orbifold_row(n: int, k: int, config: RunConfig) -> CellResult:
    settings = config.settings
    orbifold = orbifold_cs(
        n,
        k,
        settings.quadrature,
        alpha0_tol=settings.alpha0_tol,
        settings=settings.tracking,
    )
    return CellResult(
        n=n,
        k=k,
        alpha0=geometric_branch(n, tol=settings.alpha0_tol, settings=settings.tracking).alpha0,
        cs=orbifold,
        covering=covering_from_orbifold(orbifold, k),
    )


def _setup(verbose: bool, config_file: Path | None, **flags) -> RunConfig:
    knotcs_logging.configure(verbose=verbose)
    return load_config(config_file, **flags)


@cli.command()
@knot_option
@order_option
@run_options
def cs(
    n: int,
    k: int,
    config_file: Path | None,
    intervals: int | None,
    output_format: str | None,
    precision: int | None,
    jobs: int | None,
    verbose: bool,
) -> None:
    """Print the Chern-Simons invariant of the orbifold X_{2n}(2pi/k)."""
    config = _setup(
        verbose,
        config_file,
        intervals=intervals,
        output_format=output_format,
        precision=precision,
        jobs=jobs,
    )
    interceptor = knotcs_exception.Interceptor()
    with interceptor:
        row = _orbifold_row(n, k, config)
        if config.format is OutputFormat.TEXT:
            assert row.cs is not None
            click.echo(format_cs(row.cs, config.precision))
        else:
            emit_rows([row], CS_COLUMNS, config.format, config.precision)
    raise SystemExit(interceptor.exitcode())


@cli.command()
@knot_option
@order_option
@run_options
def cover(
    n: int,
    k: int,
    config_file: Path | None,
    intervals: int | None,
    output_format: str | None,
    precision: int | None,
    jobs: int | None,
    verbose: bool,
) -> None:
    """Print the Chern-Simons invariant of the k-fold cyclic covering of X_{2n}(2pi/k)."""
    config = _setup(
        verbose,
        config_file,
        intervals=intervals,
        output_format=output_format,
        precision=precision,
        jobs=jobs,
    )
    interceptor = knotcs_exception.Interceptor()
    with interceptor:
        row = _orbifold_row(n, k, config)
        if config.format is OutputFormat.TEXT:
            assert row.covering is not None
            click.echo(format_cs(row.covering, config.precision))
        else:
            emit_rows([row], COVER_COLUMNS, config.format, config.precision)
    raise SystemExit(interceptor.exitcode())


@cli.command()
@knot_option
@run_options
def knot(
    n: int,
    config_file: Path | None,
    intervals: int | None,
    output_format: str | None,
    precision: int | None,
    jobs: int | None,
    verbose: bool,
) -> None:
    """Print the Chern-Simons invariant of the knot complement of T_{2n}."""
    config = _setup(
        verbose,
        config_file,
        intervals=intervals,
        output_format=output_format,
        precision=precision,
        jobs=jobs,
    )
    interceptor = knotcs_exception.Interceptor()
    with interceptor:
        settings = config.settings
        value = knot_cs(
            n,
            settings.quadrature,
            alpha0_tol=settings.alpha0_tol,
            settings=settings.tracking,
        )
        if config.format is OutputFormat.TEXT:
            click.echo(format_cs(value, config.precision))
        else:
            gd = geometric_branch(n, tol=settings.alpha0_tol, settings=settings.tracking)
            row = CellResult(n=n, k=None, alpha0=gd.alpha0, cs=value)
            emit_rows([row], KNOT_COLUMNS, config.format, config.precision)
    raise SystemExit(interceptor.exitcode())
