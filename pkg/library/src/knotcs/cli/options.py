"""Options shared by the commands."""

from __future__ import annotations

from collections.abc import Callable
from pathlib import Path
from typing import Any

import click

from .config import OutputFormat, RunConfig, load_run_config, resolve


def _nonzero(ctx: click.Context, param: click.Parameter, value: int | None) -> int | None:
    if value == 0:
        raise click.BadParameter("n = 0 is the unknot and has no hyperbolic structure")
    return value


def _even(ctx: click.Context, param: click.Parameter, value: int | None) -> int | None:
    if value is not None and (value < 2 or value % 2):
        raise click.BadParameter(f"must be even and at least 2, got {value}")
    return value


knot_option = click.option(
    "-n",
    "n",
    type=int,
    required=True,
    callback=_nonzero,
    help="Knot parameter n of C(2n,3), nonzero.",
)

order_option = click.option(
    "-k",
    "k",
    type=click.IntRange(min=3),
    required=True,
    help="Orbifold order k, the cone angle is 2pi/k.",
)


def run_options(func: Callable[..., Any]) -> Callable[..., Any]:
    """Add --config, --intervals, --format, --precision, --jobs and -v."""
    for option in reversed(
        [
            click.option(
                "--config",
                "config_file",
                type=click.Path(dir_okay=False, path_type=Path),
                default=None,
                help="YAML run configuration; flags override it.",
            ),
            click.option(
                "--intervals",
                type=int,
                default=None,
                callback=_even,
                help="Simpson intervals per segment (default: 10000).",
            ),
            click.option(
                "--format",
                "output_format",
                type=click.Choice([f.value for f in OutputFormat]),
                default=None,
                help="Output format (default: text).",
            ),
            click.option(
                "--precision",
                type=click.IntRange(min=1),
                default=None,
                help="Significant digits of printed values (default: 6).",
            ),
            click.option(
                "-j",
                "--jobs",
                type=click.IntRange(min=1),
                default=None,
                help="Worker processes for tables (default: 1).",
            ),
            click.option("-v", "--verbose", is_flag=True, default=False, help="Verbose mode."),
        ]
    ):
        func = option(func)
    return func


def load_config(
    config_file: Path | None,
    *,
    intervals: int | None,
    output_format: str | None,
    precision: int | None,
    jobs: int | None,
) -> RunConfig:
    """Merge the optional config file with the command-line flags."""
    base = load_run_config(config_file) if config_file is not None else RunConfig()
    return resolve(
        base,
        intervals=intervals,
        format=OutputFormat(output_format) if output_format is not None else None,
        precision=precision,
        jobs=jobs,
    )
