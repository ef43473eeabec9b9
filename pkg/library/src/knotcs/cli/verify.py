"""Verify command."""

import click
from rich.console import Console
from rich.table import Table

from ..scripting import knotcs_logging, knotcs_verify
from ..scripting.knotcs_verify import VerifyResult
from . import cli


def _build_table(result: VerifyResult) -> Table:
    table = Table()
    table.add_column("Check", style="cyan")
    table.add_column("Result")
    table.add_column("Detail")
    for check in result.checks:
        status = "[green]pass[/green]" if check.passed else "[red]FAIL[/red]"
        table.add_row(check.name, status, check.detail)
    return table


@cli.command()
@click.option("--quick", is_flag=True, default=False, help="Only check n in {-2, -1, 1, 2}.")
@click.option(
    "--perturb",
    type=float,
    default=0.0,
    hidden=True,
    help="Add this to the constant coefficient of every polynomial (negative control).",
)
@click.option(
    "--intervals",
    type=int,
    default=knotcs_verify.VERIFY_INTERVALS,
    show_default=True,
    help="Simpson intervals for the modulus check.",
)
@click.option("-v", "--verbose", is_flag=True, default=False, help="Verbose mode.")
def verify(quick: bool, perturb: float, intervals: int, verbose: bool) -> None:
    """Run the self-consistency checks and print a pass/fail summary."""
    knotcs_logging.configure(verbose=verbose)
    result = knotcs_verify.run(quick=quick, perturb=perturb, intervals=intervals)
    Console().print(_build_table(result))
    passed = sum(check.passed for check in result.checks)
    click.echo(f"{passed}/{len(result.checks)} check(s) passed in {result.elapsed:.1f}s.")
    if not result.passed:
        raise SystemExit(1)
