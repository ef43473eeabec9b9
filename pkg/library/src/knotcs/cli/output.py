"""Rendering of computed cells as text, CSV or JSON Lines."""

from __future__ import annotations

import json
from collections.abc import Sequence
from enum import StrEnum
from itertools import groupby

import click
import pandas as pd
from rich.console import Console
from rich.table import Table

from ..csinv import CSValue
from ..scripting.knotcs_table import CellResult, TableName
from .config import OutputFormat


class Column(StrEnum):
    N = "2n"
    K = "k"
    ALPHA0 = "alpha0"
    CS = "cs"
    MODULUS = "modulus"
    COVERING = "covering_cs"


ORBIFOLD_COLUMNS = (Column.N, Column.K, Column.CS, Column.COVERING)
KNOT_COLUMNS = (Column.N, Column.ALPHA0, Column.CS)
ALPHA0_COLUMNS = (Column.N, Column.ALPHA0)
CS_COLUMNS = (Column.N, Column.K, Column.CS, Column.MODULUS)
COVER_COLUMNS = (Column.N, Column.K, Column.COVERING)


def format_number(value: float, precision: int) -> str:
    """Format with precision significant digits, keeping trailing zeros."""
    return f"{value:#.{precision}g}"


def format_cs(value: CSValue, precision: int) -> str:
    return f"{format_number(value.value, precision)} (mod {value.modulus})"


def cell_fields(row: CellResult, precision: int) -> dict[Column, str]:
    """Return every column of row as text; missing values are empty."""

    def number(value: float | None) -> str:
        return "" if value is None else format_number(value, precision)

    return {
        Column.N: str(2 * row.n),
        Column.K: "" if row.k is None else str(row.k),
        Column.ALPHA0: number(row.alpha0),
        Column.CS: number(row.cs.value if row.cs else None),
        Column.MODULUS: "" if row.cs is None else str(row.cs.modulus),
        Column.COVERING: number(row.covering.value if row.covering else None),
    }


def cell_json(row: CellResult, precision: int) -> str:
    """Return row as one JSON object on a single line."""

    def number(value: float | None) -> float | None:
        return None if value is None else float(format_number(value, precision))

    record: dict[str, object] = {
        "n": row.n,
        "k": row.k,
        "alpha0": number(row.alpha0),
        "cs": number(row.cs.value if row.cs else None),
        "modulus_num": row.cs.modulus.numerator if row.cs else None,
        "modulus_den": row.cs.modulus.denominator if row.cs else None,
        "covering_cs": number(row.covering.value if row.covering else None),
    }
    if row.error is not None:
        record["error"] = row.error
    return json.dumps(record)


def emit_csv(rows: Sequence[CellResult], columns: Sequence[Column], precision: int) -> None:
    records = [cell_fields(row, precision) for row in rows]
    frame = pd.DataFrame(
        [[record[column] for column in columns] for record in records],
        columns=[str(column) for column in columns],
        dtype=str,
    )
    click.echo(frame.to_csv(index=False, lineterminator="\n"), nl=False)


def emit_json(rows: Sequence[CellResult], precision: int) -> None:
    for row in rows:
        click.echo(cell_json(row, precision))


def _build_table(
    rows: Sequence[CellResult],
    columns: Sequence[Column],
    precision: int,
    title: str | None = None,
) -> Table:
    table = Table(title=title)
    for column in columns:
        table.add_column(str(column), justify="left" if column is Column.N else "right")
    for row in rows:
        fields = cell_fields(row, precision)
        if row.error is not None:
            cells = [fields[c] if c in (Column.N, Column.K) else "" for c in columns]
            cells[-1] = f"[red]error: {row.error}[/red]"
            table.add_row(*cells)
            continue
        table.add_row(*(fields[column] for column in columns))
    return table


def emit_rows(
    rows: Sequence[CellResult],
    columns: Sequence[Column],
    output_format: OutputFormat,
    precision: int,
) -> None:
    """Emit rows as a single table in the requested format."""
    match output_format:
        case OutputFormat.CSV:
            emit_csv(rows, columns, precision)
        case OutputFormat.JSON:
            emit_json(rows, precision)
        case OutputFormat.TEXT:
            Console().print(_build_table(rows, columns, precision))


def emit_table(
    table: TableName,
    rows: Sequence[CellResult],
    output_format: OutputFormat,
    precision: int,
) -> None:
    """Emit a computed table; text output prints one block per n for tables 1-1 and 1-2."""
    columns = KNOT_COLUMNS if table is TableName.KNOTS else ORBIFOLD_COLUMNS
    if output_format is not OutputFormat.TEXT or table is TableName.KNOTS:
        emit_rows(rows, columns, output_format, precision)
        return
    letter = "X" if table is TableName.ORBIFOLDS_POSITIVE else "T"
    block_columns = (Column.K, Column.CS, Column.COVERING)
    console = Console()
    for n, block in groupby(rows, key=lambda row: row.n):
        console.print(_build_table(list(block), block_columns, precision, f"{letter}_{2 * n}"))
