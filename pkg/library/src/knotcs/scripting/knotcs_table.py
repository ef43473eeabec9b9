"""Optional scripting extensions to compute whole tables of invariants."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from enum import StrEnum
from itertools import groupby

from rich.console import Console
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn, TimeElapsedColumn

from ..csinv import (
    CSValue,
    QuadratureSpec,
    covering_from_orbifold,
    knot_cs,
    orbifold_cs,
)
from ..errors import KnotCSError
from ..geometry import DEFAULT_ALPHA0_TOL, geometric_branch
from ..roots import DEFAULT_TOL, TrackSettings
from .knotcs_logging import log

ORBIFOLD_ORDERS = tuple(range(3, 11))


class TableName(StrEnum):
    """Tables of invariants the tool reproduces."""

    ORBIFOLDS_POSITIVE = "1-1"
    ORBIFOLDS_NEGATIVE = "1-2"
    KNOTS = "2"


@dataclass(frozen=True, kw_only=True)
class ComputeSettings:
    """Numerical knobs shared by every cell of a table."""

    intervals: int = 10000
    root_tol: float = DEFAULT_TOL
    alpha0_tol: float = DEFAULT_ALPHA0_TOL

    @property
    def quadrature(self) -> QuadratureSpec:
        return QuadratureSpec(intervals=self.intervals)

    @property
    def tracking(self) -> TrackSettings:
        return TrackSettings(tol=self.root_tol)


DEFAULT_SETTINGS = ComputeSettings()


@dataclass(frozen=True, kw_only=True)
class Cell:
    """One row of a table: an orbifold X_{2n}(2pi/k), or the knot T_{2n} when k is None."""

    n: int
    k: int | None = None


@dataclass(frozen=True, kw_only=True)
class CellResult:
    """Computed values of a cell; error is set when the cell failed."""

    n: int
    k: int | None
    alpha0: float | None = None
    cs: CSValue | None = None
    covering: CSValue | None = None
    error: str | None = None


@dataclass(frozen=True, kw_only=True)
class TableResult:
    """Result of computing a table, rows in table order."""

    table: TableName
    rows: tuple[CellResult, ...]
    elapsed: float

    @property
    def failed(self) -> tuple[CellResult, ...]:
        return tuple(row for row in self.rows if row.error is not None)


def table_cells(table: TableName) -> tuple[Cell, ...]:
    """Return the cells of a table in printed order."""
    match table:
        case TableName.ORBIFOLDS_POSITIVE:
            return tuple(Cell(n=n, k=k) for n in range(1, 10) for k in ORBIFOLD_ORDERS)
        case TableName.ORBIFOLDS_NEGATIVE:
            return tuple(Cell(n=n, k=k) for n in range(-2, -10, -1) for k in ORBIFOLD_ORDERS)
        case TableName.KNOTS:
            return tuple(Cell(n=n) for n in (*range(1, 10), *range(-1, -10, -1)))


def compute_cell(cell: Cell, settings: ComputeSettings = DEFAULT_SETTINGS) -> CellResult:
    """Compute one cell; knotcs errors become the cell's error message."""
    alpha0 = None
    try:
        gd = geometric_branch(cell.n, tol=settings.alpha0_tol, settings=settings.tracking)
        alpha0 = gd.alpha0
        if cell.k is None:
            value = knot_cs(
                cell.n,
                settings.quadrature,
                alpha0_tol=settings.alpha0_tol,
                settings=settings.tracking,
            )
            return CellResult(n=cell.n, k=None, alpha0=alpha0, cs=value)
        orbifold = orbifold_cs(
            cell.n,
            cell.k,
            settings.quadrature,
            alpha0_tol=settings.alpha0_tol,
            settings=settings.tracking,
        )
        return CellResult(
            n=cell.n,
            k=cell.k,
            alpha0=alpha0,
            cs=orbifold,
            covering=covering_from_orbifold(orbifold, cell.k),
        )
    except KnotCSError as exc:
        log.warning("cell n=%d k=%s... failure: %s", cell.n, cell.k, exc)
        return CellResult(n=cell.n, k=cell.k, alpha0=alpha0, error=str(exc))


def _compute_block(cells: tuple[Cell, ...], settings: ComputeSettings) -> list[CellResult]:
    """Compute cells sharing one n, so that a worker builds each branch once."""
    return [compute_cell(cell, settings) for cell in cells]


def run(
    table: TableName,
    *,
    settings: ComputeSettings = DEFAULT_SETTINGS,
    jobs: int = 1,
    progress: bool = False,
) -> TableResult:
    """Compute every cell of a table.

    Cells are grouped by n. With jobs > 1 the groups are spread over a
    process pool; rows always come back in table order.
    """
    cells = table_cells(table)
    blocks = [tuple(group) for _, group in groupby(cells, key=lambda cell: cell.n)]
    results: dict[Cell, CellResult] = {}
    t0 = time.monotonic()
    log.info("table %s with %d cells... start", table, len(cells))
    with Progress(
        TextColumn("table {task.description}"),
        BarColumn(),
        MofNCompleteColumn(),
        TimeElapsedColumn(),
        console=Console(stderr=True),
        disable=not progress,
    ) as bar:
        task_id = bar.add_task(str(table), total=len(cells))
        if jobs <= 1:
            for block in blocks:
                results.update(zip(block, _compute_block(block, settings), strict=True))
                bar.advance(task_id, len(block))
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                futures = {pool.submit(_compute_block, block, settings): block for block in blocks}
                for future in as_completed(futures):
                    block = futures[future]
                    results.update(zip(block, future.result(), strict=True))
                    bar.advance(task_id, len(block))
    elapsed = time.monotonic() - t0
    rows = tuple(results[cell] for cell in cells)
    failed = sum(row.error is not None for row in rows)
    log.info("table %s... ok (%.1fs, %d failed)", table, elapsed, failed)
    return TableResult(table=table, rows=rows, elapsed=elapsed)
