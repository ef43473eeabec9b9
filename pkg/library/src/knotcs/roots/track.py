"""Continuation of polynomial roots along the cone angle.

`sweep` is the workhorse: it carries a complete root set of P_{2n}
through a monotone list of cone angles, inserting substeps where
needed, and checks after each accepted step that the watched roots
moved less than half their distance to the nearest other root. Roots
keep their index across steps, so a watched index names the same
continuous branch from the first angle to the last.

`track` is the single-root front end returning a `RootPath`.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from enum import StrEnum

import numpy as np

from ..errors import DomainError, TrackingError
from ..rmpoly import RileyEvaluator, build_rm_poly
from .aberth import DEFAULT_TOL, RESIDUAL_LIMIT, all_roots, solve_batch

log = logging.getLogger("knotcs.roots")

SEED_TOLERANCE = 1e-8
"""Maximum relative distance between a seed and the nearest root."""


class BranchTag(StrEnum):
    """Role of a tracked root component."""

    GEOMETRIC = "geometric"
    CONJUGATE = "conjugate-partner"
    OTHER = "other"


@dataclass(frozen=True, kw_only=True)
class TrackSettings:
    """Step control for root continuation."""

    initial_step: float = math.pi / 2000
    min_step: float = 1e-7
    tol: float = DEFAULT_TOL

    def __post_init__(self) -> None:
        if not 0 < self.min_step <= self.initial_step:
            raise DomainError(
                f"invalid step bounds: min_step={self.min_step}, initial_step={self.initial_step}"
            )
        if self.tol <= 0:
            raise DomainError(f"root tolerance must be positive, got {self.tol}")


DEFAULT_TRACK_SETTINGS = TrackSettings()


@dataclass(frozen=True, kw_only=True, eq=False)
class Sweep:
    """Every accepted state of a sweep, in visiting order."""

    alphas: np.ndarray
    roots: np.ndarray
    """Root sets, shape (len(alphas), degree); column i is one branch."""
    on_grid: np.ndarray
    """True where the state is one of the requested angles."""
    steps: np.ndarray
    """Absolute size of each accepted step."""

    def grid_roots(self) -> np.ndarray:
        return self.roots[self.on_grid]


@dataclass(frozen=True, kw_only=True)
class RootPath:
    """A tracked root component of P_{2n}."""

    n: int
    alphas: tuple[float, ...]
    values: tuple[complex, ...]
    tag: BranchTag
    steps: tuple[float, ...]
    root_sets: tuple[tuple[complex, ...], ...]
    """Full root set at every sample, the tracked root included."""

    @property
    def start(self) -> complex:
        return self.values[0]

    @property
    def end(self) -> complex:
        return self.values[-1]

    def __len__(self) -> int:
        return len(self.values)


def meridian(alpha: float | np.ndarray) -> complex | np.ndarray:
    """Return M = exp(i alpha / 2)."""
    return np.exp(0.5j * np.asarray(alpha, dtype=float))


def separations(roots: np.ndarray, watch: Sequence[int]) -> np.ndarray:
    """Distance from each watched root to the nearest other root.

    Works on a single root set (d,) or a stack of them (K, d).
    """
    roots = np.asarray(roots, dtype=complex)
    stacked = np.atleast_2d(roots)
    watched = stacked[:, list(watch)]
    dist = np.abs(watched[:, :, None] - stacked[:, None, :])
    for col, index in enumerate(watch):
        dist[:, col, index] = np.inf
    result = np.min(dist, axis=-1)
    return result if roots.ndim > 1 else result[0]


def match_roots(previous: np.ndarray, current: np.ndarray) -> np.ndarray:
    """Reorder current so that current[i] continues previous[i].

    Pairs are assigned greedily in increasing order of distance, which
    settles conflicts in favor of the closer pair.
    """
    dist = np.abs(previous[:, None] - current[None, :])
    order = np.argsort(dist, axis=None, kind="stable")
    size = previous.size
    taken_prev = np.zeros(size, dtype=bool)
    taken_curr = np.zeros(size, dtype=bool)
    assignment = np.empty(size, dtype=int)
    assigned = 0
    for flat in order:
        i, j = divmod(int(flat), size)
        if taken_prev[i] or taken_curr[j]:
            continue
        assignment[i] = j
        taken_prev[i] = taken_curr[j] = True
        assigned += 1
        if assigned == size:
            break
    return current[assignment]


def sweep(
    n: int,
    alphas: Sequence[float] | np.ndarray,
    start: np.ndarray,
    *,
    watch: Sequence[int],
    settings: TrackSettings = DEFAULT_TRACK_SETTINGS,
) -> Sweep:
    """Track the root set start (at alphas[0]) through every angle in alphas.

    Raises:
        DomainError: if alphas is not strictly monotone.
        TrackingError: if a step below settings.min_step is still ambiguous.
    """
    grid = np.asarray(alphas, dtype=float)
    if grid.size > 1:
        diffs = np.diff(grid)
        if not (np.all(diffs > 0) or np.all(diffs < 0)):
            raise DomainError("sweep angles must be strictly monotone")

    watch = list(watch)
    roots = np.array(start, dtype=complex, copy=True)
    alpha = float(grid[0])
    record_alphas = [alpha]
    record_roots = [roots]
    record_grid = [True]
    steps: list[float] = []
    h = settings.initial_step

    for target in grid[1:]:
        target = float(target)
        direction = 1.0 if target > alpha else -1.0
        while alpha != target:
            remaining = abs(target - alpha)
            step = min(h, remaining)
            nxt = target if step == remaining else alpha + direction * step
            advanced = _advance(n, roots, nxt, watch, settings.tol)
            if advanced is None:
                if step <= settings.min_step:
                    raise TrackingError(
                        f"ambiguous root matching for P_{2 * n} near alpha={nxt:.12g}",
                        last_good_alpha=alpha,
                    )
                h = max(step / 2, settings.min_step)
                log.debug("sweep P_%d: step halved to %.3e at alpha=%.9f", 2 * n, h, alpha)
                continue
            steps.append(abs(nxt - alpha))
            alpha, roots = nxt, advanced
            record_alphas.append(alpha)
            record_roots.append(roots)
            record_grid.append(alpha == target)
            if step == h:
                h = min(2 * h, settings.initial_step)

    return Sweep(
        alphas=np.array(record_alphas),
        roots=np.array(record_roots),
        on_grid=np.array(record_grid),
        steps=np.array(steps),
    )


def track(
    n: int,
    alpha_from: float,
    alpha_to: float,
    seed: complex,
    *,
    settings: TrackSettings = DEFAULT_TRACK_SETTINGS,
    tag: BranchTag = BranchTag.OTHER,
) -> RootPath:
    """Follow the root of P_{2n} through seed from alpha_from to alpha_to.

    Raises:
        DomainError: if an angle is outside (0, pi] or seed is not a root.
        TrackingError: if continuation becomes ambiguous at the minimum step.
    """
    for alpha in (alpha_from, alpha_to):
        if not 0 < alpha <= math.pi:
            raise DomainError(f"cone angle must lie in (0, pi], got {alpha}")
    roots = all_roots(build_rm_poly(n, complex(meridian(alpha_from))), settings.tol).as_array()
    dist = np.abs(roots - seed)
    index = int(np.argmin(dist))
    if dist[index] > SEED_TOLERANCE * max(1.0, abs(seed)):
        raise DomainError(
            f"seed {seed} is not a root of P_{2 * n} at alpha={alpha_from} "
            f"(nearest root at distance {dist[index]:.3e})"
        )
    if alpha_from == alpha_to:
        return RootPath(
            n=n,
            alphas=(alpha_from,),
            values=(complex(seed),),
            tag=tag,
            steps=(),
            root_sets=(tuple(complex(r) for r in roots),),
        )

    log.debug("tracking P_%d root %s from %.6f to %.6f", 2 * n, seed, alpha_from, alpha_to)
    result = sweep(n, [alpha_from, alpha_to], roots, watch=[index], settings=settings)
    return RootPath(
        n=n,
        alphas=tuple(float(a) for a in result.alphas),
        values=tuple(complex(v) for v in result.roots[:, index]),
        tag=tag,
        steps=tuple(float(s) for s in result.steps),
        root_sets=tuple(tuple(complex(r) for r in row) for row in result.roots),
    )


def _advance(
    n: int,
    roots: np.ndarray,
    alpha: float,
    watch: list[int],
    tol: float,
) -> np.ndarray | None:
    """Solve at alpha warm-started from roots; None when the step is ambiguous."""
    result = solve_batch(RileyEvaluator(n, meridian(alpha)), roots[None, :], tol=tol)
    if not result.converged[0] or result.residuals[0] > RESIDUAL_LIMIT:
        return None
    current = match_roots(roots, result.roots[0])
    moved = np.abs(current[watch] - roots[watch])
    if np.any(moved >= 0.5 * separations(roots, watch)):
        return None
    return current
