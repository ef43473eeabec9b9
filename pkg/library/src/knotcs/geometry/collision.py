"""Detection of colliding root pairs of P_{2n} along the cone angle.

On |M| = 1 the non-real roots of P_{2n} come in conjugate pairs. A pair
that meets on the real axis removes one root from the lower half plane,
so the number of roots with Im t < 0 drops by one at each collision.
Counting those roots on a grid brackets every collision in the search
window; bisection on the count refines each bracket.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError
from ..rmpoly import RileyEvaluator, build_rm_poly
from ..roots import (
    DEFAULT_TOL,
    RESIDUAL_LIMIT,
    all_roots,
    initial_guesses,
    meridian,
    solve_batch,
)

log = logging.getLogger("knotcs.geometry")

WINDOW_LOW = 2 * math.pi / 3 - 0.05
"""Lower end of the collision search window."""

GRID_STEP = 0.0025

IMAG_THRESHOLD = 1e-8
"""Relative imaginary part below which a root counts as real."""


@dataclass(frozen=True, kw_only=True)
class Collision:
    """A conjugate pair of roots meeting on the real axis."""

    n: int
    alpha: float
    point: complex
    """Collision point t0, the mean of the pair just before it meets."""
    lower: complex
    """Member of the pair with Im t < 0 at bracket[0]."""
    bracket: tuple[float, float]


def lower_mask(roots: np.ndarray) -> np.ndarray:
    """True for roots strictly below the real axis."""
    return roots.imag < -IMAG_THRESHOLD * np.maximum(1.0, np.abs(roots))


def roots_on_grid(n: int, alphas: np.ndarray, *, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Return all roots of P_{2n} at every angle, shape (len(alphas), degree).

    Rows are solved together from the circle start; rows that fail to
    converge, or converge to inaccurate roots, are retried one by one
    (which raises on failure).
    """
    polys = RileyEvaluator(n, meridian(alphas))
    result = solve_batch(polys, initial_guesses(polys.coefficients()), tol=tol)
    roots = result.roots
    for row in np.flatnonzero(~result.converged | (result.residuals > RESIDUAL_LIMIT)):
        poly = build_rm_poly(n, complex(meridian(alphas[row])))
        roots[row] = all_roots(poly, tol).as_array()
    return roots


def collision_candidates(
    n: int,
    *,
    tol: float = 1e-10,
    root_tol: float = DEFAULT_TOL,
) -> tuple[Collision, ...]:
    """Return every pair collision in [WINDOW_LOW, pi], sorted by angle.

    Raises:
        DomainError: if n == 0 or tol < 1e-12.
    """
    if n == 0:
        raise DomainError("n = 0 is the unknot and has no hyperbolic structure")
    if tol < 1e-12:
        raise DomainError(f"collision tolerance must be at least 1e-12, got {tol}")

    grid = np.append(np.arange(WINDOW_LOW, math.pi, GRID_STEP), math.pi)
    counts = lower_mask(roots_on_grid(n, grid, tol=root_tol)).sum(axis=-1)
    log.debug("P_%d lower-half root counts: %s", 2 * n, counts.tolist())

    found: list[Collision] = []
    for j in np.flatnonzero(counts[:-1] > counts[1:]):
        for level in range(int(counts[j]), int(counts[j + 1]), -1):
            found.append(_refine(n, float(grid[j]), float(grid[j + 1]), level, tol, root_tol))
    return tuple(sorted(found, key=lambda c: c.alpha))


def _refine(n: int, lo: float, hi: float, level: int, tol: float, root_tol: float) -> Collision:
    """Bisect [lo, hi] on the predicate "at least level lower roots"."""

    def lower_count(alpha: float) -> tuple[int, np.ndarray]:
        roots = all_roots(build_rm_poly(n, complex(meridian(alpha))), root_tol).as_array()
        return int(lower_mask(roots).sum()), roots

    bracket = (lo, hi)
    _, lo_roots = lower_count(lo)
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        count, roots = lower_count(mid)
        if count >= level:
            lo, lo_roots = mid, roots
        else:
            hi = mid

    lower = lo_roots[lower_mask(lo_roots)]
    member = lower[np.argmin(np.abs(lower.imag) / np.maximum(1.0, np.abs(lower)))]
    others = lo_roots[lo_roots != member]
    partner = others[np.argmin(np.abs(others - member))]
    alpha = 0.5 * (lo + hi)
    log.debug("P_%d collision at alpha=%.12f near t=%s", 2 * n, alpha, member)
    return Collision(
        n=n,
        alpha=alpha,
        point=complex(0.5 * (member + partner)),
        lower=complex(member),
        bracket=bracket,
    )
