"""Simultaneous polynomial root finding (Aberth-Ehrlich iteration).

The solver runs on a batch of polynomials of equal degree at once,
each row with its own d starting points. Polynomials reach the solver
through an `Evaluator`; a plain coefficient array of shape (N, d+1),
ascending, is evaluated with Horner's scheme. `all_roots` is the
single-polynomial front end with the deterministic circle start.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError, SolverError
from ..rmpoly import DenseEvaluator, Evaluator, PolyC

log = logging.getLogger("knotcs.roots")

DEFAULT_TOL = 1e-12
"""Relative step size at which a root approximation is converged."""

MAX_ITERATIONS = 500

RESIDUAL_LIMIT = 1e-10
"""Largest residual `all_roots` accepts."""

START_PHASE = 0.4
"""Phase offset of the circle of initial guesses (radians)."""

_EPS = np.finfo(float).eps


@dataclass(frozen=True, kw_only=True)
class RootSet:
    """Roots of a polynomial with solver diagnostics."""

    roots: tuple[complex, ...]
    iterations: int
    max_residual: float
    """Largest |p(z)| over the rounding scale of its evaluation, over the roots."""

    def __len__(self) -> int:
        return len(self.roots)

    def as_array(self) -> np.ndarray:
        return np.array(self.roots, dtype=complex)


@dataclass(frozen=True, kw_only=True, eq=False)
class BatchResult:
    """Output of `solve_batch`; arrays are indexed by polynomial row."""

    roots: np.ndarray
    iterations: np.ndarray
    converged: np.ndarray
    residuals: np.ndarray


def initial_guesses(coeffs: np.ndarray) -> np.ndarray:
    """Equispaced points on a circle of radius 1 + max|c_i / c_lead|.

    Accepts ascending coefficients of shape (d+1,) or (N, d+1).
    """
    c = np.atleast_2d(np.asarray(coeffs, dtype=complex))
    degree = c.shape[-1] - 1
    radius = 1 + np.max(np.abs(c[:, :-1] / c[:, -1:]), axis=-1)
    angles = 2 * np.pi * np.arange(degree) / degree + START_PHASE
    guesses = radius[:, None] * np.exp(1j * angles)[None, :]
    return guesses if np.ndim(coeffs) > 1 else guesses[0]


def solve_batch(
    polys: np.ndarray | Evaluator,
    start: np.ndarray,
    *,
    tol: float = DEFAULT_TOL,
    max_iter: int = MAX_ITERATIONS,
) -> BatchResult:
    """Run the Aberth iteration on every polynomial of the batch.

    A row is converged when every root either moved less than
    tol * max(1, |z|) in the last sweep or has a residual at the rounding
    level of its evaluation. Converged rows receive one Newton polishing
    step that is kept only when it lowers the residual.

    Args:
        polys: an Evaluator, or ascending coefficients of shape (N, d+1)
            with nonzero leading terms.
        start: starting points, shape (N, d).
        tol: relative step tolerance.
        max_iter: iteration cap per row.

    Returns:
        A BatchResult; rows that hit max_iter have converged=False.
    """
    evaluate = _as_evaluator(polys)
    z = np.array(start, dtype=complex, copy=True)
    rows = z.shape[0]
    everything = np.arange(rows)
    iterations = np.zeros(rows, dtype=int)
    active = np.ones(rows, dtype=bool)

    for _ in range(max_iter):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        zz = z[idx]
        value, slope, bound = evaluate(idx, zz)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            ratio = value / slope
            diff = zz[:, :, None] - zz[:, None, :]
            diag = np.arange(zz.shape[1])
            diff[:, diag, diag] = np.inf
            repulsion = np.sum(1 / diff, axis=-1)
            delta = ratio / (1 - ratio * repulsion)
        stalled = ~np.isfinite(delta)
        if np.any(stalled):
            # p'(z) = 0 or coincident approximations: nudge off the spot
            delta[stalled] = 1e-8 * (1 + np.abs(zz[stalled])) * np.exp(1j * START_PHASE)
        zz = zz - delta
        z[idx] = zz
        iterations[idx] += 1
        small_step = np.abs(delta) <= tol * np.maximum(1.0, np.abs(zz))
        at_noise = np.abs(value) <= 4 * _EPS * bound
        done = np.all(small_step | at_noise, axis=-1) & ~np.any(stalled, axis=-1)
        active[idx[done]] = False

    converged = ~active
    z = _polish(evaluate, everything, z)
    value, _, bound = evaluate(everything, z)
    with np.errstate(divide="ignore", invalid="ignore"):
        residuals = np.max(np.abs(value) / np.maximum(bound, np.finfo(float).tiny), axis=-1)
    return BatchResult(roots=z, iterations=iterations, converged=converged, residuals=residuals)


def all_roots(
    p: PolyC | Evaluator,
    tol: float = DEFAULT_TOL,
    *,
    max_iter: int = MAX_ITERATIONS,
    start: np.ndarray | None = None,
) -> RootSet:
    """Return all complex roots of p.

    A `PolyC` is evaluated through `p.evaluator()`, so a `RileyPoly` is
    solved on its recursion rather than on its expanded coefficients. An
    `Evaluator` is solved on its first row.

    Raises:
        DomainError: if p has degree 0.
        SolverError: if the iteration does not converge within max_iter,
            or a root's residual exceeds RESIDUAL_LIMIT.
    """
    evaluate = p.evaluator() if isinstance(p, PolyC) else p
    degree = evaluate.degree
    coeffs = np.asarray(evaluate.coefficients(), dtype=complex)
    coeffs = coeffs[0] if coeffs.ndim > 1 else coeffs
    if degree < 1:
        raise DomainError("cannot find roots of a constant polynomial")
    if degree == 1:
        root = complex(-coeffs[0] / coeffs[1])
        return RootSet(roots=(root,), iterations=0, max_residual=0.0)

    guesses = initial_guesses(coeffs) if start is None else np.asarray(start, dtype=complex)
    result = solve_batch(evaluate, guesses[None, :], tol=tol, max_iter=max_iter)
    iterations = int(result.iterations[0])
    residual = float(result.residuals[0])
    if not result.converged[0]:
        raise SolverError(
            f"root finder did not converge for degree {degree}",
            iterations=iterations,
            residual=residual,
        )
    if not residual <= RESIDUAL_LIMIT:
        raise SolverError(
            f"roots of degree {degree} are not accurate to {RESIDUAL_LIMIT:.0e}",
            iterations=iterations,
            residual=residual,
        )
    log.debug("degree %d roots in %d iterations, residual %.2e", degree, iterations, residual)
    return RootSet(
        roots=tuple(complex(r) for r in result.roots[0]),
        iterations=iterations,
        max_residual=residual,
    )


def _as_evaluator(polys: np.ndarray | Evaluator) -> Evaluator:
    if isinstance(polys, np.ndarray):
        return DenseEvaluator(np.atleast_2d(polys.astype(complex, copy=False)))
    return polys


def _polish(evaluate: Evaluator, rows: np.ndarray, z: np.ndarray) -> np.ndarray:
    """One Newton step per root, kept only where it lowers |p|."""
    value, slope, _ = evaluate(rows, z)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        candidate = z - value / slope
    candidate = np.where(np.isfinite(candidate), candidate, z)
    new_value, _, _ = evaluate(rows, candidate)
    return np.where(np.abs(new_value) < np.abs(value), candidate, z)
