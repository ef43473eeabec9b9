"""The geometric branch of P_{2n} and the Schläfli integrand beta.

Below the Euclidean angle alpha0 the hyperbolic structure of X_{2n}(alpha)
corresponds to one root t(alpha) with Im t <= 0; above alpha0 the spherical
structure corresponds to the two real roots t1, t2 produced when t meets
its conjugate. `geometric_branch` locates alpha0, picks the colliding pair
with maximal volume, and caches anchor root sets on both sides. The
accessors of `GeometricData` continue from the nearest anchor, which
keeps evaluation at thousands of quadrature nodes cheap.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import StrEnum
from functools import lru_cache
from typing import TYPE_CHECKING

import numpy as np
from numpy.typing import ArrayLike

from ..errors import DomainError, GeometryError, TrackingError
from ..rmpoly import RileyEvaluator, build_rm_poly
from ..roots import (
    DEFAULT_TRACK_SETTINGS,
    RESIDUAL_LIMIT,
    BranchTag,
    RootPath,
    TrackSettings,
    all_roots,
    match_roots,
    meridian,
    separations,
    solve_batch,
    sweep,
)
from .collision import WINDOW_LOW, Collision, collision_candidates, lower_mask
from .cone import POLE_TOLERANCE, longitude_eigenvalues

if TYPE_CHECKING:
    from ..csinv.quadrature import QuadratureSpec

log = logging.getLogger("knotcs.geometry")

DEFAULT_ALPHA0_TOL = 1e-10

LIMIT_OFFSET = 1e-6
"""Closest approach to alpha0 made by continuation; nearer angles use t0."""

DEGENERATE_SHIFT = 1e-9
"""Angle shift applied to a node where L vanishes."""

CHUNK = 512

SELECTION_INTERVALS = 1000
"""Simpson intervals used to rank candidate collisions by volume."""


class Side(StrEnum):
    """Side of alpha0 a branch lives on."""

    HYPERBOLIC = "hyperbolic"
    SPHERICAL = "spherical"


@dataclass(frozen=True, kw_only=True, eq=False)
class BranchAnchors:
    """Root sets of P_{2n} cached along one side of a collision.

    The watched columns are the geometric root (hyperbolic side) or the
    spherical pair. At alpha0 itself every watched value equals t0.
    """

    n: int
    side: Side
    alphas: np.ndarray
    """Anchor angles in ascending order."""
    roots: np.ndarray
    """Full root set at each anchor, shape (len(alphas), degree)."""
    watch: tuple[int, ...]
    separation: np.ndarray
    """Distance from each watched root to its nearest neighbor, per anchor."""
    alpha0: float
    t0: complex
    settings: TrackSettings

    @classmethod
    def build(
        cls,
        n: int,
        collision: Collision,
        *,
        side: Side,
        stop: float,
        settings: TrackSettings = DEFAULT_TRACK_SETTINGS,
    ) -> BranchAnchors:
        """Track the colliding pair from alpha0 out to stop."""
        sign = -1.0 if side is Side.HYPERBOLIC else 1.0
        first = collision.alpha + sign * LIMIT_OFFSET
        roots = _solve(n, first, settings.tol)
        nearest = np.argsort(np.abs(roots - collision.point), kind="stable")[:2]
        if side is Side.HYPERBOLIC:
            watch = (int(min(nearest, key=lambda i: roots[i].imag)),)
        else:
            watch = tuple(sorted(int(i) for i in nearest))
        grid = _anchor_grid(collision.alpha, stop, settings.initial_step)
        result = sweep(n, grid, roots, watch=watch, settings=settings)
        order = np.argsort(result.alphas, kind="stable")
        anchor_roots = result.roots[order]
        return cls(
            n=n,
            side=side,
            alphas=result.alphas[order],
            roots=anchor_roots,
            watch=watch,
            separation=separations(anchor_roots, watch),
            alpha0=collision.alpha,
            t0=collision.point,
            settings=settings,
        )

    def extend_to(self, stop: float) -> BranchAnchors:
        """Return anchors continued further away from alpha0, down/up to stop."""
        far = 0 if self.side is Side.HYPERBOLIC else -1
        start = float(self.alphas[far])
        if start == stop:
            return self
        count = max(1, math.ceil(abs(stop - start) / self.settings.initial_step))
        grid = np.linspace(start, stop, count + 1)
        result = sweep(self.n, grid, self.roots[far], watch=self.watch, settings=self.settings)
        alphas = np.concatenate([self.alphas, result.alphas[1:]])
        roots = np.concatenate([self.roots, result.roots[1:]])
        order = np.argsort(alphas, kind="stable")
        return BranchAnchors(
            n=self.n,
            side=self.side,
            alphas=alphas[order],
            roots=roots[order],
            watch=self.watch,
            separation=separations(roots[order], self.watch),
            alpha0=self.alpha0,
            t0=self.t0,
            settings=self.settings,
        )

    @property
    def lowest(self) -> float:
        return float(self.alphas[0])

    @property
    def highest(self) -> float:
        return float(self.alphas[-1])

    def values(self, alphas: ArrayLike) -> np.ndarray:
        """Return the watched roots at each angle, shape (N, len(watch)).

        Raises:
            DomainError: if an angle lies outside the anchored range.
            TrackingError: if continuation from an anchor fails.
        """
        x = np.atleast_1d(np.asarray(alphas, dtype=float))
        low = min(self.lowest, self.alpha0)
        high = max(self.highest, self.alpha0)
        if np.any((x < low) | (x > high)):
            raise DomainError(f"{self.side} branch of P_{2 * self.n} covers [{low}, {high}] only")

        out = np.empty((x.size, len(self.watch)), dtype=complex)
        offset = np.abs(x - self.alpha0)
        at_limit = offset == 0
        near = (offset < LIMIT_OFFSET) & ~at_limit
        out[at_limit] = self.t0
        for row in np.flatnonzero(near):
            out[row] = self._select_near(float(x[row]))
        far = np.flatnonzero(~(at_limit | near))
        for chunk in range(0, far.size, CHUNK):
            rows = far[chunk : chunk + CHUNK]
            out[rows] = self._continue(x[rows])
        return out

    def _nearest_anchor(self, x: np.ndarray) -> np.ndarray:
        pos = np.clip(np.searchsorted(self.alphas, x), 1, self.alphas.size - 1)
        left = self.alphas[pos - 1]
        right = self.alphas[pos]
        return np.where(np.abs(x - left) <= np.abs(right - x), pos - 1, pos)

    def _continue(self, x: np.ndarray) -> np.ndarray:
        idx = self._nearest_anchor(x)
        start = self.roots[idx]
        watch = list(self.watch)
        result = solve_batch(RileyEvaluator(self.n, meridian(x)), start, tol=self.settings.tol)
        anchored = start[:, watch]
        dist = np.abs(result.roots[:, None, :] - anchored[:, :, None])
        pick = np.argmin(dist, axis=-1)
        found = np.take_along_axis(result.roots, pick, axis=1)
        moved = np.take_along_axis(dist, pick[..., None], axis=-1)[..., 0]
        ok = result.converged & (result.residuals <= RESIDUAL_LIMIT)
        ok &= np.all(moved < 0.5 * self.separation[idx], axis=-1)
        if len(watch) > 1:
            ok &= pick[:, 0] != pick[:, 1]
        for row in np.flatnonzero(~ok):
            anchor_alpha = float(self.alphas[idx[row]])
            if anchor_alpha == x[row]:
                found[row] = anchored[row]
                continue
            log.debug("P_%d: stepping from anchor %.9f to %.9f", 2 * self.n, anchor_alpha, x[row])
            path = sweep(
                self.n,
                [anchor_alpha, float(x[row])],
                start[row],
                watch=watch,
                settings=self.settings,
            )
            found[row] = path.roots[-1, watch]
        return found

    def _select_near(self, alpha: float) -> np.ndarray:
        roots = _solve(self.n, alpha, self.settings.tol)
        nearest = roots[np.argsort(np.abs(roots - self.t0), kind="stable")[:2]]
        if self.side is Side.HYPERBOLIC:
            return nearest[np.argmin(nearest.imag)][None]
        reference = self.roots[-1 if self.alpha0 > self.highest else 0, list(self.watch)]
        return match_roots(reference, nearest)


@dataclass(frozen=True, kw_only=True, eq=False)
class GeometricData:
    """Geometric branch of X_{2n}(alpha) on both sides of alpha0."""

    n: int
    alpha0: float
    t0: complex
    hyperbolic: BranchAnchors
    spherical: BranchAnchors
    beta_reference: float
    """Principal value of beta at alpha0; every unwrap starts here."""
    candidates: tuple[Collision, ...]

    def geometric_root(self, alpha: float) -> complex:
        """Return t(alpha) with Im t <= 0 for 0 <= alpha <= alpha0."""
        return complex(self.geometric_roots([alpha])[0])

    def spherical_pair(self, alpha: float) -> tuple[complex, complex]:
        """Return (t1(alpha), t2(alpha)) for alpha0 <= alpha <= pi."""
        pair = self.spherical_pairs([alpha])[0]
        return complex(pair[0]), complex(pair[1])

    def geometric_roots(self, alphas: ArrayLike) -> np.ndarray:
        return self.hyperbolic.values(alphas)[:, 0]

    def spherical_pairs(self, alphas: ArrayLike) -> np.ndarray:
        return self.spherical.values(alphas)

    def root_paths(self) -> tuple[RootPath, RootPath]:
        """Return the geometric root and its conjugate partner over the hyperbolic anchors.

        The partner at each anchor is the other root nearest the complex
        conjugate of the geometric root.
        """
        anchors = self.hyperbolic
        column = anchors.watch[0]
        values = anchors.roots[:, column]
        others = anchors.roots.copy()
        others[:, column] = np.inf
        partner_index = np.argmin(np.abs(others - np.conj(values)[:, None]), axis=-1)
        partners = np.take_along_axis(anchors.roots, partner_index[:, None], axis=1)[:, 0]
        alphas = tuple(float(a) for a in anchors.alphas)
        steps = tuple(float(s) for s in np.diff(anchors.alphas))
        root_sets = tuple(tuple(complex(r) for r in row) for row in anchors.roots)
        geometric, partner = (
            RootPath(
                n=self.n,
                alphas=alphas,
                values=tuple(complex(v) for v in path),
                tag=tag,
                steps=steps,
                root_sets=root_sets,
            )
            for path, tag in ((values, BranchTag.GEOMETRIC), (partners, BranchTag.CONJUGATE))
        )
        return geometric, partner

    def beta_samples(self, alphas: ArrayLike) -> np.ndarray:
        """Return the unwrapped integrand beta at each angle.

        Angles at or below alpha0 use Im(2 log L(t)); angles above alpha0
        use Im log L(t1) + Im log L(t2). Each side is unwrapped outward
        from alpha0 over the union of the requested angles and the
        cached anchors, so isolated angles get the same branch as dense
        node sets.
        """
        x = np.atleast_1d(np.asarray(alphas, dtype=float))
        out = np.empty(x.size)
        hyperbolic = x <= self.alpha0
        for mask, anchors in ((hyperbolic, self.hyperbolic), (~hyperbolic, self.spherical)):
            rows = np.flatnonzero(mask)
            if rows.size:
                out[rows] = self._side_beta(anchors, x[rows])
        return out

    def _side_beta(self, anchors: BranchAnchors, x: np.ndarray) -> np.ndarray:
        reach = np.max(np.abs(x - self.alpha0))
        keep = np.abs(anchors.alphas - self.alpha0) < reach
        anchor_x = anchors.alphas[keep]
        anchor_beta = _principal_beta(
            self.n, anchor_x, anchors.roots[keep][:, list(anchors.watch)]
        )
        node_beta = self._node_beta(anchors, x)
        merged_x = np.concatenate([anchor_x, x])
        merged = np.concatenate([anchor_beta, node_beta])
        order = np.argsort(np.abs(merged_x - self.alpha0), kind="stable")
        unwrapped = np.unwrap(np.concatenate([[self.beta_reference], merged[order]]))[1:]
        result = np.empty_like(merged)
        result[order] = unwrapped
        return result[anchor_x.size :]

    def _node_beta(self, anchors: BranchAnchors, x: np.ndarray) -> np.ndarray:
        roots = anchors.values(x)
        degenerate = _degenerate(x, roots)
        if np.any(degenerate):
            away = -1.0 if anchors.side is Side.HYPERBOLIC else 1.0
            shifted = np.clip(x[degenerate] + away * DEGENERATE_SHIFT, 0.0, math.pi)
            log.warning(
                "P_%d: L vanishes at alpha=%s; nodes shifted by %.0e",
                2 * self.n,
                x[degenerate].tolist(),
                DEGENERATE_SHIFT,
            )
            roots[degenerate] = anchors.values(shifted)
            x = x.copy()
            x[degenerate] = shifted
        return _principal_beta(self.n, x, roots)


def beta_integrand(n: int, alpha: float, gd: GeometricData) -> float:
    """Return the Schläfli integrand beta(alpha) on the geometric branch.

    Raises:
        DomainError: if alpha lies outside [0, pi] or gd belongs to another n.
        PoleError: if the longitude formula hits its pole.
    """
    if gd.n != n:
        raise DomainError(f"geometric data is for n={gd.n}, not n={n}")
    if not 0 <= alpha <= math.pi:
        raise DomainError(f"cone angle must lie in [0, pi], got {alpha}")
    return float(gd.beta_samples([alpha])[0])


@lru_cache(maxsize=64)
def select_collision(
    n: int,
    *,
    tol: float = DEFAULT_ALPHA0_TOL,
    settings: TrackSettings = DEFAULT_TRACK_SETTINGS,
) -> tuple[Collision, tuple[Collision, ...], BranchAnchors]:
    """Pick the geometric collision of P_{2n}.

    Returns the chosen collision, all candidates, and hyperbolic anchors
    of the chosen collision reaching down to the search window.

    A candidate whose hyperbolic continuation fails is dropped. With one
    candidate left it is taken as is; the volume ranking runs only when
    several remain.

    Raises:
        GeometryError: if no collision exists or the choice is ambiguous.
    """
    found = collision_candidates(n, tol=tol, root_tol=settings.tol)
    if not found:
        raise GeometryError(f"no root collision of P_{2 * n} in [{WINDOW_LOW:.5f}, pi]")

    kept: list[Collision] = []
    branches: list[BranchAnchors] = []
    for c in found:
        try:
            anchors = BranchAnchors.build(
                n, c, side=Side.HYPERBOLIC, stop=WINDOW_LOW, settings=settings
            )
        except TrackingError as err:
            log.info("P_%d: dropping collision at alpha=%.10f: %s", 2 * n, c.alpha, err)
            continue
        kept.append(c)
        branches.append(anchors)
    if not kept:
        raise GeometryError(
            f"no collision of P_{2 * n} can be continued into the hyperbolic side",
            candidates=tuple(c.alpha for c in found),
        )
    candidates = tuple(kept)

    if len(candidates) == 1:
        chosen = 0
    else:
        volumes = [_anchored_volume(b, WINDOW_LOW, SELECTION_INTERVALS) for b in branches]
        log.info(
            "P_%d candidate collisions %s with volumes %s",
            2 * n,
            [round(c.alpha, 6) for c in candidates],
            [round(v, 8) for v in volumes],
        )
        ranked = sorted(range(len(volumes)), key=lambda i: volumes[i], reverse=True)
        chosen = ranked[0]
        if volumes[ranked[0]] - volumes[ranked[1]] <= 1e-6:
            raise GeometryError(
                f"no dominant volume among collisions of P_{2 * n}",
                candidates=tuple(c.alpha for c in candidates),
            )

    clash = [c.alpha for c in candidates if abs(c.alpha - candidates[chosen].alpha) <= 10 * tol]
    if len(clash) > 1:
        raise GeometryError(
            f"ambiguous collision of P_{2 * n} at alpha={candidates[chosen].alpha:.10f}",
            candidates=tuple(clash),
        )
    return candidates[chosen], candidates, branches[chosen]


def find_alpha0(
    n: int,
    tol: float = DEFAULT_ALPHA0_TOL,
    *,
    settings: TrackSettings = DEFAULT_TRACK_SETTINGS,
) -> float:
    """Return the Euclidean angle alpha0 of X_{2n}.

    Raises:
        DomainError: if n == 0 or tol < 1e-12.
        GeometryError: if no collision is found or the choice is ambiguous.
    """
    log.info("locating alpha0 for n=%d... start", n)
    chosen, _, _ = select_collision(n, tol=tol, settings=settings)
    log.info("locating alpha0 for n=%d... ok (%.10f)", n, chosen.alpha)
    return chosen.alpha


@lru_cache(maxsize=64)
def geometric_branch(
    n: int,
    *,
    tol: float = DEFAULT_ALPHA0_TOL,
    settings: TrackSettings = DEFAULT_TRACK_SETTINGS,
) -> GeometricData:
    """Build the geometric branch of X_{2n} on both sides of alpha0.

    Raises:
        DomainError: if n == 0.
        GeometryError: if alpha0 cannot be identified.
        TrackingError: if continuation of the pair fails.
    """
    log.info("building geometric branch for n=%d... start", n)
    chosen, candidates, window = select_collision(n, tol=tol, settings=settings)
    hyperbolic = window.extend_to(0.0)
    spherical = BranchAnchors.build(
        n, chosen, side=Side.SPHERICAL, stop=math.pi, settings=settings
    )

    watched = spherical.roots[:, list(spherical.watch)]
    drift = np.abs(
        np.abs(longitude_eigenvalues(n, meridian(spherical.alphas)[:, None], watched)) - 1
    )
    log.debug("P_%d spherical side: max ||L| - 1| = %.3e", 2 * n, float(np.max(drift)))

    reference = float(
        _principal_beta(n, np.array([chosen.alpha]), np.array([[chosen.point]]))[0]
    )
    data = GeometricData(
        n=n,
        alpha0=chosen.alpha,
        t0=chosen.point,
        hyperbolic=hyperbolic,
        spherical=spherical,
        beta_reference=reference,
        candidates=candidates,
    )
    log.info("building geometric branch for n=%d... ok (alpha0=%.10f)", n, data.alpha0)
    return data


def volume_oracle(n: int, alpha: float, *, spec: QuadratureSpec | None = None) -> float:
    """Return the integral of |log|L(t(x))|| over [alpha, alpha0].

    This is half the integral of |Re(2 log L)| along the geometric root,
    the volume-type quantity used to rank branches.

    Raises:
        DomainError: if alpha is not in (0, alpha0).
    """
    from ..csinv.quadrature import DEFAULT_QUADRATURE

    gd = geometric_branch(n)
    if not 0 < alpha < gd.alpha0:
        raise DomainError(f"alpha must lie in (0, {gd.alpha0:.6f}), got {alpha}")
    intervals = (spec or DEFAULT_QUADRATURE).intervals
    return _anchored_volume(gd.hyperbolic, alpha, intervals)


@dataclass(frozen=True, kw_only=True)
class BranchVolumes:
    """Volume integrals over [alpha, alpha0] of every lower-half root branch."""

    alpha: float
    geometric: float
    alternatives: tuple[float, ...]


def branch_volumes(n: int, alpha: float, *, intervals: int = SELECTION_INTERVALS) -> BranchVolumes:
    """Compare the geometric branch with every other branch below the real axis.

    Each root with Im t < 0 at alpha is followed up to alpha0 and its
    volume integrand integrated with Simpson's rule.

    Raises:
        DomainError: if alpha is not in (0, alpha0).
    """
    from ..csinv.quadrature import simpson_samples

    gd = geometric_branch(n)
    if not 0 < alpha < gd.alpha0:
        raise DomainError(f"alpha must lie in (0, {gd.alpha0:.6f}), got {alpha}")
    nodes = np.linspace(alpha, gd.alpha0, intervals + 1)
    roots = _solve(n, alpha, gd.hyperbolic.settings.tol)
    geometric_index = int(np.argmin(np.abs(roots - gd.geometric_root(alpha))))
    lower = [int(i) for i in np.flatnonzero(lower_mask(roots))]
    others = [i for i in lower if i != geometric_index]
    if not others:
        geometric = _anchored_volume(gd.hyperbolic, alpha, intervals)
        return BranchVolumes(alpha=alpha, geometric=geometric, alternatives=())

    settings = gd.hyperbolic.settings
    body = sweep(n, nodes[:-1], roots, watch=lower, settings=settings).grid_roots()
    tail = sweep(n, nodes[-2:], body[-1], watch=others, settings=settings).grid_roots()[-1]
    paths = np.vstack([body[:, others], tail[None, others]])
    geometric = _anchored_volume(gd.hyperbolic, alpha, intervals)
    alternatives = tuple(
        simpson_samples(_volume_density(n, nodes, paths[:, j]), alpha, gd.alpha0)
        for j in range(len(others))
    )
    return BranchVolumes(alpha=alpha, geometric=geometric, alternatives=alternatives)


def _anchored_volume(anchors: BranchAnchors, alpha: float, intervals: int) -> float:
    from ..csinv.quadrature import simpson_samples

    nodes = np.linspace(alpha, anchors.alpha0, intervals + 1)
    roots = anchors.values(nodes)[:, 0]
    return simpson_samples(_volume_density(anchors.n, nodes, roots), alpha, anchors.alpha0)


def _volume_density(n: int, alphas: np.ndarray, roots: np.ndarray) -> np.ndarray:
    """Half of |Re(2 log L)|, that is |log|L||."""
    return np.abs(np.log(np.abs(longitude_eigenvalues(n, meridian(alphas), roots))))


def _principal_beta(n: int, alphas: np.ndarray, roots: np.ndarray) -> np.ndarray:
    """Principal Im log L summed over the watched columns (doubled for one column)."""
    L = longitude_eigenvalues(n, meridian(alphas)[:, None], roots)  # noqa: N806
    phases = np.angle(L)
    if roots.shape[1] == 1:
        return 2 * phases[:, 0]
    return np.sum(phases, axis=-1)


def _degenerate(alphas: np.ndarray, roots: np.ndarray) -> np.ndarray:
    """True where tv = -M^-2 makes L vanish."""
    m2 = meridian(alphas)[:, None] ** 2
    numerator = np.abs(1 / m2 + roots)
    return np.any(numerator <= POLE_TOLERANCE * (1 + np.abs(roots)), axis=-1)


def _anchor_grid(alpha0: float, stop: float, step: float) -> np.ndarray:
    """Angles from alpha0 +- LIMIT_OFFSET to stop, spacing doubling up to step."""
    sign = 1.0 if stop > alpha0 else -1.0
    total = abs(stop - alpha0)
    offsets = [LIMIT_OFFSET]
    while offsets[-1] < total:
        offsets.append(min(offsets[-1] + min(offsets[-1], step), total))
    return alpha0 + sign * np.array(offsets)


def _solve(n: int, alpha: float, tol: float) -> np.ndarray:
    return all_roots(build_rm_poly(n, complex(meridian(alpha))), tol).as_array()
