"""Chern-Simons invariants of X_{2n}(2 pi/k), its cyclic coverings and T_{2n}.

Every value is assembled the same way: half the Chern-Simons invariant
of the lens space L(6n+1, 4n+1) reached at alpha = pi, plus the Schläfli
integral of beta from the lower angle up to alpha0 and from alpha0 to
pi, divided by 4 pi^2. The spherical segment depends on n only and is
cached; hyperbolic segments are cached per lower angle.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from functools import lru_cache

from ..errors import DomainError, NonHyperbolicError
from ..geometry import DEFAULT_ALPHA0_TOL, geometric_branch
from ..roots import DEFAULT_TRACK_SETTINGS, TrackSettings
from .quadrature import DEFAULT_QUADRATURE, QuadratureSpec, simpson
from .value import CSValue, orbifold_modulus

log = logging.getLogger("knotcs.csinv")

HYPERBOLIC_MARGIN = 1e-8
"""Orbifold angles this close below alpha0 are treated as Euclidean."""

KNOT_MODULUS = Fraction(1, 2)


def lens_cs(n: int) -> Fraction:
    """Return cs(L(6n+1, 4n+1)) = (4n+4)/(12n+2) mod 1 as an exact fraction.

    Raises:
        DomainError: if n == 0.
    """
    _check_n(n)
    return Fraction(4 * n + 4, 12 * n + 2) % 1


def schlafli_integral(
    n: int,
    lower: float,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
    *,
    alpha0_tol: float = DEFAULT_ALPHA0_TOL,
    settings: TrackSettings = DEFAULT_TRACK_SETTINGS,
) -> float:
    """Return (1/4 pi^2) times the integral of beta over [lower, pi], split at alpha0.

    Each of the two segments gets spec.intervals Simpson subintervals.

    Raises:
        DomainError: if lower is not in [0, alpha0).
        GeometryError, TrackingError, QuadratureError: from the numerical layers.
    """
    gd = geometric_branch(n, tol=alpha0_tol, settings=settings)
    if not 0 <= lower < gd.alpha0:
        raise DomainError(f"lower limit must lie in [0, {gd.alpha0:.6f}), got {lower}")
    hyperbolic = _hyperbolic_integral(n, lower, spec, alpha0_tol, settings)
    spherical = _spherical_integral(n, spec, alpha0_tol, settings)
    return (hyperbolic + spherical) / (4 * math.pi**2)


def orbifold_cs(
    n: int,
    k: int,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
    *,
    alpha0_tol: float = DEFAULT_ALPHA0_TOL,
    settings: TrackSettings = DEFAULT_TRACK_SETTINGS,
) -> CSValue:
    """Return cs(X_{2n}(2 pi/k)) modulo 1/k (k even) or 1/(2k) (k odd).

    Raises:
        DomainError: if n == 0 or k < 3.
        NonHyperbolicError: if 2 pi/k >= alpha0(n).
    """
    _check_n(n)
    if k < 3:
        raise DomainError(f"k must be at least 3, got {k}")
    alpha = 2 * math.pi / k
    gd = geometric_branch(n, tol=alpha0_tol, settings=settings)
    if alpha >= gd.alpha0 - HYPERBOLIC_MARGIN:
        raise NonHyperbolicError(
            f"X_{2 * n}(2pi/{k}) is not hyperbolic: 2pi/{k} = {alpha:.6f} "
            f">= alpha0 = {gd.alpha0:.6f}"
        )
    log.info("cs of X_%d(2pi/%d)... start", 2 * n, k)
    raw = float(lens_cs(n)) / 2 + schlafli_integral(
        n, alpha, spec, alpha0_tol=alpha0_tol, settings=settings
    )
    result = CSValue.reduce(raw, orbifold_modulus(k))
    log.info("cs of X_%d(2pi/%d)... ok (%.9f)", 2 * n, k, result.value)
    return result


def covering_cs(
    n: int,
    k: int,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
    *,
    alpha0_tol: float = DEFAULT_ALPHA0_TOL,
    settings: TrackSettings = DEFAULT_TRACK_SETTINGS,
) -> CSValue:
    """Return cs of the k-fold cyclic covering of X_{2n}(2 pi/k), modulo 1.

    Raises:
        DomainError, NonHyperbolicError: as `orbifold_cs`.
    """
    orbifold = orbifold_cs(n, k, spec, alpha0_tol=alpha0_tol, settings=settings)
    return covering_from_orbifold(orbifold, k)


def covering_from_orbifold(orbifold: CSValue, k: int) -> CSValue:
    """Return k times the reduced orbifold value, modulo 1."""
    return CSValue.reduce(k * orbifold.value, Fraction(1))


def knot_cs(
    n: int,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
    *,
    alpha0_tol: float = DEFAULT_ALPHA0_TOL,
    settings: TrackSettings = DEFAULT_TRACK_SETTINGS,
) -> CSValue:
    """Return cs of the complement of T_{2n} modulo 1/2.

    The Schläfli integral starts at the cusp angle 0.

    Raises:
        DomainError: if n == 0.
        QuadratureError: if beta is not finite near the cusp.
    """
    _check_n(n)
    log.info("cs of T_%d... start", 2 * n)
    raw = float(lens_cs(n)) / 2 + schlafli_integral(
        n, 0.0, spec, alpha0_tol=alpha0_tol, settings=settings
    )
    result = CSValue.reduce(raw, KNOT_MODULUS)
    log.info("cs of T_%d... ok (%.9f)", 2 * n, result.value)
    return result


@lru_cache(maxsize=256)
def _hyperbolic_integral(
    n: int,
    lower: float,
    spec: QuadratureSpec,
    alpha0_tol: float,
    settings: TrackSettings,
) -> float:
    gd = geometric_branch(n, tol=alpha0_tol, settings=settings)
    return simpson(gd.beta_samples, lower, gd.alpha0, spec)


@lru_cache(maxsize=64)
def _spherical_integral(
    n: int,
    spec: QuadratureSpec,
    alpha0_tol: float,
    settings: TrackSettings,
) -> float:
    gd = geometric_branch(n, tol=alpha0_tol, settings=settings)
    return simpson(gd.beta_samples, gd.alpha0, math.pi, spec)


def _check_n(n: int) -> None:
    if n == 0:
        raise DomainError("n = 0 is the unknot and has no hyperbolic structure")
