"""Cone parameters and the closed-form longitude eigenvalue."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from ..errors import DomainError, PoleError

POLE_TOLERANCE = 1e-14


@dataclass(frozen=True, kw_only=True)
class ConeParams:
    """Knot parameter n and cone angle alpha of X_{2n}(alpha)."""

    n: int
    alpha: float

    def __post_init__(self) -> None:
        if self.n == 0:
            raise DomainError("n = 0 is the unknot and has no hyperbolic structure")
        if not 0 < self.alpha <= math.pi:
            raise DomainError(f"cone angle must lie in (0, pi], got {self.alpha}")

    @property
    def M(self) -> complex:  # noqa: N802
        """Meridian eigenvalue exp(i alpha / 2)."""
        return complex(math.cos(self.alpha / 2), math.sin(self.alpha / 2))


def longitude_eigenvalue(n: int, M: complex, tv: complex) -> complex:
    """Return L = -M^(-4n-2) (M^-2 + tv) / (M^2 + tv).

    Raises:
        DomainError: if n == 0 or M == 0.
        PoleError: if tv = -M^2.
    """
    return complex(longitude_eigenvalues(n, M, tv))


def longitude_eigenvalues(n: int, M: ArrayLike, tv: ArrayLike) -> np.ndarray:
    """Vectorized `longitude_eigenvalue`; M and tv broadcast together.

    Raises:
        DomainError: if n == 0 or any M == 0.
        PoleError: if any tv = -M^2.
    """
    if n == 0:
        raise DomainError("n = 0 is the unknot and has no hyperbolic structure")
    m = np.asarray(M, dtype=complex)
    t = np.asarray(tv, dtype=complex)
    if np.any(m == 0):
        raise DomainError("meridian eigenvalue M must be nonzero")
    m2 = m * m
    denominator = m2 + t
    if np.any(np.abs(denominator) <= POLE_TOLERANCE * (1 + np.abs(t))):
        raise PoleError(f"longitude eigenvalue pole tv = -M^2 reached for n={n}")
    return -(m ** (-4 * n - 2)) * (1 / m2 + t) / denominator
