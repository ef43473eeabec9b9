"""Riley-Mednykh polynomials of the C(2n,3) two-bridge knots.

The polynomial P_{2n}(t, M) is produced by a three-term recursion with
the cubic Q(t, M) as multiplier:

    P_{2n} = Q P_{2(n-1)} - M^8 P_{2(n-2)}     (n >= 2)
    P_{2n} = Q P_{2(n+1)} - M^8 P_{2(n+2)}     (n <= -2)

The recursion runs on concrete values of M. `rm_coefficients` accepts an
array of M values and returns one coefficient row per value.

The expanded coefficients are badly conditioned once |n| grows (the
recursion behaves like a Chebyshev recurrence), so roots are never
computed from them. `rm_values` runs the same recursion on values of t
instead, together with the t-derivative and a running bound on the
rounding error; `RileyEvaluator` feeds it to the root finder.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.typing import ArrayLike

from ..errors import DomainError
from .poly import Evaluation, PolyC

log = logging.getLogger("knotcs.rmpoly")


def rm_degree(n: int) -> int:
    """Return the t-degree of P_{2n}: 3n for n >= 1 and -(3n+1) for n <= -1."""
    _check_n(n)
    return 3 * n if n > 0 else -(3 * n + 1)


def q_coefficients(M: ArrayLike) -> np.ndarray:
    """Return the ascending coefficients of Q(t, M), shape (..., 4)."""
    m = _as_meridian(M)
    m2 = m * m
    m4 = m2 * m2
    m6 = m4 * m2
    m8 = m4 * m4
    return np.stack(
        [
            2 * m4,
            -m8 + 2 * m6 - 3 * m4 + 2 * m2 - 1,
            -2 * m6 + 2 * m4 - 2 * m2,
            -m4,
        ],
        axis=-1,
    )


def rm_coefficients(n: int, M: ArrayLike) -> np.ndarray:
    """Return the ascending coefficients of P_{2n}(t, M), shape (..., degree+1).

    Raises:
        DomainError: if n == 0 or any M == 0.
    """
    _check_n(n)
    m = _as_meridian(M)
    m2 = m * m
    m4 = m2 * m2
    m6 = m4 * m2
    m8 = m4 * m4
    ones = np.ones_like(m)
    q = q_coefficients(m)

    # The seeds P_0 = M^8 (upward) and P_0 = M^6 (downward) are the whole
    # term subtracted by the first step, so the stored P_0 is seed / M^8.
    if n > 0:
        older = np.expand_dims(ones, -1)
        newer = np.stack([m4, -m8 + m6 - 2 * m4 + m2 - 1, -2 * m6 + m4 - 2 * m2, -m4], axis=-1)
    else:
        older = np.expand_dims(1 / m2, -1)
        newer = np.stack([m2, m4 - m2 + 1, m2], axis=-1)

    for _ in range(abs(n) - 1):
        step = _polymul(q, newer)
        step[..., : older.shape[-1]] -= np.expand_dims(m8, -1) * older
        older, newer = newer, step

    return newer


def rm_values(n: int, M: ArrayLike, t: ArrayLike, *, shift: complex = 0j) -> Evaluation:
    """Evaluate P_{2n}(t, M) + shift by running the recursion on values.

    M and t broadcast against each other. Returns the value, the
    t-derivative and a bound on the magnitude of the terms summed, which
    scales the rounding error of the value.

    Raises:
        DomainError: if n == 0 or any M == 0.
    """
    _check_n(n)
    m = _as_meridian(M)
    z = np.asarray(t, dtype=complex)
    m2 = m * m
    m4 = m2 * m2
    m6 = m4 * m2
    m8 = m4 * m4
    abs_m8 = np.abs(m8)
    qv, qd, qb = _terms(list(np.moveaxis(q_coefficients(m), -1, 0)), z)

    if n > 0:
        older = (np.ones_like(qv), np.zeros_like(qv), np.ones(qv.shape))
        newer = _terms([m4, -m8 + m6 - 2 * m4 + m2 - 1, -2 * m6 + m4 - 2 * m2, -m4], z)
    else:
        seed = np.broadcast_to(1 / m2, qv.shape)
        older = (seed, np.zeros_like(qv), np.abs(seed))
        newer = _terms([m2, m4 - m2 + 1, m2], z)

    for _ in range(abs(n) - 1):
        (ov, od, ob), (nv, nd, nb) = older, newer
        step = (
            qv * nv - m8 * ov,
            qd * nv + qv * nd - m8 * od,
            qb * nb + abs_m8 * ob,
        )
        older, newer = newer, step

    value, slope, bound = np.broadcast_arrays(*newer)
    return value + shift, slope.copy(), bound + abs(shift)


@dataclass(frozen=True, eq=False)
class RileyEvaluator:
    """Batch evaluator of P_{2n}(·, M) + shift, one row per meridian."""

    n: int
    meridians: np.ndarray
    shift: complex = 0j

    def __post_init__(self) -> None:
        _check_n(self.n)
        object.__setattr__(self, "meridians", np.atleast_1d(_as_meridian(self.meridians)))

    @property
    def degree(self) -> int:
        return rm_degree(self.n)

    def coefficients(self) -> np.ndarray:
        coeffs = rm_coefficients(self.n, self.meridians)
        coeffs[..., 0] += self.shift
        return coeffs

    def __call__(self, rows: np.ndarray, z: np.ndarray) -> Evaluation:
        return rm_values(self.n, self.meridians[rows][:, None], z, shift=self.shift)


@dataclass(frozen=True, kw_only=True)
class RileyPoly(PolyC):
    """P_{2n}(·, M) at one meridian, evaluated through the recursion.

    The stored coefficients are kept for inspection and for starting
    points only.
    """

    n: int
    meridian: complex

    def evaluator(self) -> RileyEvaluator:
        return RileyEvaluator(self.n, np.array([self.meridian]))

    def __call__(self, t: complex) -> complex:
        return complex(rm_values(self.n, self.meridian, t)[0])


@lru_cache(maxsize=4096)
def build_q_poly(M: complex) -> PolyC:
    """Return the cubic Q(·, M).

    Raises:
        DomainError: if M == 0.
    """
    return PolyC.from_coeffs(q_coefficients(M))


@lru_cache(maxsize=4096)
def build_rm_poly(n: int, M: complex) -> RileyPoly:
    """Return the Riley-Mednykh polynomial P_{2n}(·, M).

    Evaluating the result runs the recursion; its coefficients are the
    expanded form.

    Raises:
        DomainError: if n == 0 or M == 0.
    """
    coeffs = rm_coefficients(n, M)
    poly = RileyPoly(coeffs=PolyC.from_coeffs(coeffs).coeffs, n=n, meridian=complex(M))
    if poly.degree != rm_degree(n):
        log.warning(
            "P_%d at M=%s has degree %d instead of %d", 2 * n, M, poly.degree, rm_degree(n)
        )
    return poly


def _terms(coeffs: list[np.ndarray], z: np.ndarray) -> Evaluation:
    """Horner over coefficient arrays that broadcast against z."""
    value = coeffs[-1] * np.ones_like(z)
    slope = np.zeros_like(value)
    bound = np.abs(value)
    abs_z = np.abs(z)
    for c in reversed(coeffs[:-1]):
        slope = slope * z + value
        value = value * z + c
        bound = bound * abs_z + np.abs(c)
    return value, slope, bound


def _polymul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Multiply rows of ascending coefficient arrays with broadcasting."""
    shape = np.broadcast_shapes(a.shape[:-1], b.shape[:-1])
    out = np.zeros(shape + (a.shape[-1] + b.shape[-1] - 1,), dtype=complex)
    width = b.shape[-1]
    for j in range(a.shape[-1]):
        out[..., j : j + width] += a[..., j : j + 1] * b
    return out


def _as_meridian(M: ArrayLike) -> np.ndarray:
    m = np.asarray(M, dtype=complex)
    if np.any(m == 0):
        raise DomainError("meridian eigenvalue M must be nonzero")
    return m


def _check_n(n: int) -> None:
    if n == 0:
        raise DomainError("n = 0 is the unknot and has no hyperbolic structure")
