"""Module implementing the PolyC type."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Protocol

import numpy as np
from numpy.typing import ArrayLike

DEFLATION_THRESHOLD = 1e-12
"""Relative magnitude below which trailing coefficients are dropped."""


@dataclass(frozen=True)
class PolyC:
    """Univariate polynomial in t with complex coefficients.

    Coefficients are stored densely in ascending powers of t. Use
    `PolyC.from_coeffs` to build an instance with trailing coefficients
    deflated; the constructor stores what it is given.
    """

    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("polynomial must have at least one coefficient")

    @classmethod
    def from_coeffs(
        cls,
        values: ArrayLike | Sequence[complex],
        *,
        threshold: float = DEFLATION_THRESHOLD,
    ) -> PolyC:
        """Build a polynomial dropping negligible leading coefficients.

        A coefficient is negligible when its magnitude does not exceed
        threshold times the largest coefficient magnitude.
        """
        array = np.atleast_1d(np.asarray(values, dtype=complex))
        if array.size == 0:
            raise ValueError("polynomial must have at least one coefficient")
        scale = float(np.max(np.abs(array)))
        significant = np.flatnonzero(np.abs(array) > threshold * scale)
        last = int(significant[-1]) if significant.size else 0
        return cls(coeffs=tuple(complex(c) for c in array[: last + 1]))

    @cached_property
    def array(self) -> np.ndarray:
        """Coefficients as a read-only ascending numpy array."""
        array = np.array(self.coeffs, dtype=complex)
        array.flags.writeable = False
        return array

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> complex:
        return self.coeffs[-1]

    @property
    def scale(self) -> float:
        """Largest coefficient magnitude."""
        return float(np.max(np.abs(self.array)))

    def descending(self) -> np.ndarray:
        """Coefficients in descending powers (numpy.polyval order)."""
        return self.array[::-1].copy()

    def evaluator(self) -> Evaluator:
        """Return a one-row batch evaluator of this polynomial."""
        return DenseEvaluator(self.array[None, :])

    def __call__(self, t: complex) -> complex:
        return eval_poly(self, t)


def eval_poly(p: PolyC, t: complex) -> complex:
    """Evaluate p at t with Horner's scheme."""
    acc = complex(p.coeffs[-1])
    for c in reversed(p.coeffs[:-1]):
        acc = acc * t + c
    return acc


def poly_derivative(p: PolyC) -> PolyC:
    """Return the formal derivative of p in t."""
    if p.degree == 0:
        return PolyC(coeffs=(0j,))
    return PolyC(coeffs=tuple(complex(i * c) for i, c in enumerate(p.coeffs) if i > 0))


Evaluation = tuple[np.ndarray, np.ndarray, np.ndarray]
"""Values, t-derivatives and rounding scales, all of the shape of z."""


class Evaluator(Protocol):
    """Batched evaluation of polynomials sharing one degree.

    Row i of the batch is one polynomial; calling the evaluator with row
    indices of shape (K,) and points z of shape (K, m) returns p, p' and
    the rounding scale of p at every point.
    """

    @property
    def degree(self) -> int: ...

    def coefficients(self) -> np.ndarray: ...

    def __call__(self, rows: np.ndarray, z: np.ndarray) -> Evaluation: ...


@dataclass(frozen=True, eq=False)
class DenseEvaluator:
    """Horner evaluation of ascending coefficient rows, shape (N, d+1)."""

    coeffs: np.ndarray

    @property
    def degree(self) -> int:
        return self.coeffs.shape[-1] - 1

    def coefficients(self) -> np.ndarray:
        return self.coeffs

    def __call__(self, rows: np.ndarray, z: np.ndarray) -> Evaluation:
        return horner(self.coeffs[rows], z)


def horner(c: np.ndarray, z: np.ndarray) -> Evaluation:
    """Evaluate p, p' and sum |c_i| |z|^i; c is (N, d+1) ascending and z is (N, m)."""
    value = np.repeat(c[:, -1:], z.shape[1], axis=1)
    slope = np.zeros_like(value)
    abs_c = np.abs(c)
    abs_z = np.abs(z)
    bound = np.repeat(abs_c[:, -1:], z.shape[1], axis=1)
    for j in range(c.shape[1] - 2, -1, -1):
        slope = slope * z + value
        value = value * z + c[:, j : j + 1]
        bound = bound * abs_z + abs_c[:, j : j + 1]
    return value, slope, bound
