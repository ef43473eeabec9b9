"""Composite Simpson quadrature on equally spaced nodes."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from ..errors import DomainError, QuadratureError


@dataclass(frozen=True, kw_only=True)
class QuadratureSpec:
    """Number of Simpson subintervals used on each integration segment."""

    intervals: int = 10000

    def __post_init__(self) -> None:
        if self.intervals < 2 or self.intervals % 2:
            raise DomainError(f"interval count must be even and >= 2, got {self.intervals}")


DEFAULT_QUADRATURE = QuadratureSpec()


def simpson(
    f: Callable[[np.ndarray], np.ndarray | float],
    a: float,
    b: float,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
) -> float:
    """Integrate f over [a, b] with spec.intervals Simpson subintervals.

    f is called once with the array of all nodes; a scalar result is
    broadcast over them.

    Raises:
        DomainError: if a >= b.
        QuadratureError: if f is not finite at some node.
    """
    if not a < b:
        raise DomainError(f"integration bounds must satisfy a < b, got a={a}, b={b}")
    nodes = np.linspace(a, b, spec.intervals + 1)
    samples = np.broadcast_to(np.asarray(f(nodes), dtype=float), nodes.shape)
    bad = np.flatnonzero(~np.isfinite(samples))
    if bad.size:
        raise QuadratureError("integrand is not finite", node=float(nodes[bad[0]]))
    return simpson_samples(samples, a, b)


def simpson_samples(y: np.ndarray, a: float, b: float) -> float:
    """Composite Simpson value of samples y taken on linspace(a, b, len(y))."""
    y = np.asarray(y, dtype=float)
    intervals = y.size - 1
    if intervals < 2 or intervals % 2:
        raise DomainError(f"Simpson's rule needs an even number of intervals, got {intervals}")
    h = (b - a) / intervals
    total = y[0] + y[-1] + 4 * np.sum(y[1:-1:2]) + 2 * np.sum(y[2:-1:2])
    return float(h / 3 * total)
