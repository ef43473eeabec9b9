"""Exceptions raised by the knotcs library.

Every exception derives from `KnotCSError` and carries the exit code
the command-line tool uses when the exception reaches it. The
`scripting.knotcs_exception.Interceptor` reads this attribute.
"""

from __future__ import annotations


class KnotCSError(Exception):
    """Base class for all knotcs errors."""

    exit_code = 4


class DomainError(KnotCSError, ValueError):
    """An input is outside the domain of the operation (e.g., n = 0)."""

    exit_code = 2


class SolverError(KnotCSError, ArithmeticError):
    """The polynomial root finder did not converge."""

    def __init__(self, message: str, *, iterations: int, residual: float):
        super().__init__(f"{message} (iterations={iterations}, residual={residual:.3e})")
        self.iterations = iterations
        self.residual = residual


class TrackingError(KnotCSError):
    """Root continuation could not find an unambiguous next step."""

    def __init__(self, message: str, *, last_good_alpha: float):
        super().__init__(f"{message} (last good alpha={last_good_alpha:.12g})")
        self.last_good_alpha = last_good_alpha


class GeometryError(KnotCSError):
    """The geometric branch or its collision angle cannot be identified."""

    def __init__(self, message: str, *, candidates: tuple[float, ...] = ()):
        if candidates:
            listed = ", ".join(f"{alpha:.10f}" for alpha in candidates)
            message = f"{message} (candidates: {listed})"
        super().__init__(message)
        self.candidates = candidates


class NonHyperbolicError(KnotCSError):
    """The requested orbifold is not hyperbolic (2π/k ≥ α₀)."""

    exit_code = 3


class PoleError(KnotCSError, ZeroDivisionError):
    """The longitude eigenvalue formula hit its pole tv = −M²."""


class QuadratureError(KnotCSError):
    """The integrand produced a non-finite sample."""

    def __init__(self, message: str, *, node: float):
        super().__init__(f"{message} (node alpha={node:.12g})")
        self.node = node
