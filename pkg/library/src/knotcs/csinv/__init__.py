"""Chern-Simons invariants assembled from the lens-space value and Schläfli integrals."""

from .invariants import (
    KNOT_MODULUS,
    covering_cs,
    covering_from_orbifold,
    knot_cs,
    lens_cs,
    orbifold_cs,
    schlafli_integral,
)
from .quadrature import DEFAULT_QUADRATURE, QuadratureSpec, simpson, simpson_samples
from .value import CSValue, orbifold_modulus

__all__ = [
    "DEFAULT_QUADRATURE",
    "KNOT_MODULUS",
    "CSValue",
    "QuadratureSpec",
    "covering_cs",
    "covering_from_orbifold",
    "knot_cs",
    "lens_cs",
    "orbifold_cs",
    "orbifold_modulus",
    "schlafli_integral",
    "simpson",
    "simpson_samples",
]
