"""Chern-Simons invariants of the C(2n,3) two-bridge knot cone-manifolds.

The expected usage is like:

    from knotcs import orbifold_cs

    value = orbifold_cs(1, 3)
    print(value.value, value.modulus)
"""

from importlib.metadata import PackageNotFoundError, version

from .csinv import (
    CSValue,
    QuadratureSpec,
    covering_cs,
    knot_cs,
    lens_cs,
    orbifold_cs,
    simpson,
)
from .errors import (
    DomainError,
    GeometryError,
    KnotCSError,
    NonHyperbolicError,
    PoleError,
    QuadratureError,
    SolverError,
    TrackingError,
)
from .geometry import (
    ConeParams,
    GeometricData,
    beta_integrand,
    find_alpha0,
    geometric_branch,
    longitude_eigenvalue,
    volume_oracle,
)
from .holonomy import GroupWord, Mat2, longitude_matrix, relation_residual, rep_matrices, word_matrix
from .rmpoly import PolyC, build_q_poly, build_rm_poly, eval_poly, poly_derivative
from .roots import RootPath, RootSet, all_roots, track

try:
    __version__ = version("knotcs")
except PackageNotFoundError:
    __version__ = "0.0.0"

__all__ = [
    "CSValue",
    "ConeParams",
    "DomainError",
    "GeometricData",
    "GeometryError",
    "GroupWord",
    "KnotCSError",
    "Mat2",
    "NonHyperbolicError",
    "PoleError",
    "PolyC",
    "QuadratureError",
    "QuadratureSpec",
    "RootPath",
    "RootSet",
    "SolverError",
    "TrackingError",
    "__version__",
    "all_roots",
    "beta_integrand",
    "build_q_poly",
    "build_rm_poly",
    "covering_cs",
    "eval_poly",
    "find_alpha0",
    "geometric_branch",
    "knot_cs",
    "lens_cs",
    "longitude_eigenvalue",
    "longitude_matrix",
    "orbifold_cs",
    "poly_derivative",
    "relation_residual",
    "rep_matrices",
    "simpson",
    "track",
    "volume_oracle",
    "word_matrix",
]
