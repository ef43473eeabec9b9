"""Geometric branch, Euclidean angle and Schläfli integrand of X_{2n}(alpha)."""

from .branch import (
    DEFAULT_ALPHA0_TOL,
    LIMIT_OFFSET,
    BranchAnchors,
    BranchVolumes,
    GeometricData,
    Side,
    beta_integrand,
    branch_volumes,
    find_alpha0,
    geometric_branch,
    select_collision,
    volume_oracle,
)
from .collision import WINDOW_LOW, Collision, collision_candidates, lower_mask
from .cone import ConeParams, longitude_eigenvalue, longitude_eigenvalues

__all__ = [
    "DEFAULT_ALPHA0_TOL",
    "LIMIT_OFFSET",
    "WINDOW_LOW",
    "BranchAnchors",
    "BranchVolumes",
    "Collision",
    "ConeParams",
    "GeometricData",
    "Side",
    "beta_integrand",
    "branch_volumes",
    "collision_candidates",
    "find_alpha0",
    "geometric_branch",
    "longitude_eigenvalue",
    "longitude_eigenvalues",
    "lower_mask",
    "select_collision",
    "volume_oracle",
]
