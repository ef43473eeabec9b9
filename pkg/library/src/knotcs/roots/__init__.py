"""Root finding and root continuation for the Riley-Mednykh polynomials.

Use `all_roots` for the roots of a single `PolyC`, `solve_batch` to
solve many polynomials of equal degree at once, `track` to follow one
root along the cone angle, and `sweep` to follow a complete root set.
"""

from .aberth import (
    DEFAULT_TOL,
    MAX_ITERATIONS,
    RESIDUAL_LIMIT,
    BatchResult,
    RootSet,
    all_roots,
    initial_guesses,
    solve_batch,
)
from .track import (
    DEFAULT_TRACK_SETTINGS,
    BranchTag,
    RootPath,
    Sweep,
    TrackSettings,
    match_roots,
    meridian,
    separations,
    sweep,
    track,
)

__all__ = [
    "DEFAULT_TOL",
    "DEFAULT_TRACK_SETTINGS",
    "MAX_ITERATIONS",
    "RESIDUAL_LIMIT",
    "BatchResult",
    "BranchTag",
    "RootPath",
    "RootSet",
    "Sweep",
    "TrackSettings",
    "all_roots",
    "initial_guesses",
    "match_roots",
    "meridian",
    "separations",
    "solve_batch",
    "sweep",
    "track",
]
