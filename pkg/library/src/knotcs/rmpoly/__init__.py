"""Construction and evaluation of the Riley-Mednykh polynomials.

The `PolyC` type is a polynomial in t with complex coefficients, in
ascending order. `build_rm_poly` returns P_{2n}(·, M) at a concrete
meridian eigenvalue M; `rm_coefficients` does the same for an array of
M values at once. Root finding goes through an `Evaluator`:
`RileyEvaluator` evaluates P_{2n} by its recursion, `DenseEvaluator`
from the coefficients.
"""

from .poly import (
    DEFLATION_THRESHOLD,
    DenseEvaluator,
    Evaluation,
    Evaluator,
    PolyC,
    eval_poly,
    horner,
    poly_derivative,
)
from .riley import (
    RileyEvaluator,
    RileyPoly,
    build_q_poly,
    build_rm_poly,
    q_coefficients,
    rm_coefficients,
    rm_degree,
    rm_values,
)

__all__ = [
    "DEFLATION_THRESHOLD",
    "DenseEvaluator",
    "Evaluation",
    "Evaluator",
    "PolyC",
    "RileyEvaluator",
    "RileyPoly",
    "build_q_poly",
    "build_rm_poly",
    "eval_poly",
    "horner",
    "poly_derivative",
    "q_coefficients",
    "rm_coefficients",
    "rm_degree",
    "rm_values",
]
