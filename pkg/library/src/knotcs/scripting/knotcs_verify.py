"""Optional scripting extensions to run the self-consistency suite.

Each check cross-examines two independent layers: the recursion against
the matrix representation, the closed-form longitude against the matrix
longitude, the reduced values against their moduli. A perturbation of the
polynomial coefficients makes the representation checks fail, which is
how the suite proves it can fail.
"""

from __future__ import annotations

import math
import time
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..csinv import QuadratureSpec, covering_from_orbifold, lens_cs, orbifold_cs, orbifold_modulus
from ..errors import KnotCSError, PoleError
from ..geometry import geometric_branch, longitude_eigenvalue
from ..holonomy import longitude_matrix, relation_residual
from ..rmpoly import RileyEvaluator, build_rm_poly, eval_poly, rm_degree, rm_values
from ..roots import all_roots, meridian
from .knotcs_logging import log

QUICK_NS = (1, -1, 2, -2)
FULL_NS = tuple(n for n in range(-9, 10) if n != 0)

RELATION_LIMIT = 1e-9
LONGITUDE_LIMIT = 1e-9
RECURSION_LIMIT = 1e-10
SIGN_LIMIT = 1e-10
COVERING_LIMIT = 1e-10

DEGREE_SAMPLES = 64
ROOT_SAMPLES = 20
RECURSION_SAMPLES = 10
SIGN_SAMPLES = 50
VERIFY_INTERVALS = 2000


@dataclass(frozen=True, kw_only=True)
class CheckResult:
    """Outcome of one check."""

    name: str
    passed: bool
    detail: str


@dataclass(frozen=True, kw_only=True)
class VerifyResult:
    """Outcome of the whole suite."""

    checks: tuple[CheckResult, ...]
    elapsed: float

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


@dataclass(frozen=True, kw_only=True)
class _Context:
    ns: tuple[int, ...]
    perturb: float
    intervals: int
    rng: np.random.Generator

    def alphas(self, count: int) -> np.ndarray:
        return np.sort(self.rng.uniform(0.05, math.pi, size=count))

    def roots(self, n: int, alpha: float) -> np.ndarray:
        polys = RileyEvaluator(n, meridian(alpha), shift=self.perturb)
        return all_roots(polys).as_array()


def check_degree(ctx: _Context) -> CheckResult:
    bad = []
    for n in ctx.ns:
        for alpha in ctx.alphas(DEGREE_SAMPLES):
            degree = build_rm_poly(n, complex(meridian(alpha))).degree
            if degree != rm_degree(n):
                bad.append(f"n={n} alpha={alpha:.4f} degree={degree}")
    return CheckResult(
        name="degree",
        passed=not bad,
        detail="; ".join(bad[:3]) or f"{len(ctx.ns) * DEGREE_SAMPLES} polynomials",
    )


def check_recursion(ctx: _Context) -> CheckResult:
    worst = 0.0
    checked = 0
    for n in ctx.ns:
        for _ in range(RECURSION_SAMPLES):
            M = complex(meridian(ctx.rng.uniform(0, math.pi)))  # noqa: N806
            t = complex(*ctx.rng.normal(size=2))
            value, _, bound = rm_values(n, M, t)
            expanded = eval_poly(build_rm_poly(n, M), t)
            worst = max(worst, abs(complex(value) - expanded) / float(bound))
            checked += 1
    return CheckResult(
        name="recursion",
        passed=worst < RECURSION_LIMIT,
        detail=f"max relative error {worst:.2e} over {checked} samples",
    )


def check_relation(ctx: _Context) -> CheckResult:
    worst, where = 0.0, ""
    for n in ctx.ns:
        for alpha in ctx.alphas(ROOT_SAMPLES):
            M = complex(meridian(alpha))  # noqa: N806
            for tv in ctx.roots(n, alpha):
                residual = relation_residual(n, M, complex(tv))
                if residual > worst:
                    worst, where = residual, f"n={n} alpha={alpha:.4f}"
    return CheckResult(
        name="relation",
        passed=worst < RELATION_LIMIT,
        detail=f"max residual {worst:.2e} ({where})",
    )


def check_longitude(ctx: _Context) -> CheckResult:
    worst, where = 0.0, ""
    for n in ctx.ns:
        for alpha in ctx.alphas(ROOT_SAMPLES):
            M = complex(meridian(alpha))  # noqa: N806
            for tv in ctx.roots(n, alpha):
                try:
                    closed = longitude_eigenvalue(n, M, complex(tv))
                except PoleError:
                    continue
                matrix = longitude_matrix(n, M, complex(tv))
                error = abs(closed - matrix) / max(1.0, abs(closed))
                if error > worst:
                    worst, where = error, f"n={n} alpha={alpha:.4f}"
    return CheckResult(
        name="longitude",
        passed=worst < LONGITUDE_LIMIT,
        detail=f"max relative disagreement {worst:.2e} ({where})",
    )


def check_lens(ctx: _Context) -> CheckResult:
    values = {n: lens_cs(n) for n in FULL_NS}
    exact = values[1] == Fraction(4, 7) and values[-2] == Fraction(2, 11)
    bounded = all(0 <= v < 1 for v in values.values())
    return CheckResult(
        name="lens",
        passed=exact and bounded,
        detail=f"lens_cs(1)={values[1]}, lens_cs(-2)={values[-2]}",
    )


def check_modulus(ctx: _Context) -> CheckResult:
    spec = QuadratureSpec(intervals=ctx.intervals)
    cells = [(n, k) for n in ctx.ns for k in (4, 5)]
    if len(cells) > 8:
        picks = ctx.rng.choice(len(cells), size=8, replace=False)
        cells = [cells[i] for i in sorted(picks)]
    bad = []
    for n, k in cells:
        orbifold = orbifold_cs(n, k, spec)
        covering = covering_from_orbifold(orbifold, k)
        if not 0 <= orbifold.value < float(orbifold_modulus(k)):
            bad.append(f"n={n} k={k}: {orbifold.value} outside [0, {orbifold_modulus(k)})")
        gap = (covering.value - k * orbifold.value) % 1
        if min(gap, 1 - gap) > COVERING_LIMIT:
            bad.append(f"n={n} k={k}: covering off by {gap:.2e}")
    return CheckResult(
        name="modulus",
        passed=not bad,
        detail="; ".join(bad[:3]) or f"{len(cells)} cells at {ctx.intervals} intervals",
    )


def check_geometric_sign(ctx: _Context) -> CheckResult:
    worst, where = -math.inf, ""
    for n in ctx.ns:
        gd = geometric_branch(n)
        alphas = np.linspace(0.05, gd.alpha0 - 1e-3, SIGN_SAMPLES)
        imag = gd.geometric_roots(alphas).imag
        j = int(np.argmax(imag))
        if imag[j] > worst:
            worst, where = float(imag[j]), f"n={n} alpha={alphas[j]:.4f}"
    return CheckResult(
        name="geometric-sign",
        passed=worst <= SIGN_LIMIT,
        detail=f"max Im t {worst:.2e} ({where})",
    )


CHECKS: tuple[Callable[[_Context], CheckResult], ...] = (
    check_degree,
    check_recursion,
    check_relation,
    check_longitude,
    check_lens,
    check_modulus,
    check_geometric_sign,
)


def run(
    *,
    quick: bool = False,
    perturb: float = 0.0,
    intervals: int = VERIFY_INTERVALS,
    seed: int = 0,
    checks: Sequence[Callable[[_Context], CheckResult]] = CHECKS,
) -> VerifyResult:
    """Run the suite over n in {+-1, +-2} (quick) or every n in [-9, 9] but 0.

    Args:
        quick: restrict to the small n subset.
        perturb: added to the constant coefficient of every polynomial whose
            roots feed the representation checks.
        intervals: Simpson intervals for the modulus check.
        seed: seed of the sample generator.
        checks: the checks to run, in order.
    """
    ctx = _Context(
        ns=QUICK_NS if quick else FULL_NS,
        perturb=perturb,
        intervals=intervals,
        rng=np.random.default_rng(seed),
    )
    t0 = time.monotonic()
    results = []
    for check in checks:
        name = check.__name__.removeprefix("check_").replace("_", "-")
        log.info("check %s... start", name)
        try:
            result = check(ctx)
        except KnotCSError as exc:
            result = CheckResult(name=name, passed=False, detail=str(exc))
        log.info("check %s... %s", name, "ok" if result.passed else "failure")
        results.append(result)
    return VerifyResult(checks=tuple(results), elapsed=time.monotonic() - t0)
