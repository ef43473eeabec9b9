"""Tests for the knotcs.rmpoly.riley module."""

import cmath
import math

import numpy as np
import pytest

from knotcs.errors import DomainError
from knotcs.rmpoly import (
    PolyC,
    RileyEvaluator,
    RileyPoly,
    build_q_poly,
    build_rm_poly,
    eval_poly,
    poly_derivative,
    rm_coefficients,
    rm_degree,
    rm_values,
)

NS = [n for n in range(-9, 10) if n != 0]


class TestBuildQPoly:
    """build_q_poly returns the auxiliary cubic."""

    def test_at_one(self) -> None:
        assert list(build_q_poly(1).coeffs) == pytest.approx([2, -1, -2, -1])

    def test_general_meridian(self) -> None:
        M = cmath.exp(0.7j)  # noqa: N806
        expected = [
            2 * M**4,
            -(M**8) + 2 * M**6 - 3 * M**4 + 2 * M**2 - 1,
            -2 * M**6 + 2 * M**4 - 2 * M**2,
            -(M**4),
        ]
        assert list(build_q_poly(M).coeffs) == pytest.approx(expected)

    def test_zero_meridian_raises(self) -> None:
        with pytest.raises(DomainError):
            build_q_poly(0)


class TestBuildRMPoly:
    """build_rm_poly evaluates the recursion at a fixed meridian."""

    def test_p2_at_one(self) -> None:
        assert list(build_rm_poly(1, 1).coeffs) == pytest.approx([1, -2, -3, -1])

    def test_p2_constant_term(self) -> None:
        assert build_rm_poly(1, 1)(0) == pytest.approx(1)

    def test_p4_at_one_one(self) -> None:
        assert build_rm_poly(2, 1)(1) == pytest.approx(9)

    def test_p_minus2(self) -> None:
        M = cmath.exp(0.4j)  # noqa: N806
        assert list(build_rm_poly(-1, M).coeffs) == pytest.approx([M**2, M**4 - M**2 + 1, M**2])

    def test_zero_n_raises(self) -> None:
        with pytest.raises(DomainError):
            build_rm_poly(0, 1)

    def test_zero_meridian_raises(self) -> None:
        with pytest.raises(DomainError):
            build_rm_poly(1, 0)

    @pytest.mark.parametrize("n", NS)
    def test_degree_on_unit_circle(self, n: int) -> None:
        for alpha in np.linspace(0.01, math.pi, 64):
            assert build_rm_poly(n, cmath.exp(0.5j * alpha)).degree == rm_degree(n)

    @pytest.mark.parametrize("n", [3, 5, 9])
    def test_upward_recursion(self, n: int) -> None:
        rng = np.random.default_rng(n)
        for _ in range(10):
            M = cmath.exp(1j * rng.uniform(0, math.pi))  # noqa: N806
            t = complex(*rng.normal(size=2))
            expected = build_q_poly(M)(t) * build_rm_poly(n - 1, M)(t) - M**8 * build_rm_poly(
                n - 2, M
            )(t)
            assert build_rm_poly(n, M)(t) == pytest.approx(expected, rel=1e-10)

    @pytest.mark.parametrize("n", [-3, -5, -9])
    def test_downward_recursion(self, n: int) -> None:
        rng = np.random.default_rng(-n)
        for _ in range(10):
            M = cmath.exp(1j * rng.uniform(0, math.pi))  # noqa: N806
            t = complex(*rng.normal(size=2))
            expected = build_q_poly(M)(t) * build_rm_poly(n + 1, M)(t) - M**8 * build_rm_poly(
                n + 2, M
            )(t)
            assert build_rm_poly(n, M)(t) == pytest.approx(expected, rel=1e-10)


class TestRMDegree:
    """rm_degree counts the roots of P_{2n}."""

    @pytest.mark.parametrize(("n", "degree"), [(1, 3), (9, 27), (-1, 2), (-2, 5), (-9, 26)])
    def test_values(self, n: int, degree: int) -> None:
        assert rm_degree(n) == degree


class TestRMCoefficients:
    """rm_coefficients is vectorized over M."""

    def test_rows_match_scalar(self) -> None:
        ms = np.exp(0.5j * np.array([0.3, 1.2, 2.9]))
        rows = rm_coefficients(4, ms)
        assert rows.shape == (3, 13)
        for row, M in zip(rows, ms, strict=True):  # noqa: N806
            assert row == pytest.approx(np.array(build_rm_poly(4, complex(M)).coeffs))

    def test_real_up_to_power_of_meridian(self) -> None:
        # P_{2n} / M^{4n} has real coefficients on |M| = 1
        M = cmath.exp(1.1j)  # noqa: N806
        scaled = rm_coefficients(3, M) / M**12
        np.testing.assert_allclose(scaled.imag, 0, atol=1e-12)


class TestRMValues:
    """rm_values runs the recursion on values of t."""

    @pytest.mark.parametrize("n", [1, 2, 3, -1, -2, -3])
    def test_matches_expanded_form(self, n: int) -> None:
        rng = np.random.default_rng(10 + n)
        for _ in range(10):
            M = cmath.exp(1j * rng.uniform(0, math.pi))  # noqa: N806
            t = complex(*rng.normal(size=2))
            p = PolyC(coeffs=tuple(complex(c) for c in rm_coefficients(n, M)))
            value, slope, bound = rm_values(n, M, t)
            assert abs(complex(value) - eval_poly(p, t)) <= 1e-12 * float(bound)
            expected = eval_poly(poly_derivative(p), t)
            assert complex(slope) == pytest.approx(expected, rel=1e-9, abs=1e-9 * float(bound))

    @pytest.mark.parametrize("n", NS)
    def test_bound_dominates_value(self, n: int) -> None:
        t = np.linspace(-3, 3, 25) + 0.5j
        value, _, bound = rm_values(n, cmath.exp(0.8j), t)
        assert np.all(np.abs(value) <= bound * (1 + 1e-12))

    def test_broadcasts_meridians_against_points(self) -> None:
        ms = np.exp(0.5j * np.array([0.3, 1.2]))[:, None]
        t = np.array([[0.1, 2.0, -1j], [1.0, 0.5, 3.0]])
        value, slope, bound = rm_values(-4, ms, t)
        assert value.shape == slope.shape == bound.shape == (2, 3)
        assert value[1, 2] == pytest.approx(build_rm_poly(-4, complex(ms[1, 0]))(3.0))

    def test_shift_moves_constant_term(self) -> None:
        M = cmath.exp(0.6j)  # noqa: N806
        plain, _, plain_bound = rm_values(2, M, 0.7)
        shifted, _, shifted_bound = rm_values(2, M, 0.7, shift=1e-3)
        assert complex(shifted - plain) == pytest.approx(1e-3)
        assert float(shifted_bound - plain_bound) == pytest.approx(1e-3)

    def test_zero_n_raises(self) -> None:
        with pytest.raises(DomainError):
            rm_values(0, 1, 0.5)


class TestRileyEvaluator:
    """RileyEvaluator serves batches of P_{2n} to the root finder."""

    def test_rows_follow_meridians(self) -> None:
        ms = np.exp(0.5j * np.array([0.5, 2.5]))
        evaluator = RileyEvaluator(3, ms)
        z = np.array([[0.2, 1 + 1j], [-0.4, 2.0]])
        value, _, _ = evaluator(np.array([1, 0]), z)
        assert value[0, 1] == pytest.approx(build_rm_poly(3, complex(ms[1]))(2.0))
        assert value[1, 0] == pytest.approx(build_rm_poly(3, complex(ms[0]))(0.2))

    def test_coefficients_carry_shift(self) -> None:
        evaluator = RileyEvaluator(-2, np.exp(0.5j), shift=0.25)
        coeffs = evaluator.coefficients()
        assert coeffs.shape == (1, rm_degree(-2) + 1)
        assert coeffs[0, 0] == pytest.approx(rm_coefficients(-2, np.exp(0.5j))[0] + 0.25)

    def test_degree(self) -> None:
        assert RileyEvaluator(9, np.array([1.0])).degree == 27


class TestRileyPoly:
    """build_rm_poly returns a polynomial evaluated through the recursion."""

    def test_type_and_fields(self) -> None:
        p = build_rm_poly(-3, cmath.exp(0.9j))
        assert isinstance(p, RileyPoly)
        assert p.n == -3
        assert p.meridian == cmath.exp(0.9j)

    def test_evaluator_matches_call(self) -> None:
        p = build_rm_poly(7, cmath.exp(1.4j))
        value, _, _ = p.evaluator()(np.array([0]), np.array([[0.3 - 0.2j]]))
        assert value[0, 0] == pytest.approx(p(0.3 - 0.2j))
