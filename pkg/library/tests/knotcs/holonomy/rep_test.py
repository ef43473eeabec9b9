"""Tests for the knotcs.holonomy.rep module."""

import cmath
import math

import numpy as np
import pytest

from knotcs.errors import DomainError
from knotcs.geometry import longitude_eigenvalue
from knotcs.holonomy import (
    GroupWord,
    Mat2,
    longitude_matrix,
    relation_residual,
    rep_matrices,
    word_matrix,
)
from knotcs.rmpoly import RileyEvaluator, build_rm_poly
from knotcs.roots import all_roots


SMALL_NS = [1, 2, -1, -2]
LARGE_NS = [n for n in range(-9, 10) if abs(n) > 2]


def _roots(n: int, M: complex) -> list[complex]:  # noqa: N803
    return list(all_roots(build_rm_poly(n, M)).roots)


def _slow(ns: list[int]) -> list:
    return [pytest.param(n, marks=pytest.mark.slow) for n in ns]


class TestMat2:
    """Mat2 arithmetic."""

    def test_identity_is_neutral(self) -> None:
        a = Mat2(a11=1, a12=2j, a21=3, a22=4)
        assert a @ Mat2.identity() == a
        assert Mat2.identity() @ a == a

    def test_inverse(self) -> None:
        a = Mat2(a11=2, a12=1j, a21=1, a22=1)
        product = a @ a.inverse()
        assert (product - Mat2.identity()).max_abs() < 1e-15

    def test_det(self) -> None:
        assert Mat2(a11=1, a12=2, a21=3, a22=4).det() == -2

    def test_singular_inverse_raises(self) -> None:
        with pytest.raises(ZeroDivisionError):
            Mat2(a11=1, a12=2, a21=2, a22=4).inverse()


class TestRepMatrices:
    """rep_matrices returns SL(2, C) images of the generators."""

    def test_unit_determinant(self) -> None:
        rho_s, rho_t = rep_matrices(cmath.exp(0.3j), 0.2 - 1.1j)
        assert rho_s.det() == pytest.approx(1)
        assert rho_t.det() == pytest.approx(1)

    def test_zero_meridian_raises(self) -> None:
        with pytest.raises(DomainError):
            rep_matrices(0, 1)

    def test_word_matrix_reads_left_to_right(self) -> None:
        M, tv = cmath.exp(0.3j), 0.5 + 0.5j  # noqa: N806
        rho_s, rho_t = rep_matrices(M, tv)
        product = word_matrix(GroupWord.parse("sT"), M, tv)
        assert (product - rho_s @ rho_t.inverse()).max_abs() < 1e-14


class TestRelationResidual:
    """Roots of P_{2n} define representations."""

    @pytest.mark.parametrize("n", [*SMALL_NS, *_slow(LARGE_NS)])
    def test_roots_satisfy_relation(self, n: int) -> None:
        for alpha in np.linspace(0.2, math.pi, 20):
            M = cmath.exp(0.5j * alpha)  # noqa: N806
            for tv in _roots(n, M):
                assert relation_residual(n, M, tv) < 1e-9

    def test_non_root_fails(self) -> None:
        M = cmath.exp(1j)  # noqa: N806
        assert relation_residual(2, M, 0.37 + 0.11j) > 1e-3

    def test_perturbed_polynomial_fails(self) -> None:
        M = cmath.exp(1j)  # noqa: N806
        roots = all_roots(RileyEvaluator(3, M, shift=1e-3)).roots
        assert max(relation_residual(3, M, tv) for tv in roots) > 1e-9


class TestLongitudeMatrix:
    """The matrix longitude agrees with the closed form at every root."""

    @pytest.mark.parametrize("n", [*SMALL_NS, *_slow([5, -3, -9])])
    def test_agrees_with_closed_form(self, n: int) -> None:
        for alpha in np.linspace(0.2, math.pi, 20):
            M = cmath.exp(0.5j * alpha)  # noqa: N806
            for tv in _roots(n, M):
                closed = longitude_eigenvalue(n, M, tv)
                matrix = longitude_matrix(n, M, tv)
                assert abs(closed - matrix) / max(1.0, abs(closed)) < 1e-9
