"""Tests for the knotcs.csinv.value module."""

from fractions import Fraction

import pytest

from knotcs.csinv import CSValue, orbifold_modulus
from knotcs.errors import DomainError


class TestOrbifoldModulus:
    """orbifold_modulus is 1/k for even k and 1/(2k) for odd k."""

    @pytest.mark.parametrize(
        ("k", "modulus"),
        [(3, Fraction(1, 6)), (4, Fraction(1, 4)), (9, Fraction(1, 18)), (10, Fraction(1, 10))],
    )
    def test_values(self, k: int, modulus: Fraction) -> None:
        assert orbifold_modulus(k) == modulus

    def test_invalid(self) -> None:
        with pytest.raises(DomainError):
            orbifold_modulus(0)


class TestCSValueReduce:
    """CSValue.reduce normalizes into [0, modulus)."""

    def test_positive(self) -> None:
        value = CSValue.reduce(0.7, Fraction(1, 4))
        assert value.value == pytest.approx(0.2)
        assert value.modulus == Fraction(1, 4)

    def test_negative(self) -> None:
        assert CSValue.reduce(-0.1, Fraction(1)).value == pytest.approx(0.9)

    def test_snaps_to_zero_near_modulus(self) -> None:
        assert CSValue.reduce(0.5 - 1e-12, Fraction(1, 2)).value == 0.0

    def test_exact_multiple(self) -> None:
        assert CSValue.reduce(1.5, Fraction(1, 2)).value == 0.0

    def test_non_finite(self) -> None:
        with pytest.raises(DomainError):
            CSValue.reduce(float("nan"), Fraction(1))

    def test_unreduced_value_rejected(self) -> None:
        with pytest.raises(DomainError):
            CSValue(value=0.3, modulus=Fraction(1, 4))

    def test_str(self) -> None:
        assert str(CSValue(value=0.125, modulus=Fraction(1, 6))) == "0.125 (mod 1/6)"
