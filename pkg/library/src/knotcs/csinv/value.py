"""Chern-Simons values reduced modulo an exact rational."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import DomainError

SNAP = 1e-9
"""Values within SNAP * modulus of the modulus wrap to zero."""


@dataclass(frozen=True, kw_only=True)
class CSValue:
    """A real value in [0, modulus) with its exact modulus."""

    value: float
    modulus: Fraction

    def __post_init__(self) -> None:
        if self.modulus <= 0:
            raise DomainError(f"modulus must be positive, got {self.modulus}")
        if not 0 <= self.value < float(self.modulus):
            raise DomainError(f"value {self.value} is not reduced modulo {self.modulus}")

    @classmethod
    def reduce(cls, x: float, modulus: Fraction) -> CSValue:
        """Return x reduced into [0, modulus).

        Raises:
            DomainError: if x is not finite or modulus <= 0.
        """
        if not math.isfinite(x):
            raise DomainError(f"cannot reduce non-finite value {x}")
        if modulus <= 0:
            raise DomainError(f"modulus must be positive, got {modulus}")
        m = float(modulus)
        r = x - m * math.floor(x / m)
        if r >= m - SNAP * m or r < 0:
            r = 0.0
        return cls(value=r, modulus=modulus)

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus})"


def orbifold_modulus(k: int) -> Fraction:
    """Return 1/k for even k and 1/(2k) for odd k.

    Raises:
        DomainError: if k < 1.
    """
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    return Fraction(1, k) if k % 2 == 0 else Fraction(1, 2 * k)
