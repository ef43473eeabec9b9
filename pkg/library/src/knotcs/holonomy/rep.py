"""Parabolic-type SL(2, C) representation of the knot group.

The generators map to

    rho(s) = [[M, 1], [0, 1/M]]
    rho(t) = [[M, 0], [2 - M^2 - M^-2 - tv, 1/M]]

and (M, tv) defines a representation exactly when rho(s) rho(w) equals
rho(w) rho(t). The matrices give an independent check of the
polynomial recursion and of the closed-form longitude eigenvalue.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DomainError
from .word import GroupWord, Letter, relator_word


@dataclass(frozen=True, kw_only=True)
class Mat2:
    """2x2 complex matrix [[a11, a12], [a21, a22]]."""

    a11: complex
    a12: complex
    a21: complex
    a22: complex

    @classmethod
    def identity(cls) -> Mat2:
        return cls(a11=1, a12=0, a21=0, a22=1)

    def __matmul__(self, other: Mat2) -> Mat2:
        return Mat2(
            a11=self.a11 * other.a11 + self.a12 * other.a21,
            a12=self.a11 * other.a12 + self.a12 * other.a22,
            a21=self.a21 * other.a11 + self.a22 * other.a21,
            a22=self.a21 * other.a12 + self.a22 * other.a22,
        )

    def __sub__(self, other: Mat2) -> Mat2:
        return Mat2(
            a11=self.a11 - other.a11,
            a12=self.a12 - other.a12,
            a21=self.a21 - other.a21,
            a22=self.a22 - other.a22,
        )

    def det(self) -> complex:
        return self.a11 * self.a22 - self.a12 * self.a21

    def inverse(self) -> Mat2:
        d = self.det()
        if d == 0:
            raise ZeroDivisionError("singular matrix")
        return Mat2(a11=self.a22 / d, a12=-self.a12 / d, a21=-self.a21 / d, a22=self.a11 / d)

    def max_abs(self) -> float:
        """Largest entry magnitude."""
        return max(abs(self.a11), abs(self.a12), abs(self.a21), abs(self.a22))


def rep_matrices(M: complex, tv: complex) -> tuple[Mat2, Mat2]:
    """Return (rho(s), rho(t)) for meridian eigenvalue M and variable tv.

    Raises:
        DomainError: if M == 0.
    """
    if M == 0:
        raise DomainError("meridian eigenvalue M must be nonzero")
    inv = 1 / M
    rho_s = Mat2(a11=M, a12=1, a21=0, a22=inv)
    rho_t = Mat2(a11=M, a12=0, a21=2 - M * M - inv * inv - tv, a22=inv)
    return rho_s, rho_t


def word_matrix(word: GroupWord, M: complex, tv: complex) -> Mat2:
    """Multiply the images of the letters of word, left to right.

    Raises:
        DomainError: if M == 0.
    """
    rho_s, rho_t = rep_matrices(M, tv)
    images = {
        Letter.S: rho_s,
        Letter.S_INV: rho_s.inverse(),
        Letter.T: rho_t,
        Letter.T_INV: rho_t.inverse(),
    }
    result = Mat2.identity()
    for letter in word.letters:
        result = result @ images[letter]
    return result


def relation_residual(n: int, M: complex, tv: complex) -> float:
    """Return the scaled residual of the relation s w = w t.

    The value is the largest entry magnitude of rho(s) rho(w) - rho(w) rho(t)
    divided by 1 + the largest entry magnitude of rho(w), so that it is
    comparable across words of different lengths. It is zero exactly
    when (M, tv) defines a representation.

    Raises:
        DomainError: if n == 0 or M == 0.
    """
    rho_s, rho_t = rep_matrices(M, tv)
    rho_w = word_matrix(relator_word(n), M, tv)
    diff = rho_s @ rho_w - rho_w @ rho_t
    return diff.max_abs() / (1 + rho_w.max_abs())


def longitude_matrix(n: int, M: complex, tv: complex) -> complex:
    """Return M^(-4n) [rho(w) rho(w*)]_11, the longitude eigenvalue.

    Raises:
        DomainError: if n == 0 or M == 0.
    """
    w = relator_word(n)
    product = word_matrix(w, M, tv) @ word_matrix(w.reversed(), M, tv)
    return complex(M ** (-4 * n) * product.a11)
