"""Holonomy representation of the C(2n,3) knot groups.

Use `relation_residual` to check that a root of the Riley-Mednykh
polynomial defines a representation, and `longitude_matrix` to compute
the longitude eigenvalue from the matrices instead of the closed form.
"""

from .rep import Mat2, longitude_matrix, relation_residual, rep_matrices, word_matrix
from .word import GroupWord, Letter, relator_word

__all__ = [
    "GroupWord",
    "Letter",
    "Mat2",
    "longitude_matrix",
    "relation_residual",
    "relator_word",
    "rep_matrices",
    "word_matrix",
]
