"""Exact-arithmetic Riordan arrays, square symmetrizations, and principal
minor sequences, with the array families tied to the six- and twenty-vertex
lattice model numbers."""

from .array import RiordanPair, identity_pair
from .bivar import BivarPoly, BivariateRational, CoeffMatrix, expand
from .minors import MinorSequence, principal_minors
from .series import Series
from .symmetry import SymmetrizedMatrix, symmetrize, symmetrize_gf, symmetrize_matrix

__all__ = [
    "BivarPoly",
    "BivariateRational",
    "CoeffMatrix",
    "MinorSequence",
    "RiordanPair",
    "Series",
    "SymmetrizedMatrix",
    "expand",
    "identity_pair",
    "principal_minors",
    "symmetrize",
    "symmetrize_gf",
    "symmetrize_matrix",
]
