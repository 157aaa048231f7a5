"""Exact arithmetic over Q(i, sqrt(t)): scalars, matrices and Taylor jets."""

from .jet import (
    MAX_ORDER,
    Jet,
    MatrixJet,
    derivative_matrix,
    jet_commutator,
    jet_inverse,
    jet_of_radius,
    monomial_index,
    monomials,
    n_monomials,
    product_table,
)
from .kmatrix import KMatrix, anticommutator, block_diag, commutator, hstack
from .scalar import Rat, Scalar, as_rat, join_radicands, radicand_factor, scalar_arith, split_square

__all__ = [
    "MAX_ORDER",
    "Jet",
    "KMatrix",
    "MatrixJet",
    "Rat",
    "Scalar",
    "anticommutator",
    "as_rat",
    "block_diag",
    "commutator",
    "derivative_matrix",
    "hstack",
    "jet_commutator",
    "jet_inverse",
    "jet_of_radius",
    "join_radicands",
    "monomial_index",
    "monomials",
    "n_monomials",
    "product_table",
    "radicand_factor",
    "scalar_arith",
    "split_square",
]
