"""Exact arithmetic: Laurent polynomials, small matrices, symmetric reduction."""
from .laurent import (
    InexactDivisionError,
    LaurentPoly,
    LaurentRing,
    NotInvertibleError,
    RingMismatchError,
    parse,
)
from .matrix import (
    adjugate,
    as_matrix,
    det,
    identity,
    matmul,
    matrix_minor,
    rank_rational,
    solve_rational,
    transpose,
)
from .symmetric import binom, e_basis_reduce, e_ring, elementary, is_symmetric

__all__ = [
    "InexactDivisionError",
    "LaurentPoly",
    "LaurentRing",
    "NotInvertibleError",
    "RingMismatchError",
    "adjugate",
    "as_matrix",
    "binom",
    "det",
    "e_basis_reduce",
    "e_ring",
    "elementary",
    "identity",
    "is_symmetric",
    "matmul",
    "matrix_minor",
    "parse",
    "rank_rational",
    "solve_rational",
    "transpose",
]
