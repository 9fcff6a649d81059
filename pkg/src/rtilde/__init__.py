"""Kazhdan-Lusztig R-tilde polynomials by recursion, Hecke inversion and light leaves."""

from rtilde.coxeter import (
    BraidMove,
    CoxeterGroup,
    CoxeterMatrix,
    Element,
    SymmetricGroup,
    group_from_name,
    load_group,
)
from rtilde.poly import IntPolynomial, LaurentPolynomial

__all__ = [
    "BraidMove",
    "CoxeterGroup",
    "CoxeterMatrix",
    "Element",
    "IntPolynomial",
    "LaurentPolynomial",
    "SymmetricGroup",
    "group_from_name",
    "load_group",
]

__version__ = "0.1.0"
