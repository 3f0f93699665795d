"""Exact arithmetic kernel shared by the geometric and arithmetic layers."""

from .polys import Poly, poly_discriminant, resultant
from .roots import NumericFailure, poly_roots_complex
from .finite_fields import FiniteField, FFElement, quadratic_symbol
from .cyclotomic import CyclotomicValue, root_of_unity
from .abelian import FiniteAbelianGroup, Character, group_characters

__all__ = [
    "Poly",
    "poly_discriminant",
    "resultant",
    "NumericFailure",
    "poly_roots_complex",
    "FiniteField",
    "FFElement",
    "quadratic_symbol",
    "CyclotomicValue",
    "root_of_unity",
    "FiniteAbelianGroup",
    "Character",
    "group_characters",
]
