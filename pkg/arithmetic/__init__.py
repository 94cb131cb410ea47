"""
Arithmetic package: finite-field towers, F_q[T], factorization and the series types.
"""

from .field_tower import (FieldDescriptor, FieldElement, FieldEmbedding, FieldTower,
                          build_field, embed, frobenius, roots_of_unity)
from .poly_ring import Poly, PolyRing
from .factorization import Factorization, factor, is_irreducible, is_squarefree, monic_irreducibles
from .norms import norm_to_base
from .poly_format import format_poly, parse_poly, poly_from_json, poly_to_json, read_poly
from .rational_function import RationalFunction
from .laurent_series import LaurentSeries
from .padic_element import PadicElement
from .arithmetic_helper import ArithmeticHelper

__all__ = [
    'FieldDescriptor',
    'FieldElement',
    'FieldEmbedding',
    'FieldTower',
    'build_field',
    'embed',
    'frobenius',
    'roots_of_unity',
    'Poly',
    'PolyRing',
    'Factorization',
    'factor',
    'is_irreducible',
    'is_squarefree',
    'monic_irreducibles',
    'norm_to_base',
    'format_poly',
    'parse_poly',
    'poly_from_json',
    'poly_to_json',
    'read_poly',
    'RationalFunction',
    'LaurentSeries',
    'PadicElement',
    'ArithmeticHelper'
]
