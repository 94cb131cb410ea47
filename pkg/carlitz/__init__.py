"""
Carlitz package: the module phi, power sums, and its analysis at infinity and at P.
"""

from .basic_sequences import BasicSequences, get_sequences
from .algebras import Algebra, LaurentAlgebra, PadicAlgebra, PolynomialAlgebra, QuotientAlgebra
from .carlitz_module import CarlitzCoeffs, CarlitzModule, require_prime
from .power_sums import PowerSums
from .infinity_analytics import InfinityAnalytics, RegulatorResult, ZetaAnResult
from .padic_analytics import Lemma4Result, PadicAnalytics

__all__ = [
    'BasicSequences',
    'get_sequences',
    'Algebra',
    'LaurentAlgebra',
    'PadicAlgebra',
    'PolynomialAlgebra',
    'QuotientAlgebra',
    'CarlitzCoeffs',
    'CarlitzModule',
    'require_prime',
    'PowerSums',
    'InfinityAnalytics',
    'RegulatorResult',
    'ZetaAnResult',
    'Lemma4Result',
    'PadicAnalytics'
]
