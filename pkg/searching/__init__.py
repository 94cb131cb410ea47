"""
Searching package: Wieferich primes, their explicit constructions and the Question 1 experiment.
"""

from .search_helper import SearchHelper
from .wieferich_searcher import WieferichReport, WieferichSearcher
from .remark_constructions import RemarkConstructions
from .question_searcher import QuestionSearcher, lemma9_modulus

__all__ = [
    'SearchHelper',
    'WieferichReport',
    'WieferichSearcher',
    'RemarkConstructions',
    'QuestionSearcher',
    'lemma9_modulus'
]
