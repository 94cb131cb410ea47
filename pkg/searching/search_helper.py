"""
Helper utilities shared by the searches: exact counting bounds and small
polynomial chores.
"""

import time
from functools import reduce
from math import gcd
from typing import Iterable

from sympy import Expr, Integer, Rational, sqrt

from arithmetic.poly_ring import Poly


class SearchHelper:
    """
    Helper class containing utility methods for the prime searches.
    """

    @staticmethod
    def lemma7_bound(q: int, d: int) -> Expr:
        """
        Lower bound for the number of non-Wieferich primes of degree d.

        Args:
            q (int): field size
            d (int): degree

        Returns:
            Expr: (q - 1) q^(d-1) / d - q / (d (q - 1)) * q^(d/2), exact
        """
        return Rational((q - 1) * q ** (d - 1), d) - Rational(q, d * (q - 1)) * sqrt(q) ** d

    @staticmethod
    def prime_count_bound(q: int, d: int) -> Expr:
        """q^d / d - q / (d (q - 1)) * q^(d/2), exact."""
        return Rational(q ** d, d) - Rational(q, d * (q - 1)) * sqrt(q) ** d

    @staticmethod
    def strictly_exceeds(value: int, bound: Expr) -> bool:
        return (Integer(value) - bound).is_positive is True

    @staticmethod
    def lcm(values: Iterable[int]) -> int:
        return reduce(lambda a, b: a * b // gcd(a, b), values, 1)

    @staticmethod
    def frobenius_of_T(modulus: Poly, times: int) -> Poly:
        """
        T^(Q^times) mod ``modulus`` by repeated Q-th powering, Q the coefficient field size.

        Args:
            modulus (Poly): nonconstant modulus
            times (int): number of Q-th powers

        Returns:
            Poly: the reduced power of T
        """
        ring = modulus.ring
        e = ring.field.e
        power = ring.rem((0, 1), modulus.coeffs)
        for _ in range(times):
            power = ring.frobenius_mod(power, e, modulus.coeffs)
        return Poly(ring, power)

    @staticmethod
    def elapsed(start: float) -> float:
        return round(time.time() - start, 3)
