"""
Helper utilities for integer and F_p linear-algebra chores.
"""

from typing import List, Sequence

import numpy as np
from sympy import divisors, isprime, mobius, primefactors
from sympy.ntheory import n_order


class ArithmeticHelper:
    """
    Helper class containing integer and matrix utilities used across the tower.
    """

    @staticmethod
    def is_prime(n: int) -> bool:
        return n >= 2 and bool(isprime(n))

    @staticmethod
    def prime_divisors(n: int) -> List[int]:
        """
        Distinct prime divisors of n in increasing order.

        Args:
            n (int): positive integer

        Returns:
            List[int]: prime divisors (empty for n = 1)
        """
        if n <= 1:
            return []
        return [int(ell) for ell in primefactors(n)]

    @staticmethod
    def necklace_count(q: int, d: int) -> int:
        """
        Number of monic irreducibles of degree d over F_q.

        Args:
            q (int): field size
            d (int): degree

        Returns:
            int: (1/d) * sum_{e | d} mu(e) q^(d/e)
        """
        total = sum(int(mobius(k)) * q ** (d // k) for k in divisors(d))
        return total // d

    @staticmethod
    def multiplicative_order(q: int, m: int) -> int:
        """Order of q modulo m (1 when m = 1)."""
        if m == 1:
            return 1
        return int(n_order(q, m))

    @staticmethod
    def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
        """
        Rank of an integer matrix over F_p by Gaussian elimination.

        Args:
            rows: matrix rows with entries in [0, p)
            p (int): prime

        Returns:
            int: rank over F_p
        """
        matrix = np.array(rows, dtype=np.int64) % p
        if matrix.size == 0:
            return 0
        n_rows, n_cols = matrix.shape
        rank = 0
        for col in range(n_cols):
            pivot_rows = np.nonzero(matrix[rank:, col])[0]
            if pivot_rows.size == 0:
                continue
            pivot = rank + int(pivot_rows[0])
            matrix[[rank, pivot]] = matrix[[pivot, rank]]
            inv = pow(int(matrix[rank, col]), p - 2, p)
            matrix[rank] = (matrix[rank] * inv) % p
            factors = matrix[:, col].copy()
            factors[rank] = 0
            matrix = (matrix - np.outer(factors, matrix[rank])) % p
            rank += 1
            if rank == n_rows:
                break
        return rank
