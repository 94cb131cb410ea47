"""
The sequences D_i and L_i of A = F_q[T].
"""

import threading
from functools import lru_cache
from typing import List, Tuple

from loguru import logger

from arithmetic.poly_ring import Poly, PolyRing


class BasicSequences:
    """
    Append-only caches of D_i = (T^(q^i) - T) D_(i-1)^q and L_i = (T - T^(q^i)) L_(i-1).

    Args:
        ring (PolyRing): A = F_q[T]
    """

    def __init__(self, ring: PolyRing):
        self.ring = ring
        self.q = ring.field.size
        self._D: List[Poly] = [ring.one]
        self._L: List[Poly] = [ring.one]
        self._lock = threading.Lock()

    def _extend(self, i: int):
        with self._lock:
            ring, e = self.ring, self.ring.field.e
            while len(self._D) <= i:
                k = len(self._D)
                step = ring.monomial(self.q ** k) - ring.T
                self._D.append(step * self._D[-1].frobenius_power(e))
                self._L.append(-step * self._L[-1])
            logger.debug(f"Sequences D, L extended to index {len(self._D) - 1} for q = {self.q}")

    def D(self, i: int) -> Poly:
        if i < 0:
            raise ValueError(f"sequence index must be non-negative, got {i}")
        if i >= len(self._D):
            self._extend(i)
        return self._D[i]

    def L(self, i: int) -> Poly:
        if i < 0:
            raise ValueError(f"sequence index must be non-negative, got {i}")
        if i >= len(self._L):
            self._extend(i)
        return self._L[i]

    def basic_seq(self, i: int) -> Tuple[Poly, Poly]:
        return self.D(i), self.L(i)

    def deg_D(self, i: int) -> int:
        return i * self.q ** i

    def deg_L(self, i: int) -> int:
        return (self.q ** (i + 1) - self.q) // (self.q - 1)


@lru_cache(maxsize=None)
def get_sequences(ring: PolyRing) -> BasicSequences:
    """Shared cache per ring."""
    return BasicSequences(ring)
