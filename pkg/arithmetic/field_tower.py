"""
Finite fields F_p, F_q = F_{p^e} and extensions F_{q^n}.

Every field is an F_p-extension given by the lexicographically smallest monic
irreducible modulus, so rebuilding a field always yields an identical
descriptor.  Elements are integer codes ``sum(c_i * p**i)`` of their coordinate
vector in the power basis of the modulus; :class:`FieldElement` is the public
value wrapper around a code.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

from .arithmetic_helper import ArithmeticHelper
from utils.errors import (DescentFailure, MNotCoprimeToP, NoEmbedding,
                          NonPrimeP, QTooSmall)

# odd-characteristic extension fields up to this size get a full addition table
ADD_TABLE_LIMIT = 729


class FieldDescriptor:
    """
    The field F_p[u]/(modulus) with precomputed log/antilog tables.

    Args:
        p (int): characteristic
        e (int): degree over F_p
        modulus (Sequence[int]): ascending coefficients of a monic irreducible of degree e
    """

    def __init__(self, p: int, e: int, modulus: Sequence[int]):
        self.p = p
        self.e = e
        self.modulus = tuple(int(c) for c in modulus)
        self.size = p ** e
        self.order = self.size - 1
        self._powers = [p ** i for i in range(e)]
        self._build_tables()

    def _build_tables(self):
        codes = np.arange(self.size, dtype=np.int64)
        powers = np.array(self._powers, dtype=np.int64)
        digits = (codes[:, None] // powers[None, :]) % self.p
        self._coords = [tuple(row) for row in digits.tolist()]
        self._neg = (((-digits) % self.p) @ powers).tolist()

        self._add_table = None
        if self.p != 2 and self.e > 1 and self.size <= ADD_TABLE_LIMIT:
            sums = (digits[:, None, :] + digits[None, :, :]) % self.p
            self._add_table = (sums @ powers).tolist()

        self._lex_order = sorted(range(self.size), key=lambda c: self._coords[c])

        self.generator = self._find_generator()
        self._exp = [0] * max(self.order, 1)
        self._log = [0] * self.size
        x = 1
        for k in range(self.order):
            self._exp[k] = x
            self._log[x] = k
            x = self._slow_mul(x, self.generator)

    def _slow_mul(self, a: int, b: int) -> int:
        p, e, m = self.p, self.e, self.modulus
        x, y = self._coords[a], self._coords[b]
        prod = [0] * (2 * e - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] += xi * yj
        for k in range(2 * e - 2, e - 1, -1):
            c = prod[k] % p
            if c:
                for i in range(e):
                    prod[k - e + i] -= c * m[i]
            prod[k] = 0
        return self.from_coords([c % p for c in prod[:e]])

    def _slow_pow(self, a: int, k: int) -> int:
        result = 1
        while k:
            if k & 1:
                result = self._slow_mul(result, a)
            a = self._slow_mul(a, a)
            k >>= 1
        return result

    def _find_generator(self) -> int:
        if self.order == 1:
            return 1
        cofactors = [self.order // ell for ell in ArithmeticHelper.prime_divisors(self.order)]
        for code in self._lex_order:
            if code == 0:
                continue
            if all(self._slow_pow(code, k) != 1 for k in cofactors):
                return code
        raise RuntimeError(f"no primitive element found in {self!r}")

    # --- codes -------------------------------------------------------------

    def coords(self, code: int) -> Tuple[int, ...]:
        return self._coords[code]

    def from_coords(self, coords: Sequence[int]) -> int:
        if len(coords) > self.e:
            raise ValueError(f"expected at most {self.e} coordinates, got {len(coords)}")
        return sum((int(c) % self.p) * self._powers[i] for i, c in enumerate(coords))

    def from_int(self, c: int) -> int:
        """Image of an integer in the prime subfield."""
        return int(c) % self.p

    def elements_lex(self) -> List[int]:
        """All codes ordered by their coordinate tuples."""
        return list(self._lex_order)

    def lex_key(self, code: int) -> Tuple[int, ...]:
        return self._coords[code]

    # --- arithmetic --------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % self.p
        if self._add_table is not None:
            return self._add_table[a][b]
        x, y = self._coords[a], self._coords[b]
        return sum(((xi + yi) % self.p) * w for xi, yi, w in zip(x, y, self._powers))

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.e == 1:
            return a * b % self.p
        return self._exp[(self._log[a] + self._log[b]) % self.order]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(-self._log[a]) % self.order]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if k == 0:
            return 1
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("negative power of zero")
            return 0
        return self._exp[(self._log[a] * k) % self.order]

    def frobenius(self, a: int, t: int = 1) -> int:
        """a^(p^t)."""
        if a == 0 or self.e == 1:
            return a
        return self._exp[(self._log[a] * pow(self.p, t % self.e, self.order)) % self.order]

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        return self.order // gcd(self._log[a], self.order)

    # --- public values -----------------------------------------------------

    def element(self, code: int) -> "FieldElement":
        return FieldElement(self, code)

    def from_element_coords(self, coords: Sequence[int]) -> "FieldElement":
        return FieldElement(self, self.from_coords(coords))

    def to_dict(self) -> Dict:
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus)}

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldDescriptor) and self.p == other.p
                and self.e == other.e and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus))

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.e})"


@dataclass(frozen=True)
class FieldElement:
    """An element of a described field, stored as its coordinate code."""

    descriptor: FieldDescriptor
    code: int

    @property
    def coords(self) -> Tuple[int, ...]:
        return self.descriptor.coords(self.code)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.descriptor != self.descriptor:
                raise NoEmbedding(f"elements of {self.descriptor!r} and {other.descriptor!r} do not mix")
            return other.code
        if isinstance(other, int):
            return self.descriptor.from_int(other)
        raise TypeError(f"cannot combine a field element with {type(other).__name__}")

    def __add__(self, other):
        b = self._other(other)
        return FieldElement(self.descriptor, self.descriptor.add(self.code, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return FieldElement(self.descriptor, self.descriptor.sub(self.code, b))

    def __rsub__(self, other):
        b = self._other(other)
        return FieldElement(self.descriptor, self.descriptor.sub(b, self.code))

    def __neg__(self):
        return FieldElement(self.descriptor, self.descriptor.neg(self.code))

    def __mul__(self, other):
        b = self._other(other)
        return FieldElement(self.descriptor, self.descriptor.mul(self.code, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return FieldElement(self.descriptor, self.descriptor.div(self.code, b))

    def __pow__(self, k: int):
        return FieldElement(self.descriptor, self.descriptor.pow(self.code, k))

    def __lt__(self, other: "FieldElement") -> bool:
        return self.coords < other.coords

    def is_zero(self) -> bool:
        return self.code == 0

    def to_json(self) -> List[int]:
        return list(self.coords)

    def __repr__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coords) + "]"


def _lexicographic_modulus(p: int, e: int) -> Tuple[int, ...]:
    for tail in itertools.product(range(p), repeat=e):
        coeffs = tail + (1,)
        if e == 1 or gf_irreducible_p([ZZ(c) for c in reversed(coeffs)], p, ZZ):
            return coeffs
    raise RuntimeError(f"no irreducible polynomial of degree {e} over F_{p}")


@lru_cache(maxsize=None)
def _cached_field(p: int, e: int) -> FieldDescriptor:
    modulus = _lexicographic_modulus(p, e)
    logger.debug(f"Built GF({p}^{e}) with modulus {list(modulus)}")
    return FieldDescriptor(p, e, modulus)


def build_field(p: int, e: int, allow_q2: bool = False) -> FieldDescriptor:
    """
    Build F_{p^e} with the lexicographically smallest monic irreducible modulus.

    Args:
        p (int): prime characteristic
        e (int): degree over F_p
        allow_q2 (bool): accept p^e = 2 (outside the q >= 3 hypothesis)

    Returns:
        FieldDescriptor: cached descriptor, identical across calls
    """
    if not ArithmeticHelper.is_prime(p):
        raise NonPrimeP(f"p = {p} is not prime", p=p)
    if e < 1:
        raise ValueError(f"extension degree must be at least 1, got {e}")
    if p ** e < 3 and not allow_q2:
        raise QTooSmall(f"q = {p ** e} is below 3; pass allow_q2 to override", q=p ** e)
    return _cached_field(p, e)


def frobenius(x: FieldElement, t: int) -> FieldElement:
    """x^(p^t)."""
    if t < 0:
        raise ValueError("Frobenius exponent must be non-negative")
    return FieldElement(x.descriptor, x.descriptor.frobenius(x.code, t))


class FieldEmbedding:
    """
    Ring embedding of ``source`` into ``target``: the source generator u goes to
    the root of the source modulus in ``target`` with the lexicographically
    smallest coordinates (identity when source == target).
    """

    def __init__(self, source: FieldDescriptor, target: FieldDescriptor):
        if source.p != target.p or target.e % source.e:
            raise NoEmbedding(f"{source!r} does not embed in {target!r}")
        self.source = source
        self.target = target
        if source == target:
            self._image = list(range(source.size))
        else:
            root = self._smallest_root()
            self._image = []
            for code in range(source.size):
                value, power = 0, 1
                for c in source.coords(code):
                    value = target.add(value, target.mul(target.from_int(c), power))
                    power = target.mul(power, root)
                self._image.append(value)
        self._preimage = {img: code for code, img in enumerate(self._image)}

    def _smallest_root(self) -> int:
        target = self.target
        for r in target.elements_lex():
            value = 0
            for c in reversed(self.source.modulus):
                value = target.add(target.mul(value, r), target.from_int(c))
            if value == 0:
                return r
        raise NoEmbedding(f"modulus of {self.source!r} has no root in {target!r}")

    def lift(self, code: int) -> int:
        return self._image[code]

    def contains(self, code: int) -> bool:
        return code in self._preimage

    def descend(self, code: int) -> int:
        try:
            return self._preimage[code]
        except KeyError:
            raise DescentFailure(f"{self.target.element(code)!r} does not lie in {self.source!r}")


@lru_cache(maxsize=None)
def get_embedding(source: FieldDescriptor, target: FieldDescriptor) -> FieldEmbedding:
    return FieldEmbedding(source, target)


def embed(x: FieldElement, target: FieldDescriptor) -> FieldElement:
    """Image of x under the deterministic embedding into ``target``."""
    return FieldElement(target, get_embedding(x.descriptor, target).lift(x.code))


class FieldTower:
    """
    The pair F_q ⊂ F_{q^n}, with the q-power Frobenius of the extension.

    Args:
        base (FieldDescriptor): F_q
        n (int): relative degree
    """

    def __init__(self, base: FieldDescriptor, n: int):
        if n < 1:
            raise ValueError(f"relative degree must be at least 1, got {n}")
        self.base = base
        self.n = n
        self.ext = build_field(base.p, base.e * n, allow_q2=True)
        self.embedding = get_embedding(base, self.ext)

    @property
    def q(self) -> int:
        return self.base.size

    def frobenius_q(self, code: int, times: int = 1) -> int:
        """code^(q^times) in the extension."""
        return self.ext.frobenius(code, self.base.e * times)

    def lift(self, code: int) -> int:
        return self.embedding.lift(code)

    def descend(self, code: int) -> int:
        return self.embedding.descend(code)


def roots_of_unity(m: int, base: FieldDescriptor) -> Tuple[FieldDescriptor, List[FieldElement]]:
    """
    All m-th roots of unity, found in F_{q^N} with N the order of q mod m.

    Args:
        m (int): order, prime to p
        base (FieldDescriptor): F_q

    Returns:
        Tuple[FieldDescriptor, List[FieldElement]]: F_{q^N} and mu_m sorted by coordinates
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if gcd(m, base.p) != 1:
        raise MNotCoprimeToP(f"m = {m} is divisible by p = {base.p}", m=m, p=base.p)
    degree = ArithmeticHelper.multiplicative_order(base.size, m)
    ext = build_field(base.p, base.e * degree, allow_q2=True)
    zeta = ext.pow(ext.generator, ext.order // m)
    codes = {ext.pow(zeta, k) for k in range(m)}
    roots = [ext.element(c) for c in sorted(codes, key=ext.lex_key)]
    return ext, roots


def parse_element(descriptor: FieldDescriptor, value) -> int:
    """Code of a JSON literal: an int (prime subfield) or a coordinate list."""
    if isinstance(value, int):
        return descriptor.from_int(value)
    if isinstance(value, (list, tuple)) and all(isinstance(c, int) for c in value):
        if any(not 0 <= c < descriptor.p for c in value):
            raise ValueError(f"coordinates of {list(value)} must lie in [0, {descriptor.p})")
        return descriptor.from_coords(value)
    raise ValueError(f"cannot read a field element from {value!r}")
