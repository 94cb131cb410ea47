"""
Irreducibility, enumeration and factorization in F_Q[T].

The factorization pipeline is the classical one: squarefree split, then
distinct-degree split, then the randomized Cantor-Zassenhaus equal-degree split
driven by a local ``random.Random(seed)``.
"""

import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from loguru import logger

from .arithmetic_helper import ArithmeticHelper
from .poly_ring import Coeffs, Poly, PolyRing
from utils.errors import BudgetExceeded, ConstantPolynomial, DivideByZeroPoly

T_COEFFS: Coeffs = (0, 1)


@dataclass(frozen=True)
class Factorization:
    """f = unit * prod(P^m); factors sorted by (degree, lexicographic coefficients)."""

    ring: PolyRing
    unit: int
    factors: Tuple[Tuple[Poly, int], ...]

    def expand(self) -> Poly:
        result = self.ring.constant(self.unit)
        for prime, mult in self.factors:
            result = result * prime ** mult
        return result

    def primes(self) -> List[Poly]:
        return [prime for prime, _ in self.factors]

    def to_list(self) -> List[Tuple[Poly, int]]:
        return list(self.factors)


def _frobenius_powers(ring: PolyRing, f: Coeffs, count: int) -> List[Coeffs]:
    """[T^(Q^k) mod f for k = 0..count] with Q the size of the coefficient field."""
    e = ring.field.e
    powers = [ring.rem(T_COEFFS, f)]
    for _ in range(count):
        powers.append(ring.frobenius_mod(powers[-1], e, f))
    return powers


def is_irreducible(f: Poly) -> bool:
    """
    Rabin's test: T^(Q^d) = T mod f and gcd(T^(Q^(d/l)) - T, f) = 1 for primes l | d.

    Args:
        f (Poly): polynomial of degree >= 1

    Returns:
        bool: True iff f is irreducible over its coefficient field
    """
    if f.degree < 1:
        raise ConstantPolynomial("irreducibility is only defined for non-constant polynomials")
    ring = f.ring
    g = ring.monic(f.coeffs)
    d = len(g) - 1
    if d == 1:
        return True
    if g[0] == 0:
        return False
    powers = _frobenius_powers(ring, g, d)
    t = ring.rem(T_COEFFS, g)
    if powers[d] != t:
        return False
    for ell in ArithmeticHelper.prime_divisors(d):
        if ring.gcd(ring.sub(powers[d // ell], t), g) != (1,):
            return False
    return True


def _has_root(ring: PolyRing, f: Coeffs) -> bool:
    return any(ring.evaluate(f, c) == 0 for c in range(ring.field.size))


def monic_irreducibles(ring: PolyRing, d: int, budget: Optional[int] = None) -> List[Poly]:
    """
    All monic irreducibles of degree d in lexicographic order.

    Args:
        ring (PolyRing): F_Q[T]
        d (int): degree >= 1
        budget (int): largest number of monic candidates Q^d scanned, unbounded when None

    Returns:
        List[Poly]: the primes of degree d
    """
    if d < 1:
        raise ValueError(f"degree must be at least 1, got {d}")
    if budget is not None and ring.field.size ** d > budget:
        raise BudgetExceeded(f"{ring.field.size ** d} candidates of degree {d} exceed the budget", budget=budget)
    if d == 1:
        return list(ring.monic_polys(1))
    check_roots = ring.field.size ** 2 <= 1024
    primes = []
    for f in ring.monic_polys(d):
        if f.coeffs[0] == 0:
            continue
        if check_roots and _has_root(ring, f.coeffs):
            continue
        if is_irreducible(f):
            primes.append(f)
    logger.debug(f"{len(primes)} monic irreducibles of degree {d} over {ring.field!r}")
    return primes


def is_squarefree(f: Poly) -> bool:
    """
    True iff gcd(f, f') is constant; f' = 0 means f is a p-th power.

    Args:
        f (Poly): nonzero polynomial

    Returns:
        bool: squarefreeness
    """
    if f.is_zero():
        raise DivideByZeroPoly("squarefreeness of the zero polynomial")
    if f.degree == 0:
        return True
    ring = f.ring
    df = ring.derivative(f.coeffs)
    if not df:
        return False
    return ring.gcd(f.coeffs, df) == (1,)


def _pth_root(ring: PolyRing, f: Coeffs) -> Coeffs:
    p, e = ring.field.p, ring.field.e
    frob = ring.field.frobenius
    return ring.strip([frob(c, e - 1) for c in f[::p]])


def squarefree_list(ring: PolyRing, f: Coeffs) -> List[Tuple[Coeffs, int]]:
    """Squarefree decomposition of a monic f as (factor, multiplicity) pairs."""
    factors: List[Tuple[Coeffs, int]] = []
    n = 1
    while True:
        df = ring.derivative(f)
        done = False
        if df:
            g = ring.gcd(f, df)
            h = ring.exact_div(f, g)
            i = 1
            while h != (1,):
                common = ring.gcd(g, h)
                part = ring.exact_div(h, common)
                if len(part) > 1:
                    factors.append((part, i * n))
                g, h, i = ring.exact_div(g, common), common, i + 1
            if g == (1,):
                done = True
            else:
                f = g
        if done or len(f) <= 1:
            break
        f = _pth_root(ring, f)
        n *= ring.field.p
    return factors


def distinct_degree(ring: PolyRing, f: Coeffs) -> List[Tuple[Coeffs, int]]:
    """Split a monic squarefree f into products of primes of equal degree."""
    e = ring.field.e
    factors = []
    g = ring.rem(T_COEFFS, f)
    i = 1
    while 2 * i <= len(f) - 1:
        g = ring.frobenius_mod(g, e, f)
        h = ring.gcd(f, ring.sub(g, T_COEFFS))
        if h != (1,):
            factors.append((h, i))
            f = ring.exact_div(f, h)
            g = ring.rem(g, f)
        i += 1
    if f != (1,):
        factors.append((f, len(f) - 1))
    return factors


def equal_degree(ring: PolyRing, f: Coeffs, n: int, rng: random.Random) -> List[Coeffs]:
    """Cantor-Zassenhaus split of a monic product of distinct primes of degree n."""
    field = ring.field
    pending, done = [f], []
    while pending:
        g = pending.pop()
        if len(g) - 1 <= n:
            done.append(g)
            continue
        while True:
            r = ring.strip([rng.randrange(field.size) for _ in range(len(g) - 1)])
            if len(r) < 2:
                continue
            if field.p == 2:
                h, power = r, r
                for _ in range(field.e * n - 1):
                    power = ring.rem(ring.mul(power, power), g)
                    h = ring.add(h, power)
                split = ring.gcd(g, h)
            else:
                h = ring.powmod(r, (field.size ** n - 1) // 2, g)
                split = ring.gcd(g, ring.sub(h, (1,)))
            if split != (1,) and split != g:
                break
        pending.append(split)
        pending.append(ring.exact_div(g, split))
    return done


def factor(f: Poly, seed: int = 0) -> Factorization:
    """
    Complete factorization into the leading unit and monic primes.

    Args:
        f (Poly): nonzero polynomial
        seed (int): seed of the equal-degree splitting RNG

    Returns:
        Factorization: unit and sorted (prime, multiplicity) pairs
    """
    if f.is_zero():
        raise DivideByZeroPoly("cannot factor the zero polynomial")
    ring = f.ring
    unit = f.leading
    monic = ring.monic(f.coeffs)
    rng = random.Random(seed)
    counts: Dict[Coeffs, int] = {}
    for part, mult in squarefree_list(ring, monic):
        for block, degree in distinct_degree(ring, part):
            for prime in equal_degree(ring, block, degree, rng):
                counts[prime] = counts.get(prime, 0) + mult
    factors = sorted(((Poly(ring, c), m) for c, m in counts.items()),
                     key=lambda item: ring.sort_key(item[0]))
    return Factorization(ring, unit, tuple(factors))
