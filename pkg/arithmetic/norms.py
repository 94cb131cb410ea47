"""
Norm from F_{q^n}[T] down to A = F_q[T].
"""

from .field_tower import FieldTower
from .poly_ring import Poly, PolyRing
from utils.errors import FieldMismatch, NotMonic


def conjugate(f: Poly, tower: FieldTower, times: int = 1) -> Poly:
    """Apply the q-power Frobenius ``times`` to every coefficient of f."""
    ring = f.ring
    return Poly(ring, ring.map_coeffs(f.coeffs, lambda c: tower.frobenius_q(c, times)))


def norm_to_base(f: Poly, tower: FieldTower, base_ring: PolyRing = None) -> Poly:
    """
    The product of the n Frobenius conjugates of a monic f, descended to A.

    Args:
        f (Poly): monic polynomial over F_{q^n}
        tower (FieldTower): F_q inside F_{q^n}
        base_ring (PolyRing): target ring A (built from the tower when omitted)

    Returns:
        Poly: monic polynomial of degree n * deg f over F_q
    """
    if f.ring.field != tower.ext:
        raise FieldMismatch(f"{f.ring!r} is not a polynomial ring over {tower.ext!r}")
    if not f.is_monic():
        raise NotMonic(f"norm_to_base expects a monic polynomial, got {f!r}")
    base_ring = base_ring or PolyRing(tower.base, f.ring.var)
    product = f
    for i in range(1, tower.n):
        product = product * conjugate(f, tower, i)
    return Poly(base_ring, base_ring.map_coeffs(product.coeffs, tower.descend))


def lift_poly(f: Poly, tower: FieldTower, ext_ring: PolyRing = None) -> Poly:
    """Image of a polynomial over F_q in F_{q^n}[T]."""
    ext_ring = ext_ring or PolyRing(tower.ext, f.ring.var)
    return Poly(ext_ring, ext_ring.map_coeffs(f.coeffs, tower.lift))
