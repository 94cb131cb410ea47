"""
Text and JSON forms of polynomials.

Text form: ``c0 + c1*T + c2*T^2``, coefficients ascending, zero terms omitted and
unit coefficients dropped (``T^2``).  Over F_p literals are integers, otherwise
coordinate lists such as ``[1,1]*T^2``.  JSON form: the coefficient list, with
coordinate lists when e > 1.
"""

import json
import re
from typing import List, Union

from .field_tower import parse_element
from .poly_ring import Poly, PolyRing
from utils.errors import UsageError

_TERM = re.compile(r"^(?:(\[[0-9,]*\]|[0-9]+)(\*)?)?(?:([A-Za-z])(?:\^([0-9]+))?)?$")


def format_coefficient(ring: PolyRing, code: int) -> str:
    field = ring.field
    if field.e == 1:
        return str(code)
    return "[" + ",".join(str(c) for c in field.coords(code)) + "]"


def format_poly(f: Poly) -> str:
    ring = f.ring
    terms = []
    for k, c in enumerate(f.coeffs):
        if c == 0:
            continue
        literal = format_coefficient(ring, c)
        if k == 0:
            terms.append(literal)
            continue
        monomial = ring.var if k == 1 else f"{ring.var}^{k}"
        terms.append(monomial if c == 1 else f"{literal}*{monomial}")
    return " + ".join(terms) if terms else "0"


def _split_terms(text: str) -> List[tuple]:
    terms, depth, sign, start = [], 0, 1, 0
    for i, ch in enumerate(text):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif ch in "+-" and depth == 0:
            if i > start:
                terms.append((sign, text[start:i]))
            elif i > 0:
                raise UsageError(f"malformed polynomial {text!r}")
            sign = 1 if ch == "+" else -1
            start = i + 1
    if start >= len(text):
        raise UsageError(f"malformed polynomial {text!r}")
    terms.append((sign, text[start:]))
    return terms


def parse_poly(ring: PolyRing, text: str) -> Poly:
    """
    Parse the text form (``-`` is accepted as well as ``+``).

    Args:
        ring (PolyRing): target ring
        text (str): e.g. ``T^2 + T + [0,1]``

    Returns:
        Poly: the parsed polynomial
    """
    compact = "".join(str(text).split())
    if not compact:
        raise UsageError("empty polynomial literal")
    field = ring.field
    coeffs = {}
    for sign, term in _split_terms(compact):
        match = _TERM.match(term)
        if not match or not term:
            raise UsageError(f"cannot parse term {term!r} of {text!r}")
        literal, star, var, exponent = match.groups()
        if var is not None and var != ring.var:
            raise UsageError(f"unknown variable {var!r} in {text!r}")
        if star and var is None:
            raise UsageError(f"dangling '*' in term {term!r}")
        if literal is not None and var is not None and not star:
            raise UsageError(f"missing '*' in term {term!r}")
        try:
            code = parse_element(field, json.loads(literal)) if literal is not None else 1
        except ValueError as exc:
            raise UsageError(str(exc))
        if sign < 0:
            code = field.neg(code)
        degree = 0 if var is None else int(exponent or 1)
        coeffs[degree] = field.add(coeffs.get(degree, 0), code)
    top = max(coeffs) if coeffs else -1
    return ring.poly([coeffs.get(k, 0) for k in range(top + 1)])


def poly_to_json(f: Poly) -> List[Union[int, List[int]]]:
    field = f.ring.field
    if field.e == 1:
        return list(f.coeffs)
    return [list(field.coords(c)) for c in f.coeffs]


def poly_from_json(ring: PolyRing, data) -> Poly:
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, list):
        raise UsageError(f"expected a JSON coefficient list, got {data!r}")
    try:
        return ring.poly([parse_element(ring.field, c) for c in data])
    except ValueError as exc:
        raise UsageError(str(exc))


def read_poly(ring: PolyRing, text: str) -> Poly:
    """Accept either the text form or the JSON array form."""
    if str(text).strip().startswith("[["):
        return poly_from_json(ring, text)
    if ring.field.e == 1 and str(text).strip().startswith("["):
        return poly_from_json(ring, text)
    return parse_poly(ring, text)
