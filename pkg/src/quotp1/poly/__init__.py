"""Exact scalar fields, monomial orders and multivariate polynomials."""

from .field import DEFAULT_PRIME, GF, QQ, Field, PrimeField, RationalField, field_from_spec
from .parse import format_poly, parse_poly
from .polynomial import Polynomial
from .ring import GREVLEX, LEX, MonomialOrder, PolyRing, make_ring, monomial_cmp


def poly_add(p, q):
    return p + q


def poly_mul(p, q):
    return p * q


def poly_eval(p, assignment):
    return p.eval(assignment)


__all__ = [
    "DEFAULT_PRIME", "GF", "QQ", "Field", "PrimeField", "RationalField", "field_from_spec",
    "format_poly", "parse_poly", "Polynomial", "GREVLEX", "LEX", "MonomialOrder", "PolyRing",
    "make_ring", "monomial_cmp", "poly_add", "poly_mul", "poly_eval",
]
