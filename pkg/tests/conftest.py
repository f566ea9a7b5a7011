import random

import pytest
import sympy

from gmpy2 import mpq

from quotp1.poly import Polynomial


def to_sympy(f, symbols):
    """A package polynomial as a sympy expression in the given symbols (by name)."""
    text = str(f).replace("^", "**")
    return sympy.sympify(text, locals={s.name: s for s in symbols})


def from_sympy(expr, ring):
    syms = sympy_symbols(ring)
    poly = sympy.Poly(sympy.expand(expr), *syms)
    pairs = []
    for exps, c in poly.terms():
        c = sympy.Rational(c)
        pairs.append((exps, ring.field(mpq(int(c.p), int(c.q)))))
    return Polynomial.from_terms(ring, pairs)


def sympy_symbols(ring):
    return sympy.symbols(list(ring.vars))


@pytest.fixture
def rng():
    return random.Random(20240611)
