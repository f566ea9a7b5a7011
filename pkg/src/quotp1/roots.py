"""Roots of univariate polynomials over Q and F_p, with multiplicities.

Polynomials are coefficient lists, constant term first. Rational roots are
found modulo a prime larger than twice the root bound of the integral monic
rescaling, then certified exactly; no integer factorization is needed.
"""

from __future__ import annotations

import random
from math import lcm

import gmpy2
from gmpy2 import mpq


def _trim(f):
    f = list(f)
    while f and not f[-1]:
        f.pop()
    return f


# -- arithmetic mod p ----------------------------------------------------------

def _mul_mod(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _trim(out)


def _divmod_mod(f, g, p):
    f = list(f)
    inv = pow(g[-1], -1, p)
    q = [0] * max(len(f) - len(g) + 1, 0)
    while len(f) >= len(g) and f:
        c = f[-1] * inv % p
        shift = len(f) - len(g)
        q[shift] = c
        for i, b in enumerate(g):
            f[shift + i] = (f[shift + i] - c * b) % p
        f = _trim(f)
    return _trim(q), f


def _gcd_mod(f, g, p):
    f, g = _trim(f), _trim(g)
    while g:
        f, g = g, _divmod_mod(f, g, p)[1]
    if f:
        inv = pow(f[-1], -1, p)
        f = [a * inv % p for a in f]
    return f


def _powmod(base, e, mod, p):
    result = [1]
    base = _divmod_mod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _divmod_mod(_mul_mod(result, base, p), mod, p)[1]
        e >>= 1
        if e:
            base = _divmod_mod(_mul_mod(base, base, p), mod, p)[1]
    return result


def _sub(f, g, p):
    n = max(len(f), len(g))
    return _trim([((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p for i in range(n)])


def fp_distinct_roots(f, p) -> list:
    """Sorted distinct roots in F_p of f (integer coefficients)."""
    f = _trim([a % p for a in f])
    if len(f) <= 1:
        return []
    if p < 4096:
        return [x for x in range(p) if not _eval_mod(f, x, p)]
    roots = []
    if not f[0]:
        roots.append(0)
        while f and not f[0]:
            f = f[1:]
    # g = product of the distinct linear factors
    xp = _powmod([0, 1], p, f, p)
    g = _gcd_mod(f, _sub(xp, [0, 1], p), p)
    rng = random.Random(p)
    stack = [g]
    while stack:
        h = stack.pop()
        if len(h) <= 1:
            continue
        if len(h) == 2:
            roots.append((-h[0]) * pow(h[1], -1, p) % p)
            continue
        while True:
            a = rng.randrange(p)
            w = _powmod([a, 1], (p - 1) // 2, h, p)
            s = _gcd_mod(h, _sub(w, [1], p), p)
            if 1 < len(s) < len(h):
                stack.append(s)
                stack.append(_divmod_mod(h, s, p)[0])
                break
    return sorted(set(roots))


def _eval_mod(f, x, p):
    acc = 0
    for a in reversed(f):
        acc = (acc * x + a) % p
    return acc


# -- exact division and multiplicities ----------------------------------------

def _eval(f, x, field):
    acc = field.zero
    for a in reversed(f):
        acc = field(acc * x + a)
    return acc


def _deflate(f, root, field):
    """f / (T - root), assuming f(root) = 0."""
    n = len(f) - 1
    q = [field.zero] * n
    carry = field.zero
    for i in range(n, 0, -1):
        carry = field(f[i] + carry * root)
        q[i - 1] = carry
    return q


def _rational_candidates(f):
    """Candidate rational roots of f over Q (f monic, mpq coefficients)."""
    f = [mpq(a) for a in f]
    n = len(f) - 1
    D = lcm(*[int(a.denominator) for a in f]) if f else 1
    # g(S) = D^n f(S / D) is monic with integer coefficients
    g = [int(f[i] * D ** (n - i)) for i in range(n + 1)]
    bound = 1 + max((abs(c) for c in g[:-1]), default=0)
    p = int(gmpy2.next_prime(max(2 * bound + 1, 4096)))
    out = []
    for s in fp_distinct_roots(g, p):
        if s > p // 2:
            s -= p
        out.append(mpq(s, D))
    return out


def roots_with_multiplicity(coeffs, field):
    """Roots in the field with multiplicities, plus the root-free cofactor.

    ``coeffs`` is a monic polynomial, constant term first. Returns
    ``([(root, multiplicity), ...] sorted by root, cofactor)``.
    """
    f = [field(a) for a in coeffs]
    if field.p:
        cands = fp_distinct_roots([int(a) for a in f], field.p)
    else:
        cands = _rational_candidates(f)
    found = []
    for x in sorted(cands):
        mult = 0
        while len(f) > 1 and not _eval(f, x, field):
            f = _deflate(f, x, field)
            mult += 1
        if mult:
            found.append((x, mult))
    return found, f
