"""Pure-Python term-list kernels (reference implementation and fallback).

A term list is a list of ``(key, coeff)`` pairs sorted by strictly
decreasing key with no zero coefficients; keys are packed monomials (see
``poly.ring``). ``p`` is the field characteristic: 0 means rational
coefficients, otherwise coefficients are residues in ``[0, p)``.

``_speedups.pyx`` implements the same functions with the same results.
"""

from heapq import heapify, heappop, heappush

FIELD_BITS = 16
MASK64 = (1 << 64) - 1


def support_mask(dp, guard):
    """64-bit summary of the variables occurring in a packed monomial.

    Field ``4*w + j`` sets bit ``16*j + w % 16`` when nonzero (more than 64
    variables fold onto shared bits). If ``a`` divides ``b`` then
    ``support_mask(a)`` is a subset of ``support_mask(b)``.
    """
    x = (((dp | guard) - (guard >> (FIELD_BITS - 1))) & guard) >> (FIELD_BITS - 1)
    m = 0
    w = 0
    while x:
        m |= (x & MASK64) << (w & 15)
        x >>= 64
        w += 1
    return m & MASK64


def add_terms(f, g, p):
    """Merge two sorted term lists into their sum."""
    out = []
    i = j = 0
    nf, ng = len(f), len(g)
    while i < nf and j < ng:
        kf, cf = f[i]
        kg, cg = g[j]
        if kf > kg:
            out.append(f[i])
            i += 1
        elif kf < kg:
            out.append(g[j])
            j += 1
        else:
            c = cf + cg
            if p:
                c %= p
            if c:
                out.append((kf, c))
            i += 1
            j += 1
    if i < nf:
        out.extend(f[i:])
    if j < ng:
        out.extend(g[j:])
    return out


def scale_terms(f, c, shift, p):
    """Return ``c * x^shift * f``; ``c`` must be nonzero."""
    if p:
        return [(k + shift, v * c % p) for k, v in f]
    return [(k + shift, v * c) for k, v in f]


def mul_terms(f, g, p):
    if len(f) < len(g):
        f, g = g, f
    acc = {}
    get = acc.get
    for kg, cg in g:
        for kf, cf in f:
            k = kf + kg
            acc[k] = get(k, 0) + cf * cg
    if p:
        items = [(k, v % p) for k, v in acc.items()]
        items = [(k, v) for k, v in items if v]
    else:
        items = [(k, v) for k, v in acc.items() if v]
    items.sort(reverse=True)
    return items


def normal_form(f, basis, shift_mask, guard, p):
    """Fully reduce ``f`` by a list of monic divisors.

    ``f`` is any list of ``(key, coeff)`` pairs (repeated keys are summed).
    Each basis entry is ``(lead_dpack, lead_key, tail, mask)`` where ``tail``
    is the term list of the divisor without its leading term (leading
    coefficient 1) and ``mask`` is ``support_mask(lead_dpack, guard)``.
    Divisors are tried in list order. Returns the sorted remainder.
    """
    acc = {}
    for k, c in f:
        if k in acc:
            c = acc[k] + c
        if p:
            c %= p
        acc[k] = c
    acc = {k: c for k, c in acc.items() if c}
    heap = [-k for k in acc]
    heapify(heap)
    rem = []
    while heap:
        k = -heappop(heap)
        c = acc.pop(k, 0)
        if not c:
            continue
        dp = k - ((k << FIELD_BITS) & shift_mask)
        dpg = dp | guard
        miss = ~support_mask(dp, guard)
        for gdp, gk, tail, gm in basis:
            if not gm & miss and (dpg - gdp) & guard == guard:
                shift = k - gk
                for tk, tc in tail:
                    nk = tk + shift
                    old = acc.get(nk)
                    if old is None:
                        v = -c * tc
                        if p:
                            v %= p
                        acc[nk] = v
                        heappush(heap, -nk)
                    else:
                        v = old - c * tc
                        if p:
                            v %= p
                        if v:
                            acc[nk] = v
                        else:
                            del acc[nk]
                break
        else:
            rem.append((k, c))
    return rem
