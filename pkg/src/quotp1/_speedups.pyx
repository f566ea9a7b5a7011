# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled term-list kernels; same contracts and results as ``_kernel_py``.

Residues of primes below 2**31 are handled as C ``long long`` so products
cannot overflow; every other coefficient goes through Python arithmetic.
"""

from heapq import heapify, heappop, heappush

from libc.stdlib cimport free, malloc

cdef int FIELD_BITS = 16
cdef long long SMALL_P = 1LL << 31
cdef object MASK64 = (1 << 64) - 1


cdef unsigned long long _mask(object dp, object guard):
    cdef object x = (((dp | guard) - (guard >> (FIELD_BITS - 1))) & guard) >> (FIELD_BITS - 1)
    cdef unsigned long long m = 0
    cdef unsigned int w = 0
    while x:
        m |= (<unsigned long long>(x & MASK64)) << (w & 15)
        x >>= 64
        w += 1
    return m


def support_mask(dp, guard):
    return _mask(dp, guard)


cdef unsigned long long *_masks(list basis) except NULL:
    cdef Py_ssize_t n = len(basis), i
    cdef unsigned long long *out = <unsigned long long *>malloc((n + 1) * sizeof(unsigned long long))
    if out == NULL:
        raise MemoryError()
    for i in range(n):
        out[i] = (<tuple>basis[i])[3]
    return out


def add_terms(list f, list g, p):
    cdef list out = []
    cdef Py_ssize_t i = 0, j = 0, nf = len(f), ng = len(g)
    cdef tuple tf, tg
    cdef object c
    while i < nf and j < ng:
        tf = <tuple>f[i]
        tg = <tuple>g[j]
        if tf[0] > tg[0]:
            out.append(tf)
            i += 1
        elif tf[0] < tg[0]:
            out.append(tg)
            j += 1
        else:
            c = tf[1] + tg[1]
            if p:
                c = c % p
            if c:
                out.append((tf[0], c))
            i += 1
            j += 1
    if i < nf:
        out.extend(f[i:])
    if j < ng:
        out.extend(g[j:])
    return out


def scale_terms(list f, c, shift, p):
    cdef list out = []
    cdef tuple t
    if p:
        for t in f:
            out.append((t[0] + shift, t[1] * c % p))
    else:
        for t in f:
            out.append((t[0] + shift, t[1] * c))
    return out


def mul_terms(list f, list g, p):
    cdef dict acc = {}
    cdef tuple tf, tg
    cdef object k, v
    cdef long long pp, cg, s
    cdef list items
    if len(f) < len(g):
        f, g = g, f
    if p and p < SMALL_P:
        pp = p
        for tg in g:
            cg = tg[1]
            for tf in f:
                k = tf[0] + tg[0]
                v = acc.get(k)
                if v is None:
                    acc[k] = (cg * <long long>tf[1]) % pp
                else:
                    s = (<long long>v + cg * <long long>tf[1]) % pp
                    acc[k] = s
        items = [(k, v) for k, v in acc.items() if v]
    else:
        for tg in g:
            for tf in f:
                k = tf[0] + tg[0]
                v = acc.get(k)
                if v is None:
                    acc[k] = tf[1] * tg[1]
                else:
                    acc[k] = v + tf[1] * tg[1]
        if p:
            items = [(k, v % p) for k, v in acc.items()]
            items = [(k, v) for k, v in items if v]
        else:
            items = [(k, v) for k, v in acc.items() if v]
    items.sort(reverse=True)
    return items


cdef dict _accumulate(list f, p):
    cdef dict acc = {}
    cdef tuple t
    cdef object c
    for t in f:
        c = t[1]
        if t[0] in acc:
            c = acc[t[0]] + c
        if p:
            c = c % p
        acc[t[0]] = c
    return {k: c for k, c in acc.items() if c}


cdef list _nf_small(list f, list basis, object shift_mask, object guard, long long p,
                    unsigned long long *masks):
    cdef dict acc = _accumulate(f, p)
    cdef list heap = [-k for k in acc]
    cdef list rem = []
    cdef list tail
    cdef tuple entry, t
    cdef object k, dp, dpg, shift, nk, old, c_obj
    cdef long long c, v
    cdef unsigned long long miss
    cdef Py_ssize_t i, n = len(basis)
    heapify(heap)
    while heap:
        k = -heappop(heap)
        c_obj = acc.pop(k, 0)
        if not c_obj:
            continue
        c = c_obj
        dp = k - ((k << FIELD_BITS) & shift_mask)
        dpg = dp | guard
        miss = ~_mask(dp, guard)
        for i in range(n):
            if masks[i] & miss:
                continue
            entry = <tuple>basis[i]
            if (dpg - entry[0]) & guard == guard:
                shift = k - entry[1]
                tail = <list>entry[2]
                for t in tail:
                    nk = t[0] + shift
                    old = acc.get(nk)
                    if old is None:
                        v = (p - (c * <long long>t[1]) % p) % p
                        acc[nk] = v
                        heappush(heap, -nk)
                    else:
                        v = (<long long>old - (c * <long long>t[1]) % p + p) % p
                        if v:
                            acc[nk] = v
                        else:
                            del acc[nk]
                break
        else:
            rem.append((k, c_obj))
    return rem


cdef list _nf_generic(list f, list basis, object shift_mask, object guard, object p,
                      unsigned long long *masks):
    cdef dict acc = _accumulate(f, p)
    cdef list heap = [-k for k in acc]
    cdef list rem = []
    cdef list tail
    cdef tuple entry, t
    cdef object k, c, dp, dpg, shift, nk, old, v
    cdef unsigned long long miss
    cdef Py_ssize_t i, n = len(basis)
    heapify(heap)
    while heap:
        k = -heappop(heap)
        c = acc.pop(k, 0)
        if not c:
            continue
        dp = k - ((k << FIELD_BITS) & shift_mask)
        dpg = dp | guard
        miss = ~_mask(dp, guard)
        for i in range(n):
            if masks[i] & miss:
                continue
            entry = <tuple>basis[i]
            if (dpg - entry[0]) & guard == guard:
                shift = k - entry[1]
                tail = <list>entry[2]
                for t in tail:
                    nk = t[0] + shift
                    old = acc.get(nk)
                    if old is None:
                        v = -c * t[1]
                        if p:
                            v = v % p
                        acc[nk] = v
                        heappush(heap, -nk)
                    else:
                        v = old - c * t[1]
                        if p:
                            v = v % p
                        if v:
                            acc[nk] = v
                        else:
                            del acc[nk]
                break
        else:
            rem.append((k, c))
    return rem


def normal_form(list f, list basis, shift_mask, guard, p):
    cdef unsigned long long *masks = _masks(basis)
    try:
        if p and p < SMALL_P:
            return _nf_small(f, basis, shift_mask, guard, p, masks)
        return _nf_generic(f, basis, shift_mask, guard, p, masks)
    finally:
        free(masks)
