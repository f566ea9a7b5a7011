"""Buchberger's algorithm producing reduced Groebner bases.

Pairs are selected by the normal strategy (smallest lcm, compared by total
degree and then by the order) and pruned with the Gebauer-Moeller update,
which covers both the coprime-leading-monomial and the chain criterion.
Reductions go through :mod:`quotp1.kernel`.
"""

from __future__ import annotations

import heapq

from .. import kernel
from ..errors import RingMismatchError
from ..poly.polynomial import Polynomial


def _common_ring(polys, order=None):
    rings = {f.ring for f in polys}
    if len(rings) > 1:
        raise RingMismatchError("generators live in different rings")
    ring = rings.pop()
    if order is not None:
        target = ring.with_order(order)
        if target != ring:
            return target, [f.to_ring(target) for f in polys]
    return ring, list(polys)


def _entry(ring, terms):
    """Kernel basis entry ``(lead_dpack, lead_key, tail, mask)`` for monic terms."""
    k = terms[0][0]
    dp = ring.codec.dpack(k)
    return (dp, k, list(terms[1:]), kernel.support_mask(dp, ring.codec.guard))


def _monic_terms(ring, terms):
    c = terms[0][1]
    if c == 1:
        return list(terms)
    inv = ring.field.inv(c)
    return kernel.scale_terms(list(terms), inv, 0, ring.p)


def normal_form(f: Polynomial, G, order=None) -> Polynomial:
    """Remainder of ``f`` on division by the list ``G`` (divisors tried in list order)."""
    if not G:
        raise ValueError("normal_form needs at least one divisor")
    ring, polys = _common_ring([f, *G], order)
    f, G = polys[0], polys[1:]
    basis = [_entry(ring, _monic_terms(ring, g.terms)) for g in G if g]
    if not basis:
        return f
    codec = ring.codec
    rem = kernel.normal_form(list(f.terms), basis, codec.shift_mask, codec.guard, ring.p)
    return Polynomial(ring, rem)


class _Buchberger:
    def __init__(self, ring):
        self.ring = ring
        self.codec = ring.codec
        self.p = ring.p
        self.polys = []      # monic term lists, by index
        self.lead_dp = []
        self.entries = []
        self.active = []     # indices of the current basis, insertion order
        self.pairs = []      # heap of (degree, lcm_key, i, j, lcm_dp)

    def reduce(self, terms):
        basis = [self.entries[i] for i in self.active]
        if not basis:
            return list(terms)
        return kernel.normal_form(terms, basis, self.codec.shift_mask, self.codec.guard, self.p)

    def _pair(self, i, j):
        lcm = self.codec.lcm(self.lead_dp[i], self.lead_dp[j])
        return (self.codec.degree_dp(lcm), self.codec.key_of_dpack(lcm), i, j, lcm)

    def add(self, terms):
        codec = self.codec
        h = len(self.polys)
        self.polys.append(_monic_terms(self.ring, terms))
        self.entries.append(_entry(self.ring, self.polys[h]))
        hdp = self.entries[h][0]
        self.lead_dp.append(hdp)

        # Gebauer-Moeller update. New pairs (g, h): one per lcm, preferring a
        # coprime representative (F), then drop lcms properly divisible by
        # another new lcm (M), then drop coprime pairs (B).
        guard = codec.guard
        by_lcm = {}
        for g in self.active:
            gdp = self.lead_dp[g]
            lcm = codec.lcm(gdp, hdp)
            cop = codec.coprime(gdp, hdp)
            prev = by_lcm.get(lcm)
            if prev is None or (cop and not prev[1]):
                by_lcm[lcm] = (g, cop)
        minimal = []
        fresh = []
        for lcm, (g, cop) in sorted(by_lcm.items(), key=lambda it: codec.degree_dp(it[0])):
            lg = lcm | guard
            if any((lg - m) & guard == guard for m in minimal):
                continue
            minimal.append(lcm)
            if not cop:
                fresh.append(self._pair(g, h))

        survivors = []
        for pr in self.pairs:
            i, j, lcm = pr[2], pr[3], pr[4]
            if codec.divides(hdp, lcm):
                lih = codec.lcm(self.lead_dp[i], hdp)
                ljh = codec.lcm(self.lead_dp[j], hdp)
                if lih != lcm and ljh != lcm:
                    continue
            survivors.append(pr)
        self.pairs = survivors + fresh
        heapq.heapify(self.pairs)
        self.active = [g for g in self.active if not codec.divides(hdp, self.lead_dp[g])]
        self.active.append(h)

    def spoly(self, i, j, lcm_key):
        fi, fj = self.polys[i], self.polys[j]
        si = lcm_key - fi[0][0]
        sj = lcm_key - fj[0][0]
        p = self.p
        minus_one = p - 1 if p else -1
        out = [(k + si, c) for k, c in fi[1:]]
        out.extend(kernel.scale_terms(fj[1:], minus_one, sj, p))
        return out

    def run(self, inputs):
        for terms in sorted(inputs, key=lambda t: t[0][0]):
            r = self.reduce(terms)
            if r:
                self.add(r)
                if self._is_unit():
                    return
        while self.pairs:
            _, lcm_key, i, j, _ = heapq.heappop(self.pairs)
            r = self.reduce(self.spoly(i, j, lcm_key))
            if r:
                self.add(r)
                if self._is_unit():
                    return

    def _is_unit(self):
        return self.polys[self.active[-1]][0][0] == 0

    def reduced(self):
        if self.active and self._is_unit():
            return [[(0, self.ring.field.one)]]
        out = []
        for i in self.active:
            others = [self.entries[j] for j in self.active if j != i]
            terms = self.polys[i]
            if others:
                tail = kernel.normal_form(terms[1:], others, self.codec.shift_mask,
                                          self.codec.guard, self.p)
                terms = [terms[0]] + tail
            out.append(terms)
        out.sort(key=lambda t: t[0][0], reverse=True)
        return out


def groebner_terms(ring, term_lists):
    """Reduced Groebner basis of nonzero term lists in ``ring`` (term lists out)."""
    inputs = [list(t) for t in term_lists if t]
    if not inputs:
        return []
    bb = _Buchberger(ring)
    bb.run(inputs)
    return bb.reduced()


def groebner(gens, order=None) -> list:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Zero generators are discarded; the result is sorted by decreasing leading
    monomial and every element is monic, so it is unique for the order.
    """
    gens = list(gens)
    if not gens:
        return []
    ring, gens = _common_ring(gens, order)
    return [Polynomial(ring, t) for t in groebner_terms(ring, [g.terms for g in gens])]
