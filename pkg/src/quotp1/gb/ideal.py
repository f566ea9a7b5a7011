"""Ideals with cached reduced Groebner bases, and the ideal calculus built on them."""

from __future__ import annotations

import json
import threading

from ..errors import RingMismatchError, UnitIdealError
from ..poly.field import field_from_spec
from ..poly.parse import parse_poly
from ..poly.polynomial import Polynomial
from ..poly.ring import MonomialOrder, PolyRing, make_ring
from .groebner import groebner, normal_form


class Ideal:
    """An ideal of a polynomial ring given by generators.

    The reduced Groebner basis for the ring's order is computed on first use
    and cached; concurrent first uses compute it once.
    """

    def __init__(self, gens, ring: PolyRing | None = None):
        gens = list(gens)
        if ring is None:
            if not gens:
                raise ValueError("the ring of an ideal without generators must be given")
            ring = gens[0].ring
        for g in gens:
            if g.ring != ring:
                raise RingMismatchError("generator outside the ideal's ring")
        self.ring = ring
        self.gens = tuple(gens)
        self._gb = None
        self._lock = threading.Lock()

    @classmethod
    def parse(cls, texts, ring) -> "Ideal":
        return cls([parse_poly(t, ring) for t in texts], ring)

    def groebner_basis(self) -> tuple:
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    self._gb = tuple(groebner(self.gens))
        return self._gb

    def _set_groebner_basis(self, gb):
        self._gb = tuple(gb)

    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant()

    def is_zero(self) -> bool:
        return not self.groebner_basis()

    def reduce(self, f: Polynomial) -> Polynomial:
        gb = self.groebner_basis()
        return normal_form(f, gb) if gb else f

    def __contains__(self, f) -> bool:
        return ideal_member(f, self)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    __hash__ = None

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingMismatchError("ideals of different rings")
        return Ideal(self.gens + other.gens, self.ring)

    def to_ring(self, ring) -> "Ideal":
        return Ideal([g.to_ring(ring) for g in self.gens], ring)

    def __repr__(self):
        return f"Ideal([{', '.join(map(str, self.gens))}])"

    # -- JSON -----------------------------------------------------------------
    def to_json(self, reduced=False) -> dict:
        order = self.ring.order
        gens = self.groebner_basis() if reduced else self.gens
        return {
            "ring": {
                "vars": list(self.ring.vars),
                "field": self.ring.field.spec(),
                "order": order.kind if order.kind != "block" else str(order),
            },
            "gens": [str(g) for g in gens],
        }

    @classmethod
    def from_json(cls, data) -> "Ideal":
        if isinstance(data, str):
            data = json.loads(data)
        r = data["ring"]
        ring = make_ring(r["vars"], field_from_spec(r.get("field", "Q")), r.get("order", "grevlex"))
        return cls.parse(data["gens"], ring)


def _check_same(I: Ideal, f_ring):
    if I.ring != f_ring:
        raise RingMismatchError("element and ideal live in different rings")


def ideal_member(f: Polynomial, I: Ideal) -> bool:
    _check_same(I, f.ring)
    if not f:
        return True
    return not I.reduce(f)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    if I.ring != J.ring:
        raise RingMismatchError("ideals of different rings")
    return I.groebner_basis() == J.groebner_basis()


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """True iff J is contained in I."""
    return all(ideal_member(g, I) for g in J.gens)


def radical_member(f: Polynomial, I: Ideal) -> bool:
    """Rabinowitsch trick: f is in sqrt(I) iff 1 is in I + (1 - z f)."""
    _check_same(I, f.ring)
    if not f:
        return True
    ring = I.ring
    z = ring.fresh_name("z")
    ext = ring.extended([z], order="grevlex")
    zv = ext.var(z)
    gens = [g.to_ring(ext) for g in I.gens] + [ext.one - zv * f.to_ring(ext)]
    gb = groebner(gens)
    return len(gb) == 1 and gb[0].is_constant()


def eliminate(I: Ideal, front) -> Ideal:
    """Elements of I free of the ``front`` variables, as an ideal of the subring.

    Uses a block order whose leading block is ``front`` (grevlex inside); the
    remaining variables keep the ring's own lex/grevlex order, so the surviving
    basis elements are already the reduced basis of the subring.
    """
    ring = I.ring
    names = [ring.vars[v] if isinstance(v, int) else v for v in front]
    for n in names:
        if n not in ring.index:
            raise RingMismatchError(f"{n} is not a variable of {ring}")
    front_idx = [ring.index[n] for n in names]
    rest_kind = ring.order.kind if ring.order.kind in ("lex", "grevlex") else "grevlex"
    elim_ring = ring.with_order(MonomialOrder.block(front_idx, rest_kind))
    sub_vars = [v for v in ring.vars if v not in names]
    sub = make_ring(sub_vars, ring.field, rest_kind)
    gb = groebner([g.to_ring(elim_ring) for g in I.gens]) if I.gens else []
    fset = set(front_idx)
    kept = [g for g in gb if not (g.support() & fset)]
    kept = [g.to_ring(sub) for g in kept]
    kept.sort(key=lambda g: g.lead_key, reverse=True)
    J = Ideal(kept, sub)
    J._set_groebner_basis(kept)
    return J


def _aux_ring(ring, base):
    name = ring.fresh_name(base)
    return name, ring.extended([name], order="grevlex")


def _back(J: Ideal, ring: PolyRing) -> Ideal:
    """Re-home an elimination result in ``ring`` (same variables, possibly other order)."""
    if J.ring == ring:
        return J
    return J.to_ring(ring)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    if I.ring != J.ring:
        raise RingMismatchError("ideals of different rings")
    ring = I.ring
    u, ext = _aux_ring(ring, "u")
    uv = ext.var(u)
    gens = [uv * g.to_ring(ext) for g in I.gens]
    gens += [(ext.one - uv) * g.to_ring(ext) for g in J.gens]
    return _back(eliminate(Ideal(gens, ext), [u]), ring)


def _saturate_element(I: Ideal, f: Polynomial) -> Ideal:
    ring = I.ring
    z, ext = _aux_ring(ring, "z")
    zv = ext.var(z)
    gens = [g.to_ring(ext) for g in I.gens] + [ext.one - zv * f.to_ring(ext)]
    return _back(eliminate(Ideal(gens, ext), [z]), ring)


def saturate(I: Ideal, f_or_J) -> Ideal:
    """I : f^infinity, or I : J^infinity as the intersection over J's generators."""
    if isinstance(f_or_J, Polynomial):
        _check_same(I, f_or_J.ring)
        return _saturate_element(I, f_or_J)
    J = f_or_J
    if J.ring != I.ring:
        raise RingMismatchError("ideals of different rings")
    gens = [g for g in J.gens if g]
    if not gens:
        # saturating by the zero ideal: only the unit ideal is left
        return Ideal([I.ring.one], I.ring)
    result = _saturate_element(I, gens[0])
    for g in gens[1:]:
        result = intersect(result, _saturate_element(I, g))
    return result


def _min_hitting_set(sets, n):
    """Smallest number of elements meeting every bitmask in ``sets``."""
    sets = sorted(set(sets), key=lambda s: bin(s).count("1"))
    minimal = []
    for s in sets:
        if not any(m & s == m for m in minimal):
            minimal.append(s)
    best = [n]

    def search(chosen, count):
        if count >= best[0]:
            return
        for s in minimal:
            if not (s & chosen):
                break
        else:
            best[0] = count
            return
        bits = s
        while bits:
            low = bits & -bits
            search(chosen | low, count + 1)
            bits ^= low

    search(0, 0)
    return best[0]


def krull_dim(I: Ideal) -> int:
    """Dimension of R/I: the largest set of variables carrying no leading monomial."""
    gb = I.groebner_basis()
    n = I.ring.nvars
    if not gb:
        return n
    if len(gb) == 1 and gb[0].is_constant():
        raise UnitIdealError("1 is in the ideal")
    codec = I.ring.codec
    supports = [codec.support_mask(g.lead_key) for g in gb]
    return n - _min_hitting_set(supports, n)
