"""Immutable sparse multivariate polynomials."""

from __future__ import annotations

from .. import kernel
from ..errors import MissingVariableError, RingMismatchError
from .ring import PolyRing


class Polynomial:
    """A polynomial over a :class:`PolyRing`.

    ``terms`` is a tuple of ``(key, coeff)`` pairs in strictly decreasing
    monomial order with nonzero coefficients, so two polynomials are equal iff
    their term tuples are. The zero polynomial has no terms.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms):
        self.ring = ring
        self.terms = tuple(terms)
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def from_terms(cls, ring: PolyRing, pairs) -> "Polynomial":
        """Build from ``(exponent vector, coefficient)`` pairs in any order."""
        field = ring.field
        acc = {}
        for exps, c in pairs:
            k = ring.codec.encode(tuple(exps))
            acc[k] = field(acc.get(k, field.zero) + field(c))
        return cls(ring, sorted(((k, v) for k, v in acc.items() if v), reverse=True))

    @classmethod
    def from_dict(cls, ring, mapping) -> "Polynomial":
        return cls.from_terms(ring, mapping.items())

    @classmethod
    def constant(cls, ring, c) -> "Polynomial":
        c = ring.field(c)
        return cls(ring, ((0, c),) if c else ())

    @classmethod
    def monomial(cls, ring, var_index, exponent=1, coeff=1) -> "Polynomial":
        exps = [0] * ring.nvars
        exps[var_index] = exponent
        return cls.from_terms(ring, [(exps, coeff)])

    # -- basic queries ------------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    @property
    def lead_key(self) -> int:
        return self.terms[0][0]

    @property
    def lc(self):
        return self.terms[0][1]

    def lm(self) -> tuple:
        """Leading exponent vector."""
        return self.ring.codec.decode(self.terms[0][0])

    def monomials(self):
        dec = self.ring.codec.decode
        return [dec(k) for k, _ in self.terms]

    def coefficients(self):
        return [c for _, c in self.terms]

    def items(self):
        """``(exponent vector, coefficient)`` pairs in decreasing order."""
        dec = self.ring.codec.decode
        return [(dec(k), c) for k, c in self.terms]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.monomials())

    def support(self) -> set:
        """Indices of the variables that occur."""
        out = set()
        for e in self.monomials():
            out.update(i for i, x in enumerate(e) if x)
        return out

    def variables(self):
        return [self.ring.vars[i] for i in sorted(self.support())]

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"cannot combine {self.ring} and {other.ring}")
            return other
        try:
            return Polynomial.constant(self.ring, other)
        except (TypeError, ValueError):
            return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(self.ring, kernel.add_terms(list(self.terms), list(other.terms), self.ring.p))

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        if p:
            return Polynomial(self.ring, [(k, (-c) % p) for k, c in self.terms])
        return Polynomial(self.ring, [(k, -c) for k, c in self.terms])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms or not other.terms:
            return self.ring.zero
        return Polynomial(self.ring, kernel.mul_terms(list(self.terms), list(other.terms), self.ring.p))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        c = self.ring.field(c)
        if not c:
            return self.ring.zero
        return Polynomial(self.ring, kernel.scale_terms(list(self.terms), c, 0, self.ring.p))

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lc))

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int,)) or self.ring.field.is_element(other):
            return self.terms == Polynomial.constant(self.ring, other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.vars, self.terms))
        return self._hash

    # -- calculus and evaluation -------------------------------------------
    def diff(self, var) -> "Polynomial":
        i = self.ring.index[var] if isinstance(var, str) else var
        pairs = []
        for e, c in self.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                pairs.append((e2, c * e[i]))
        return Polynomial.from_terms(self.ring, pairs)

    def eval(self, assignment):
        """Evaluate at a point given as ``{name or index: scalar}`` or a sequence."""
        field = self.ring.field
        values = self._values(assignment)
        total = field.zero
        for e, c in self.items():
            t = c
            for i, x in enumerate(e):
                if x:
                    t = t * values[i] ** x
            total = total + t
        return field(total)

    def _values(self, assignment):
        field = self.ring.field
        if isinstance(assignment, dict):
            vals = [None] * self.ring.nvars
            for k, v in assignment.items():
                i = self.ring.index[k] if isinstance(k, str) else k
                vals[i] = field(v)
        else:
            vals = [field(v) for v in assignment]
        for i in self.support():
            if i >= len(vals) or vals[i] is None:
                raise MissingVariableError(f"no value for {self.ring.vars[i]}")
        return vals

    def subs(self, mapping) -> "Polynomial":
        """Substitute polynomials (of this ring) for variables."""
        ring = self.ring
        images = list(ring.gens())
        for k, v in mapping.items():
            i = ring.index[k] if isinstance(k, str) else k
            images[i] = ring(v)
        total = ring.zero
        for e, c in self.items():
            t = Polynomial.constant(ring, c)
            for i, x in enumerate(e):
                if x:
                    t = t * images[i] ** x
            total = total + t
        return total

    def to_ring(self, ring: PolyRing) -> "Polynomial":
        """Map into a ring by variable name (any variables of ``self`` must exist there)."""
        if ring == self.ring:
            return self
        idx = []
        for i in range(self.ring.nvars):
            idx.append(ring.index.get(self.ring.vars[i]))
        pairs = []
        for e, c in self.items():
            e2 = [0] * ring.nvars
            for i, x in enumerate(e):
                if x:
                    if idx[i] is None:
                        raise RingMismatchError(f"variable {self.ring.vars[i]} missing from {ring}")
                    e2[idx[i]] = x
            pairs.append((e2, ring.field(c) if ring.field == self.ring.field else c))
        return Polynomial.from_terms(ring, pairs)

    # -- printing -----------------------------------------------------------
    def __str__(self):
        from .parse import format_poly
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"
