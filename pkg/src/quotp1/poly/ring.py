"""Variable tables, monomial orders and the packed monomial codec.

Every supported order is a product of graded reverse-lex blocks: ``grevlex``
is one block holding all variables, ``lex`` is one singleton block per
variable, and a block-elimination order puts the eliminated variables in a
leading block. Inside a block with variables ``v_1 > ... > v_k`` a monomial
is encoded by its prefix sums ``S_j = e_{v_1} + ... + e_{v_j}`` written
``S_k, ..., S_1`` from the most significant field down. Blocks are laid out
most significant first, one 16-bit field per variable, and the whole thing is
one Python ``int`` (the *key*).

The encoding is linear in the exponent vector, so

* comparing keys as integers compares monomials in the order,
* adding keys multiplies monomials, subtracting a divisor's key divides.

Divisibility, lcm and coprimality need the exponents themselves; the
*dpack* ``key - ((key << B) & shift_mask)`` recovers them as plain packed
fields (one variable per field, in a block-dependent permutation), on which
these tests are a handful of integer operations thanks to the spare top bit
of every field.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from ..errors import RingMismatchError
from .field import QQ, Field

FIELD_BITS = 16
FIELD_MASK = (1 << FIELD_BITS) - 1
MAX_DEGREE = (1 << (FIELD_BITS - 1)) - 1

_VAR_RE = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on a fixed number of variables.

    ``kind`` is ``"lex"``, ``"grevlex"`` or ``"block"``. For ``"block"``,
    ``front`` lists the indices of the leading block (compared by grevlex)
    and ``rest`` names the order used on the remaining variables.
    """

    kind: str = "grevlex"
    front: tuple = ()
    rest: str = "grevlex"

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and self.rest not in ("lex", "grevlex"):
            raise ValueError(f"unknown order for the remaining block {self.rest!r}")

    @classmethod
    def block(cls, front, rest="grevlex"):
        return cls("block", tuple(sorted(set(front))), rest)

    def blocks(self, nvars: int) -> tuple:
        if self.kind == "lex":
            return tuple((i,) for i in range(nvars))
        if self.kind == "grevlex":
            return (tuple(range(nvars)),) if nvars else ()
        front = tuple(i for i in self.front if i < nvars)
        others = tuple(i for i in range(nvars) if i not in front)
        out = [front] if front else []
        if self.rest == "lex":
            out.extend((i,) for i in others)
        elif others:
            out.append(others)
        return tuple(out)

    def __str__(self):
        if self.kind == "block":
            return f"block({','.join(map(str, self.front))};{self.rest})"
        return self.kind


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def order_from_name(name) -> MonomialOrder:
    if isinstance(name, MonomialOrder):
        return name
    return MonomialOrder(str(name).lower())


class MonomialCodec:
    """Packs exponent vectors into order keys for one (nvars, order) pair."""

    def __init__(self, nvars: int, order: MonomialOrder):
        self.nvars = n = nvars
        self.order = order
        self.blocks = order.blocks(nvars)
        B = FIELD_BITS
        # field position (0 = least significant) of every variable, in dpack form
        self.position = [0] * n
        offsets = []
        off = n
        for blk in self.blocks:
            off -= len(blk)
            offsets.append(off)
            for j, v in enumerate(blk):
                self.position[v] = off + j
        self.offsets = offsets
        lowest = set(offsets)
        self.shift_mask = sum(FIELD_MASK << (q * B) for q in range(n) if q not in lowest)
        self.guard = sum(1 << (q * B + B - 1) for q in range(n))
        self.low_ones = sum(1 << (q * B) for q in range(n))
        self.low15 = sum(MAX_DEGREE << (q * B) for q in range(n))
        self._all_ones = self.low_ones
        self._top_shift = (n - 1) * B if n else 0
        self._block_masks = []
        for blk, o in zip(self.blocks, offsets):
            k = len(blk)
            if k > 1:
                mask = ((1 << (k * B)) - 1) << (o * B)
                rep = sum(1 << (i * B) for i in range(k))
                self._block_masks.append((mask, rep))
        self.identity_dpack = not self._block_masks

    # -- conversions -------------------------------------------------------
    def encode(self, exps) -> int:
        if len(exps) != self.nvars:
            raise ValueError(f"exponent vector of length {len(exps)}, expected {self.nvars}")
        key = 0
        for blk in self.blocks:
            partial = []
            s = 0
            for v in blk:
                e = exps[v]
                if e < 0:
                    raise ValueError("negative exponent")
                s += e
                partial.append(s)
            if s > MAX_DEGREE:
                raise OverflowError(f"block degree {s} exceeds {MAX_DEGREE}")
            for S in reversed(partial):
                key = (key << FIELD_BITS) | S
        return key

    def dpack(self, key: int) -> int:
        return key - ((key << FIELD_BITS) & self.shift_mask)

    def decode(self, key: int) -> tuple:
        dp = self.dpack(key)
        B = FIELD_BITS
        return tuple((dp >> (self.position[v] * B)) & FIELD_MASK for v in range(self.nvars))

    def key_of_dpack(self, dp: int) -> int:
        if self.identity_dpack:
            return dp
        key = dp
        for mask, rep in self._block_masks:
            part = dp & mask
            key = key - part + (((part * rep)) & mask)
        return key

    # -- dpack predicates --------------------------------------------------
    def divides(self, a_dp: int, b_dp: int) -> bool:
        g = self.guard
        return ((b_dp | g) - a_dp) & g == g

    def lcm(self, a_dp: int, b_dp: int) -> int:
        m = ((a_dp | self.guard) - b_dp) & self.guard
        sel = m - (m >> (FIELD_BITS - 1))
        return (a_dp & sel) | (b_dp & (self.low15 ^ sel))

    def coprime(self, a_dp: int, b_dp: int) -> bool:
        g = self.guard
        nz_a = ((a_dp | g) - self.low_ones) & g
        nz_b = ((b_dp | g) - self.low_ones) & g
        return not (nz_a & nz_b)

    def degree_dp(self, dp: int) -> int:
        if not self.nvars:
            return 0
        return ((dp * self._all_ones) >> self._top_shift) & FIELD_MASK

    def support_mask(self, key: int) -> int:
        """Bit ``v`` set iff variable ``v`` occurs (bits by variable index)."""
        exps = self.decode(key)
        return sum(1 << v for v, e in enumerate(exps) if e)


@lru_cache(maxsize=None)
def _codec(nvars: int, order: MonomialOrder) -> MonomialCodec:
    return MonomialCodec(nvars, order)


@dataclass(frozen=True)
class PolyRing:
    """A polynomial ring context: variable table, scalar field, monomial order.

    Two rings are interchangeable iff they compare equal.
    """

    vars: tuple
    field: Field = QQ
    order: MonomialOrder = GREVLEX
    codec: MonomialCodec = dc_field(default=None, compare=False, repr=False, hash=False)
    index: dict = dc_field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        names = tuple(str(v) for v in self.vars)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for v in names:
            if not _VAR_RE.match(v):
                raise ValueError(f"bad variable name {v!r}")
        object.__setattr__(self, "vars", names)
        object.__setattr__(self, "order", order_from_name(self.order))
        object.__setattr__(self, "codec", _codec(len(names), self.order))
        object.__setattr__(self, "index", {v: i for i, v in enumerate(names)})

    @property
    def nvars(self) -> int:
        return len(self.vars)

    @property
    def p(self) -> int:
        return self.field.p

    # -- derived rings ------------------------------------------------------
    def with_order(self, order) -> "PolyRing":
        return make_ring(self.vars, self.field, order)

    def with_field(self, field: Field) -> "PolyRing":
        return make_ring(self.vars, field, self.order)

    def extended(self, names, order=None) -> "PolyRing":
        return make_ring(self.vars + tuple(names), self.field, order or self.order)

    def fresh_name(self, base: str) -> str:
        if base not in self.index:
            return base
        i = 0
        while f"{base}{i}" in self.index:
            i += 1
        return f"{base}{i}"

    # -- element constructors -------------------------------------------------
    def gens(self):
        from .polynomial import Polynomial
        return tuple(Polynomial.monomial(self, i) for i in range(self.nvars))

    def var(self, name: str):
        from .polynomial import Polynomial
        from ..errors import UnknownVariableError
        try:
            return Polynomial.monomial(self, self.index[name])
        except KeyError:
            raise UnknownVariableError(f"unknown variable {name!r}") from None

    def __call__(self, value):
        """Coerce a scalar, a polynomial text or a polynomial of an equal ring."""
        from .polynomial import Polynomial
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise RingMismatchError("polynomial belongs to a different ring")
            return value
        if isinstance(value, str):
            from .parse import parse_poly
            return parse_poly(value, self)
        return Polynomial.constant(self, value)

    @property
    def zero(self):
        from .polynomial import Polynomial
        return Polynomial(self, ())

    @property
    def one(self):
        from .polynomial import Polynomial
        return Polynomial.constant(self, 1)

    def __str__(self):
        return f"{self.field}[{', '.join(self.vars)}] ({self.order})"


@lru_cache(maxsize=None)
def _make_ring(vars, field, order):
    return PolyRing(vars, field, order)


def make_ring(vars, field: Field = QQ, order="grevlex") -> PolyRing:
    """Cached ring constructor; equal arguments give the same object."""
    return _make_ring(tuple(vars), field, order_from_name(order))


def monomial_cmp(m1, m2, order, nvars=None) -> int:
    """Compare two exponent vectors: -1 (LT), 0 (EQ) or 1 (GT)."""
    if len(m1) != len(m2):
        raise ValueError("exponent vectors of different length")
    codec = _codec(len(m1), order_from_name(order))
    a, b = codec.encode(m1), codec.encode(m2)
    return (a > b) - (a < b)
