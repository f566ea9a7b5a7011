"""Exact scalar fields: the rationals (gmpy2 ``mpq``) and prime fields.

Rational scalars are ``gmpy2.mpq`` values, always in lowest terms with a
positive denominator. Prime-field scalars are plain ``int`` residues in
``[0, p)``. Every field exposes ``p`` (0 for the rationals), which is also
what the reduction kernels receive.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

import gmpy2
from gmpy2 import mpq

DEFAULT_PRIME = 32003

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


class Field:
    p: int

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)


@dataclass(frozen=True)
class RationalField(Field):
    p: int = 0

    def __call__(self, value):
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            return mpq(value.numerator, value.denominator)
        return mpq(value)

    def is_element(self, value) -> bool:
        return type(value) is type(mpq(0))

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("division by zero in Q")
        return 1 / a

    def div(self, a, b):
        if not b:
            raise ZeroDivisionError("division by zero in Q")
        return a / b

    def format(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        m = _SCALAR_RE.match(str(text))
        if m is None:
            raise ValueError(f"not a scalar: {text!r}")
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        return mpq(int(m.group(1)), den)

    def spec(self) -> str:
        return "Q"

    def __str__(self):
        return "QQ"


@dataclass(frozen=True)
class PrimeField(Field):
    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.p < 2 or not gmpy2.is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    def __call__(self, value):
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction) or type(value) is type(mpq(0)):
            num, den = int(value.numerator), int(value.denominator)
            if den % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return num * pow(den, -1, self.p) % self.p
        return int(value) % self.p

    def is_element(self, value) -> bool:
        return isinstance(value, int) and 0 <= value < self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def parse(self, text: str):
        m = _SCALAR_RE.match(str(text))
        if m is None:
            raise ValueError(f"not a scalar: {text!r}")
        num = int(m.group(1)) % self.p
        if m.group(2) is None:
            return num
        return self.div(num, int(m.group(2)) % self.p)

    def format(self, a) -> str:
        # symmetric representative, so that "-1" survives a round trip
        return str(a - self.p if a > self.p // 2 else a)

    def spec(self) -> str:
        return f"Fp:{self.p}"

    def __str__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p: int = DEFAULT_PRIME) -> PrimeField:
    return PrimeField(p)


def field_from_spec(text: str) -> Field:
    """Accept ``Q``/``q`` or ``Fp:<p>``/``fp:<p>`` (as used by the JSON and CLI)."""
    t = text.strip().lower()
    if t in ("q", "qq"):
        return QQ
    if t.startswith("fp:"):
        return GF(int(t[3:]))
    if t == "fp":
        return GF(DEFAULT_PRIME)
    raise ValueError(f"unknown field {text!r}; use 'q' or 'fp:<prime>'")
