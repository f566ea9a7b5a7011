"""Binary forms in x, y over a scalar field, and linear changes of (x, y)."""

from __future__ import annotations

import json
from math import comb

from ..poly.field import QQ, field_from_spec
from ..poly.parse import format_monomial


def linear_power(a, b, n, field) -> list:
    """Coefficients of (a*x + b*y)^n indexed by the power of x."""
    return [field(comb(n, i) * a ** i * b ** (n - i)) for i in range(n + 1)]


def _convolve(u, v, field):
    out = [field.zero] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                if b:
                    out[i + j] = field(out[i + j] + a * b)
    return out


def monomial_in_frame(gl2, i, j, field) -> list:
    """Coefficients (by power of x) of l^i * l'^j, with l, l' the rows of ``gl2``."""
    (a, b), (c, e) = gl2
    return _convolve(linear_power(a, b, i, field), linear_power(c, e, j, field), field)


class BinaryForm:
    """A binary form of degree d, up to scalars.

    ``coeffs[i]`` is the coefficient of x^i y^(d-i), so the list runs from the
    y^d coefficient to the x^d coefficient. The stored representative has its
    first nonzero coefficient equal to 1 (monic in y^d whenever possible).
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, coeffs, field=QQ, normalize=True):
        self.field = field
        cs = [field(c) for c in coeffs]
        if normalize:
            lead = next((c for c in cs if c), None)
            if lead is not None and lead != field.one:
                inv = field.inv(lead)
                cs = [field(c * inv) for c in cs]
        self.coeffs = tuple(cs)

    @property
    def d(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @classmethod
    def from_frame_coeffs(cls, frame_coeffs, gl2, field=QQ) -> "BinaryForm":
        """Pull back sum_i c_i l^i l'^(d-i) to (x, y) coordinates."""
        d = len(frame_coeffs) - 1
        total = [field.zero] * (d + 1)
        for i, c in enumerate(frame_coeffs):
            if c:
                for k, v in enumerate(monomial_in_frame(gl2, i, d - i, field)):
                    total[k] = field(total[k] + c * v)
        return cls(total, field)

    @classmethod
    def linear(cls, lam, mu=1, field=QQ) -> "BinaryForm":
        """The form mu*y - lam*x."""
        return cls([mu, -field(lam)], field)

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        if other.field != self.field:
            raise ValueError("forms over different fields")
        return BinaryForm(_convolve(list(self.coeffs), list(other.coeffs), self.field), self.field)

    def __pow__(self, n: int) -> "BinaryForm":
        out = BinaryForm([1], self.field)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def substitute(self, gl2) -> "BinaryForm":
        """F(a*x + b*y, c*x + e*y) for gl2 = [[a, b], [c, e]], x taking the first row."""
        return BinaryForm.from_frame_coeffs(self.coeffs, gl2, self.field)

    def reversed(self) -> "BinaryForm":
        """Swap the roles of x and y."""
        return BinaryForm(self.coeffs[::-1], self.field)

    def __str__(self):
        d = self.d
        out = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            s = self.field.format(c)
            neg = s.startswith("-")
            if neg:
                s = s[1:]
            mono = format_monomial((i, d - i), ("x", "y"))
            body = (mono if s == "1" else f"{s}*{mono}") if mono else s
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out) or "0"

    def __repr__(self):
        return f"BinaryForm({self})"

    def to_json(self) -> dict:
        return {"d": self.d, "coeffs": [self.field.format(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data, field=None) -> "BinaryForm":
        if isinstance(data, str):
            data = json.loads(data)
        field = field or field_from_spec(data.get("field", "Q"))
        coeffs = [field.parse(str(c)) for c in data["coeffs"]]
        if len(coeffs) != data["d"] + 1:
            raise ValueError("coefficient count does not match the degree")
        return cls(coeffs, field)
