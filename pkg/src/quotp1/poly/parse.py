"""Polynomial text grammar (ASCII).

::

    poly    := ['-'] term (('+'|'-') term)*
    term    := coeff | coeff '*' factors | factors
    factors := var ['^' uint] ('*' var ['^' uint])*
    coeff   := int ['/' uint]

Whitespace is insignificant. ``format_poly`` prints in this grammar with
terms in decreasing monomial order, so printing then parsing is the identity.
"""

from __future__ import annotations

import re

from ..errors import PolySyntaxError, UnknownVariableError

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<var>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^]))")


def _tokenize(text):
    pos = 0
    out = []
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start))
        pos = m.end()
    out.append(("end", "", n))
    return out


class _Parser:
    def __init__(self, text, ring):
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = ring
        self.field = ring.field

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, kind, value=None):
        t = self.take()
        if t[0] != kind or (value is not None and t[1] != value):
            want = value or kind
            got = t[1] or "end of input"
            raise PolySyntaxError(f"expected {want}, got {got!r}", t[2])
        return t

    def poly(self):
        pairs = []
        sign = 1
        if self.peek()[:2] == ("op", "-"):
            self.take()
            sign = -1
        pairs.append(self.term(sign))
        while True:
            t = self.peek()
            if t[0] == "end":
                break
            if t[0] == "op" and t[1] in "+-":
                self.take()
                pairs.append(self.term(1 if t[1] == "+" else -1))
            else:
                raise PolySyntaxError(f"expected '+' or '-', got {t[1]!r}", t[2])
        return pairs

    def term(self, sign):
        t = self.peek()
        coeff = self.field(sign)
        if t[0] == "num":
            coeff = coeff * self.coeff()
            if self.peek()[:2] == ("op", "*"):
                self.take()
                return self.factors(), coeff
            return [0] * self.ring.nvars, coeff
        if t[0] == "var":
            return self.factors(), coeff
        raise PolySyntaxError(f"expected a term, got {t[1] or 'end of input'!r}", t[2])

    def coeff(self):
        num = int(self.expect("num")[1])
        if self.peek()[:2] == ("op", "/"):
            self.take()
            tok = self.expect("num")
            den = int(tok[1])
            if den == 0:
                raise PolySyntaxError("zero denominator", tok[2])
            return self.field.div(self.field(num), self.field(den))
        return self.field(num)

    def factors(self):
        exps = [0] * self.ring.nvars
        while True:
            _, name, pos = self.expect("var")
            idx = self.ring.index.get(name)
            if idx is None:
                raise UnknownVariableError(f"unknown variable {name!r} at position {pos}")
            e = 1
            if self.peek()[:2] == ("op", "^"):
                self.take()
                e = int(self.expect("num")[1])
            exps[idx] += e
            if self.peek()[:2] == ("op", "*"):
                self.take()
                continue
            return exps


def parse_poly(text: str, ring):
    from .polynomial import Polynomial
    pairs = _Parser(text, ring).poly()
    return Polynomial.from_terms(ring, pairs)


def format_monomial(exps, names) -> str:
    parts = []
    for e, name in zip(exps, names):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f) -> str:
    ring = f.ring
    if not f.terms:
        return "0"
    field = ring.field
    out = []
    for i, (exps, c) in enumerate(f.items()):
        s = field.format(c)
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        mono = format_monomial(exps, ring.vars)
        if mono:
            body = mono if s == "1" else f"{s}*{mono}"
        else:
            body = s
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)
