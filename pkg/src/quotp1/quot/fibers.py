"""Decomposition of a point along the distinct roots of its Hilb-support."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import NonSplitCharPolyError
from ..matrix import Matrix, char_poly, mat_pow
from ..poly.polynomial import Polynomial
from ..poly.ring import make_ring
from ..roots import roots_with_multiplicity
from .forms import BinaryForm
from .points import CMatrix, CoordinateFrame, QuotPoint, detect_chart, expand_point, p_matrix_at


def _split_roots(P: Matrix):
    field = P.domain
    cp = char_poly(P)
    roots, rest = roots_with_multiplicity(cp.coeffs, field)
    if len(rest) > 1:
        ring = make_ring(["T"], field)
        factor = Polynomial.from_terms(ring, [((k,), a) for k, a in enumerate(rest) if a])
        raise NonSplitCharPolyError(str(factor), list(rest))
    return roots


def _root_form(pt: QuotPoint, lam) -> BinaryForm:
    """The linear form l' - lam*l in (x, y) coordinates, normalized."""
    f = pt.field
    (a, b), (c, e) = pt.frame.gl2
    return BinaryForm([f(e - lam * b), f(c - lam * a)], f)


def _root_of(form: BinaryForm):
    """(lam, mu) with the form equal to mu*y - lam*x."""
    mu, cx = form.coeffs
    return (form.field(-cx), mu)


@dataclass(frozen=True)
class FiberComponent:
    root: tuple
    eigenvalue: object
    multiplicity: int
    point: QuotPoint
    form: BinaryForm

    def support_form(self) -> BinaryForm:
        return self.form ** self.multiplicity

    def to_json(self) -> dict:
        fmt = self.point.field.format
        return {
            "root": [fmt(self.root[0]), fmt(self.root[1])],
            "form": str(self.form),
            "multiplicity": self.multiplicity,
            "point": self.point.to_json(),
        }


def fiber_decompose(pt: QuotPoint) -> list:
    """One component per distinct root of chi, ordered by eigenvalue.

    The component for lam restricts P to ker (P - lam)^t and the generators to
    their projections there, in the frame (l, l' - lam*l), where the
    restricted matrix is nilpotent; the chart is then re-detected.
    """
    field = pt.field
    P = p_matrix_at(pt)
    d = pt.d
    roots = _split_roots(P)
    ident = Matrix.identity(d, field)
    bases = []
    for lam, t in roots:
        N = P - ident.scale(lam)
        bases.append(mat_pow(N, t).kernel())
    Q = Matrix.from_columns([v for b in bases for v in b], field)
    Qinv = Q.inverse()
    Pd = Qinv * P * Q
    C = expand_point(pt)
    seeds = [Qinv.apply(C.column(m, 0)) for m in range(pt.r)]
    out = []
    start = 0
    for (lam, t), basis in zip(roots, bases):
        idx = range(start, start + t)
        start += t
        Nj = Matrix(field, [[Pd[i, j] for j in idx] for i in idx]) - Matrix.identity(t, field).scale(lam)
        cols = []
        for m in range(pt.r):
            h = tuple(seeds[m][i] for i in idx)
            for _ in range(t + 1):
                cols.append(h)
                h = Nj.apply(h)
        shift = Matrix(field, ((1, 0), (-lam, 1)))
        frame = CoordinateFrame((shift * Matrix(field, pt.frame.gl2)).rows, pt.frame.glr, field)
        Cj = CMatrix(Matrix.from_columns(cols, field), t, pt.r, frame)
        point = detect_chart(Cj)[3]
        form = _root_form(pt, lam)
        out.append(FiberComponent(_root_of(form), lam, t, point, form))
    return out


@dataclass(frozen=True)
class MultiplicityEntry:
    root: tuple
    form: BinaryForm
    algebraic: int
    corank: int

    @property
    def flagged(self) -> bool:
        return self.algebraic != self.corank

    def to_json(self) -> dict:
        return {
            "root": str(self.form),
            "algebraic": self.algebraic,
            "corank": self.corank,
            "flagged": self.flagged,
        }


def multiplicity_profile(pt: QuotPoint) -> list:
    """Per root: multiplicity in chi against dim ker(P - lam)."""
    P = p_matrix_at(pt)
    ident = Matrix.identity(pt.d, pt.field)
    out = []
    for lam, t in _split_roots(P):
        mu = len((P - ident.scale(lam)).kernel())
        form = _root_form(pt, lam)
        out.append(MultiplicityEntry(_root_of(form), form, t, mu))
    return out
