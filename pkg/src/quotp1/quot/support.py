"""The Hilb-support of a point: the form l^d chi(l'/l) and related checks."""

from __future__ import annotations

from ..matrix import Matrix, char_poly, mat_pow
from .charts import ChartIndex, chart_ring, generic_p_matrix, var_name
from .forms import BinaryForm
from .points import QuotPoint, expand_point, p_matrix_at


def frame_form(pt: QuotPoint) -> BinaryForm:
    """l^d chi(l'/l) written in the frame's own variables (l as x, l' as y)."""
    cp = char_poly(p_matrix_at(pt))
    return BinaryForm(list(reversed(cp.coeffs)), pt.field)


def hilb_support(pt: QuotPoint) -> BinaryForm:
    """The value of xi at the point, in the standard (x, y) coordinates."""
    cp = char_poly(p_matrix_at(pt))
    return BinaryForm.from_frame_coeffs(list(reversed(cp.coeffs)), pt.frame.gl2, pt.field)


def cayley_hamilton_check(pt: QuotPoint) -> bool:
    """a_0 B_{m,1} + ... + a_{d-1} B_{m,d} + B_{m,d+1} = 0 for every block m."""
    f = pt.field
    C = expand_point(pt)
    a = char_poly(p_matrix_at(pt)).coeffs
    for m in range(pt.r):
        acc = [f.zero] * pt.d
        for j, col in enumerate(C.block(m)):
            if a[j]:
                acc = [f(s + a[j] * v) for s, v in zip(acc, col)]
        if any(acc):
            return False
    return True


def cayley_hamilton_symbolic(chart: ChartIndex) -> bool:
    """The same combination over the chart's polynomial ring, block by block."""
    ring = chart_ring(chart)
    P = generic_p_matrix(chart)
    a = char_poly(P).coeffs
    d = chart.d
    offsets = chart.offsets()
    for m in range(chart.r):
        if m < chart.s:
            col = tuple(ring.one if row == offsets[m] else ring.zero for row in range(d))
        else:
            col = tuple(ring.var(var_name(h, m + 1)) for h in range(1, d + 1))
        acc = [ring.zero] * d
        for j in range(d + 1):
            if j:
                col = P.apply(col)
            acc = [s + a[j] * v for s, v in zip(acc, col)]
        if any(acc):
            return False
    return True


def annihilates(pt: QuotPoint, form: BinaryForm) -> bool:
    """Whether a form of any degree kills the module of the point.

    In the frame, a form sum_j f_j l^(k-j) l'^j acts on the degree >= d part
    as sum_j f_j P^j (l being injective there), so it annihilates iff that
    matrix vanishes.
    """
    f = pt.field
    inv = Matrix(f, pt.frame.gl2).inverse().rows
    # x and y in terms of (l, l'): substituting gives the form in frame variables
    in_frame = form.substitute(inv) if not pt.frame.is_identity() else form
    k = in_frame.d
    P = p_matrix_at(pt)
    acc = Matrix.zeros(pt.d, pt.d, f)
    for i, c in enumerate(in_frame.coeffs):
        # coeffs[i] multiplies l^i l'^(k-i)
        if c:
            acc = acc + mat_pow(P, k - i).scale(c)
    return acc.is_zero()
