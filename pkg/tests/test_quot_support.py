import random

import sympy

from quotp1.gb import radical_member
from quotp1.matrix import Matrix, char_poly, mat_pow
from quotp1.poly import GF, QQ
from quotp1.quot import (
    BinaryForm,
    ChartIndex,
    CMatrix,
    CoordinateFrame,
    QuotPoint,
    annihilates,
    cayley_hamilton_check,
    cayley_hamilton_symbolic,
    change_frame,
    chart_ideal,
    expand_point,
    frame_form,
    hilb_support,
    p_matrix_at,
    partitions,
    random_chart,
    random_invertible,
    random_point,
    reduced_chart_equations,
    xi_chart_map,
)


def point(d, r, parts, field=QQ, **params):
    names = [f"w_{h}_{m}" for h in range(1, d + 1) for m in range(1, r + 1)]
    return QuotPoint(ChartIndex(d, r, parts), {n: params.get(n, 0) for n in names}, field=field)


def _sympy_form(pt):
    """Homogenized char poly of P at the point, via sympy, as y^d..x^d coefficients."""
    x, y, T = sympy.symbols("x y T")
    P = sympy.Matrix([[sympy.Rational(str(a)) for a in row] for row in p_matrix_at(pt).rows])
    chi = P.charpoly(T).as_expr()
    form = sympy.expand(x ** pt.d * chi.subs(T, y / x))
    poly = sympy.Poly(form, y, x)
    return [poly.coeff_monomial(y ** (pt.d - i) * x ** i) for i in range(pt.d + 1)]


# -- BinaryForm -----------------------------------------------------------------

def test_binary_form_basics():
    f = BinaryForm([2, -6, 4])
    assert f.coeffs == (1, -3, 2) and str(f) == "y^2 - 3*x*y + 2*x^2"
    assert BinaryForm([0, 0, 3]).coeffs == (0, 0, 1)
    assert BinaryForm.linear(1) * BinaryForm.linear(2) == f
    assert BinaryForm.linear(0) ** 3 == BinaryForm([1, 0, 0, 0])
    assert f.reversed() == BinaryForm([2, -3, 1])
    assert BinaryForm.from_json(f.to_json()) == f


# -- hilb_support ---------------------------------------------------------------

def test_hilb_support_examples():
    assert hilb_support(point(2, 2, (1, 1))) == BinaryForm([1, 0, 0])
    form = hilb_support(point(2, 2, (2,), w_1_1=-2, w_2_1=3))
    assert form == BinaryForm([1, -3, 2])
    assert form == BinaryForm.linear(1) * BinaryForm.linear(2)
    for d in (1, 2, 3, 4, 5):
        assert hilb_support(point(d, 2, (d,))) == BinaryForm([1] + [0] * d)


def test_nilpotent_points_have_support_y_to_the_d():
    rng = random.Random(1)
    for _ in range(30):
        d = rng.randint(1, 4)
        # strictly lower triangular P on the all-ones chart
        params = {f"w_{h}_{m}": (rng.randint(-3, 3) if h > m else 0) for h in range(1, d + 1) for m in range(1, d + 1)}
        pt = QuotPoint(ChartIndex(d, max(d, 2), (1,) * d), {**params, **{
            f"w_{h}_{m}": rng.randint(-3, 3) for h in range(1, d + 1) for m in range(d + 1, max(d, 2) + 1)}})
        assert mat_pow(p_matrix_at(pt), d).is_zero()
        assert hilb_support(pt) == BinaryForm([1] + [0] * d)


def test_hilb_support_matches_sympy(rng):
    for _ in range(60):
        d, r = rng.randint(1, 4), rng.randint(2, 3)
        pt = random_point(random_chart(d, r, rng), rng)
        want = BinaryForm([QQ.parse(str(sympy.Rational(c))) for c in _sympy_form(pt)])
        assert hilb_support(pt) == want


def test_xi_map_evaluates_to_hilb_support(rng):
    for _ in range(40):
        d, r = rng.randint(1, 4), rng.randint(2, 3)
        chart = random_chart(d, r, rng)
        pt = random_point(chart, rng)
        coords = xi_chart_map(chart)
        values = [c.eval(pt.params) for c in coords]
        assert BinaryForm(values) == hilb_support(pt)


# -- Cayley-Hamilton ----------------------------------------------------------------

def test_cayley_hamilton_examples():
    pt = point(2, 2, (2,), w_1_1=-2, w_2_1=3, w_1_2=1, w_2_2=1)
    C = expand_point(pt)
    comb = [2 * a - 3 * b + c for a, b, c in zip(*C.block(1))]
    assert comb == [0, 0]
    assert cayley_hamilton_check(pt)
    assert cayley_hamilton_symbolic(ChartIndex(2, 2, (1, 1)))


def test_cayley_hamilton_on_random_points():
    rng = random.Random(2)
    for field in (QQ, GF(32003)):
        for d in (2, 3, 4):
            for r in (2, 3, 4):
                for _ in range(200 if field is QQ else 25):
                    assert cayley_hamilton_check(random_point(random_chart(d, r, rng), rng, field))


def test_cayley_hamilton_symbolic_all_small_charts():
    for d in (1, 2, 3):
        for r in (2, 3):
            for chart in partitions(d, r):
                assert cayley_hamilton_symbolic(chart)


def test_cayley_hamilton_check_detects_corruption(monkeypatch):
    from quotp1.quot import support

    pt = point(2, 2, (2,), w_1_1=-2, w_2_1=3)
    assert cayley_hamilton_check(pt)
    good = expand_point(pt)
    rows = [list(r) for r in good.matrix.rows]
    rows[0][2] += 1  # breaks B_{1,3} = P B_{1,2}
    bad = CMatrix.from_rows(rows, 2, 2)
    monkeypatch.setattr(support, "expand_point", lambda _: bad)
    assert not cayley_hamilton_check(pt)


# -- frame laws ----------------------------------------------------------------------

def test_basis_change_keeps_the_form():
    rng = random.Random(3)
    for _ in range(100):
        d, r = rng.randint(1, 4), rng.randint(2, 3)
        pt = random_point(random_chart(d, r, rng), rng)
        S = random_invertible(r, rng)
        rel = CoordinateFrame(((1, 0), (0, 1)), S.rows)
        moved = change_frame(pt, rel)
        assert hilb_support(moved) == hilb_support(pt)


def test_shift_law():
    rng = random.Random(4)
    for _ in range(60):
        d, r = rng.randint(1, 4), rng.randint(2, 3)
        pt = random_point(random_chart(d, r, rng), rng)
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        ident = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
        moved = change_frame(pt, CoordinateFrame(((1, 0), (c, 1)), ident))
        P = p_matrix_at(pt)
        shifted = P + Matrix.identity(d, QQ).scale(QQ(c))
        assert char_poly(p_matrix_at(moved)) == char_poly(shifted)
        assert frame_form(moved) == frame_form(pt).substitute(((1, 0), (-c, 1)))
        assert hilb_support(moved) == hilb_support(pt)


def test_swap_law():
    rng = random.Random(5)
    done = 0
    while done < 40:
        d, r = rng.randint(1, 4), rng.randint(2, 3)
        pt = random_point(random_chart(d, r, rng), rng)
        P = p_matrix_at(pt)
        if not P.det():
            continue
        ident = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
        moved = change_frame(pt, CoordinateFrame(((0, 1), (1, 0)), ident))
        assert char_poly(p_matrix_at(moved)) == char_poly(P.inverse())
        assert frame_form(moved) == frame_form(pt).reversed()
        assert hilb_support(moved) == hilb_support(pt)
        done += 1


# -- annihilation and the null cone ------------------------------------------------------

def test_support_form_annihilates(rng):
    for _ in range(40):
        d, r = rng.randint(1, 4), rng.randint(2, 3)
        pt = random_point(random_chart(d, r, rng), rng)
        form = hilb_support(pt)
        assert annihilates(pt, form)
        assert annihilates(pt, form * BinaryForm.linear(rng.randint(-3, 3)))


def test_lower_degree_forms_need_not_annihilate():
    pt = point(2, 2, (2,), w_1_1=-2, w_2_1=3)
    assert not annihilates(pt, BinaryForm.linear(1))
    assert not annihilates(pt, BinaryForm.linear(2))
    # the annihilated module: y alone kills it although its support form is y^2
    zero = point(2, 2, (1, 1))
    assert annihilates(zero, BinaryForm.linear(0))


def test_null_cone_radicals_agree():
    I = chart_ideal(ChartIndex(2, 2, (1, 1)))
    J = reduced_chart_equations(ChartIndex(2, 2, (1, 1)))
    assert all(radical_member(g, J) for g in I.gens)
    assert all(radical_member(g, I) for g in J.gens)
