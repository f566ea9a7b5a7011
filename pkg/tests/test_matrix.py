import random

import pytest
import sympy
from gmpy2 import mpq

from quotp1.errors import DimensionMismatchError, NotSquareError, PointNotOnVarietyError
from quotp1.matrix import Matrix, char_poly, jacobian_rank_at, kernel, mat_mul, mat_pow
from quotp1.poly import GF, QQ, make_ring, parse_poly
from quotp1.quot import ChartIndex, chart_ideal, generic_p_matrix, partitions

from conftest import to_sympy

W = make_ring(["w_1_1", "w_1_2", "w_2_1", "w_2_2"], QQ)


def P(text, ring=W):
    return parse_poly(text, ring)


def _random_scalar(rng, n, m, field=QQ, lo=-4, hi=4):
    return Matrix(field, [[field(rng.randint(lo, hi)) for _ in range(m)] for _ in range(n)])


def _to_sympy(M):
    return sympy.Matrix([[sympy.Rational(int(mpq(a).numerator), int(mpq(a).denominator)) for a in row]
                         for row in M.rows])


# -- products and powers ------------------------------------------------------------

def test_mat_pow_examples():
    C = generic_p_matrix(ChartIndex(2, 2, (2,)))
    R = C.domain
    sq = mat_pow(C, 2)
    want = Matrix(R, [[P("w_1_1", R), P("w_1_1*w_2_1", R)], [P("w_2_1", R), P("w_1_1 + w_2_1^2", R)]])
    assert sq == want
    assert mat_pow(C, 0) == Matrix.identity(2, R)
    Z = Matrix.zeros(3, 3, QQ)
    assert all(mat_pow(Z, k) == Z for k in (1, 2, 5))
    with pytest.raises(ValueError):
        mat_pow(C, -1)
    with pytest.raises(NotSquareError):
        mat_pow(Matrix.zeros(2, 3, QQ), 2)


def test_mat_mul_dimensions():
    with pytest.raises(DimensionMismatchError):
        mat_mul(Matrix.zeros(2, 3, QQ), Matrix.zeros(2, 3, QQ))


def test_mul_and_pow_match_sympy(rng):
    for _ in range(40):
        n, k, m = rng.randint(1, 4), rng.randint(1, 4), rng.randint(1, 4)
        A, B = _random_scalar(rng, n, k), _random_scalar(rng, k, m)
        assert _to_sympy(mat_mul(A, B)) == _to_sympy(A) * _to_sympy(B)
        S = _random_scalar(rng, n, n)
        e = rng.randint(0, 6)
        assert _to_sympy(mat_pow(S, e)) == _to_sympy(S) ** e


# -- characteristic polynomials ---------------------------------------------------------

def test_char_poly_examples():
    G = Matrix(W, [[P("w_1_1"), P("w_1_2")], [P("w_2_1"), P("w_2_2")]])
    cp = char_poly(G)
    assert cp.coeffs == (P("w_1_1*w_2_2 - w_1_2*w_2_1"), P("-w_1_1 - w_2_2"), W.one)
    for t in (2, 3, 4, 5):
        C = generic_p_matrix(ChartIndex(t, 2, (t,)))
        R = C.domain
        cp = char_poly(C)
        assert cp.coeffs[t] == R.one
        assert [cp.coeffs[k] for k in range(t)] == [-R.var(f"w_{k + 1}_1") for k in range(t)]
    assert char_poly(Matrix.zeros(4, 4, QQ)).coeffs == (0, 0, 0, 0, 1)
    with pytest.raises(NotSquareError):
        char_poly(Matrix.zeros(2, 3, QQ))


def test_char_poly_matches_sympy_on_polynomial_matrices():
    rng = random.Random(7)
    R = make_ring(["a", "b", "c"], QQ)
    syms = sympy.symbols("a b c")
    T = sympy.Symbol("T")
    for _ in range(15):
        n = rng.randint(1, 4)
        entries = [[R.var(rng.choice(R.vars)) * rng.randint(-2, 2) + rng.randint(-1, 1) for _ in range(n)]
                   for _ in range(n)]
        M = Matrix(R, entries)
        cp = char_poly(M)
        SM = sympy.Matrix([[to_sympy(e, syms) for e in row] for row in entries])
        ref = sympy.Poly((T * sympy.eye(n) - SM).det(), T).all_coeffs()[::-1]
        ours = [to_sympy(a, syms) for a in cp.coeffs]
        assert [sympy.expand(a - b) for a, b in zip(ours, ref)] == [0] * (n + 1)


def test_cayley_hamilton_scalar_and_symbolic(rng):
    for field in (QQ, GF(32003), GF(3)):
        for _ in range(30):
            n = rng.randint(1, 4)
            M = _random_scalar(rng, n, n, field)
            assert char_poly(M).at_matrix(M).is_zero()
    for t in (2, 3, 4):
        for chart in partitions(t, 3):
            C = generic_p_matrix(chart)
            assert char_poly(C).at_matrix(C).is_zero()
    G = Matrix(W, [[P("w_1_1"), P("w_1_2")], [P("w_2_1"), P("w_2_2")]])
    assert char_poly(G).at_matrix(G).is_zero()


def test_trace_and_det_coefficients(rng):
    for _ in range(50):
        n = rng.randint(1, 5)
        M = _random_scalar(rng, n, n)
        cp = char_poly(M)
        S = _to_sympy(M)
        assert cp.coeffs[n - 1] == -S.trace()
        assert cp.coeffs[0] == (-1) ** n * S.det()
        assert M.det() == S.det()
        ref = S.charpoly().all_coeffs()[::-1]
        assert list(cp.coeffs) == [mpq(int(c.p), int(c.q)) for c in map(sympy.Rational, ref)]


def test_similarity_invariance(rng):
    for field in (QQ, GF(32003)):
        done = 0
        while done < 30:
            n = rng.randint(1, 4)
            S = _random_scalar(rng, n, n, field)
            if not S.det():
                continue
            M = _random_scalar(rng, n, n, field)
            conj = mat_mul(mat_mul(S.inverse(), M), S)
            assert char_poly(conj) == char_poly(M)
            done += 1


# -- elimination ----------------------------------------------------------------------

def test_kernel_examples():
    assert kernel(Matrix.identity(3, QQ)) == []
    assert len(kernel(Matrix.zeros(2, 2, QQ))) == 2
    (v,) = kernel(Matrix(QQ, [[0, 1], [0, 0]]))
    assert v[1] == 0 and v[0] != 0


def test_rank_nullity_and_kernel(rng):
    for field in (QQ, GF(5)):
        for _ in range(60):
            n, m = rng.randint(1, 5), rng.randint(1, 5)
            M = _random_scalar(rng, n, m, field, -2, 2)
            basis = kernel(M)
            assert M.rank() + len(basis) == m
            for v in basis:
                assert all(not x for x in M.apply(v))
            if field is QQ:
                assert M.rank() == _to_sympy(M).rank()


def test_inverse_matches_sympy(rng):
    done = 0
    while done < 30:
        n = rng.randint(1, 4)
        M = _random_scalar(rng, n, n)
        if not M.det():
            with pytest.raises(ZeroDivisionError):
                M.inverse()
            continue
        assert _to_sympy(M.inverse()) == _to_sympy(M).inv()
        done += 1


# -- Jacobians ------------------------------------------------------------------------

def test_jacobian_rank_examples():
    origin = {v: 0 for v in W.vars}
    assert jacobian_rank_at([P("w_1_1 + w_2_2"), P("w_1_1*w_2_2 - w_1_2*w_2_1")], origin) == (1, 3)
    I = chart_ideal(ChartIndex(2, 2, (1, 1)))
    pt = {"w_1_1": 0, "w_1_2": 1, "w_2_1": 0, "w_2_2": 0}
    assert jacobian_rank_at(list(I.gens), pt) == (2, 2)
    assert jacobian_rank_at([P("w_1_1^2"), P("w_1_2*w_2_1 + w_2_2^3")], origin) == (0, 4)


def test_jacobian_point_off_variety():
    with pytest.raises(PointNotOnVarietyError):
        jacobian_rank_at([P("w_1_1 - 1")], {v: 0 for v in W.vars})


def test_matrix_json_round_trip():
    C = generic_p_matrix(ChartIndex(3, 2, (2, 1)))
    back = Matrix.from_json(C.to_json(), C.domain)
    assert back == C
    with pytest.raises(DimensionMismatchError):
        Matrix.from_json({"rows": 2, "cols": 2, "entries": [["1", "0"]]}, QQ)
