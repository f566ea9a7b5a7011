"""Dense matrices over a scalar field or a polynomial ring.

Scalar matrices support exact elimination (rank, kernel, inverse); matrices
of polynomials support products, powers, determinants and characteristic
polynomials, all without dividing.
"""

from __future__ import annotations

import json

from .errors import DimensionMismatchError, NotSquareError, PointNotOnVarietyError
from .poly.field import Field
from .poly.parse import parse_poly
from .poly.polynomial import Polynomial
from .poly.ring import MonomialOrder, PolyRing, make_ring


class _FieldOps:
    """Arithmetic on raw scalars of a field (``mpq`` or residues)."""

    is_field = True

    def __init__(self, field: Field):
        self.base = field
        self.p = field.p
        self.zero = field.zero
        self.one = field.one

    def coerce(self, a):
        return self.base(a)

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return a * b % self.p if self.p else a * b

    def neg(self, a):
        return -a % self.p if self.p else -a

    def inv(self, a):
        return self.base.inv(a)

    def format(self, a) -> str:
        return self.base.format(a)

    def parse(self, text):
        return self.base.parse(text)

    def __eq__(self, other):
        return isinstance(other, _FieldOps) and other.base == self.base

    def __hash__(self):
        return hash(self.base)


class _RingOps:
    """Arithmetic on :class:`Polynomial` values of one ring."""

    is_field = False

    def __init__(self, ring: PolyRing):
        self.base = ring
        self.zero = ring.zero
        self.one = ring.one

    def coerce(self, a):
        return self.base(a)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    def format(self, a) -> str:
        return str(a)

    def parse(self, text):
        return parse_poly(text, self.base)

    def __eq__(self, other):
        return isinstance(other, _RingOps) and other.base == self.base

    def __hash__(self):
        return hash(self.base)


def _ops(domain):
    if isinstance(domain, (_FieldOps, _RingOps)):
        return domain
    if isinstance(domain, PolyRing):
        return _RingOps(domain)
    if isinstance(domain, Field):
        return _FieldOps(domain)
    raise TypeError(f"not a matrix domain: {domain!r}")


class Matrix:
    """An immutable ``nrows x ncols`` matrix over ``domain`` (a Field or PolyRing)."""

    __slots__ = ("ops", "rows", "nrows", "ncols")

    def __init__(self, domain, rows, ncols=None):
        self.ops = _ops(domain)
        conv = self.ops.coerce
        self.rows = tuple(tuple(conv(a) for a in row) for row in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        if any(len(r) != self.ncols for r in self.rows):
            raise DimensionMismatchError("ragged rows")

    @classmethod
    def _raw(cls, ops, rows, ncols):
        m = cls.__new__(cls)
        m.ops = ops
        m.rows = tuple(tuple(r) for r in rows)
        m.nrows = len(m.rows)
        m.ncols = ncols
        return m

    @property
    def domain(self):
        return self.ops.base

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @classmethod
    def identity(cls, n, domain) -> "Matrix":
        ops = _ops(domain)
        return cls._raw(ops, [[ops.one if i == j else ops.zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, nrows, ncols, domain) -> "Matrix":
        ops = _ops(domain)
        return cls._raw(ops, [[ops.zero] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def from_columns(cls, columns, domain, nrows=None) -> "Matrix":
        columns = [list(c) for c in columns]
        n = len(columns[0]) if columns else (nrows or 0)
        return cls(domain, [[c[i] for c in columns] for i in range(n)], ncols=len(columns))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix._raw(self.ops, [self.column(j) for j in range(self.ncols)], self.nrows)

    def select_columns(self, idx) -> "Matrix":
        idx = list(idx)
        return Matrix._raw(self.ops, [[r[j] for j in idx] for r in self.rows], len(idx))

    def hstack(self, other: "Matrix") -> "Matrix":
        if other.nrows != self.nrows:
            raise DimensionMismatchError("row counts differ")
        return Matrix._raw(self.ops, [a + b for a, b in zip(self.rows, other.rows)], self.ncols + other.ncols)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return all(not a for r in self.rows for a in r)

    # -- arithmetic -----------------------------------------------------------
    def _check_domain(self, other):
        if other.ops != self.ops:
            raise DimensionMismatchError("matrices over different domains")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_domain(other)
        if other.shape != self.shape:
            raise DimensionMismatchError(f"cannot add {self.shape} and {other.shape}")
        add = self.ops.add
        return Matrix._raw(self.ops, [[add(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_domain(other)
        if other.shape != self.shape:
            raise DimensionMismatchError(f"cannot subtract {other.shape} from {self.shape}")
        sub = self.ops.sub
        return Matrix._raw(self.ops, [[sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self) -> "Matrix":
        neg = self.ops.neg
        return Matrix._raw(self.ops, [[neg(a) for a in r] for r in self.rows], self.ncols)

    def scale(self, c) -> "Matrix":
        c = self.ops.coerce(c)
        mul = self.ops.mul
        return Matrix._raw(self.ops, [[mul(c, a) for a in r] for r in self.rows], self.ncols)

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return self.scale(other)
        return mat_mul(self, other)

    def apply(self, vec) -> tuple:
        """Matrix times a column vector given as a sequence."""
        if len(vec) != self.ncols:
            raise DimensionMismatchError("vector length does not match column count")
        ops = self.ops
        out = []
        for r in self.rows:
            acc = ops.zero
            for a, b in zip(r, vec):
                if a and b:
                    acc = ops.add(acc, ops.mul(a, b))
            out.append(acc)
        return tuple(out)

    def __pow__(self, k: int) -> "Matrix":
        return mat_pow(self, k)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ops == other.ops and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, self.rows))

    def trace(self):
        if not self.is_square():
            raise NotSquareError("trace of a non-square matrix")
        acc = self.ops.zero
        for i in range(self.nrows):
            acc = self.ops.add(acc, self.rows[i][i])
        return acc

    def entries(self):
        return [a for r in self.rows for a in r]

    def eval(self, assignment, field: Field | None = None) -> "Matrix":
        """Evaluate a polynomial matrix at a point, giving a scalar matrix."""
        if self.ops.is_field:
            return self
        field = field or self.domain.field
        return Matrix(field, [[a.eval(assignment) if a else field.zero for a in r] for r in self.rows], self.ncols)

    def map(self, fn, domain) -> "Matrix":
        return Matrix(domain, [[fn(a) for a in r] for r in self.rows], self.ncols)

    # -- exact elimination (scalar fields) -----------------------------------
    def _need_field(self, what):
        if not self.ops.is_field:
            raise TypeError(f"{what} needs a matrix over a field")

    def rref(self):
        """Reduced row echelon form and pivot columns.

        Pivots are taken column by column, using the first row (from the top
        of the unreduced part) with a nonzero entry.
        """
        self._need_field("rref")
        ops = self.ops
        rows = [list(r) for r in self.rows]
        pivots = []
        top = 0
        for j in range(self.ncols):
            if top == self.nrows:
                break
            pr = next((i for i in range(top, self.nrows) if rows[i][j]), None)
            if pr is None:
                continue
            rows[top], rows[pr] = rows[pr], rows[top]
            inv = ops.inv(rows[top][j])
            rows[top] = [ops.mul(inv, a) for a in rows[top]]
            pivot_row = rows[top]
            for i in range(self.nrows):
                if i != top and rows[i][j]:
                    f = rows[i][j]
                    rows[i] = [ops.sub(a, ops.mul(f, b)) if b else a for a, b in zip(rows[i], pivot_row)]
            pivots.append(j)
            top += 1
        return Matrix._raw(ops, rows, self.ncols), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> list:
        """Basis of the right null space, one tuple per free column."""
        R, pivots = self.rref()
        ops = self.ops
        free = [j for j in range(self.ncols) if j not in pivots]
        basis = []
        for f in free:
            v = [ops.zero] * self.ncols
            v[f] = ops.one
            for i, pj in enumerate(pivots):
                v[pj] = ops.neg(R.rows[i][f])
            basis.append(tuple(v))
        return basis

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise NotSquareError("inverse of a non-square matrix")
        n = self.nrows
        R, pivots = self.hstack(Matrix.identity(n, self.domain)).rref()
        if pivots[:n] != tuple(range(n)):
            raise ZeroDivisionError("singular matrix")
        return Matrix._raw(self.ops, [r[n:] for r in R.rows], n)

    def solve(self, rhs: "Matrix") -> "Matrix":
        """X with self * X = rhs for an invertible square ``self``."""
        if not self.is_square():
            raise NotSquareError("solve needs a square matrix")
        n = self.nrows
        R, pivots = self.hstack(rhs).rref()
        if pivots[:n] != tuple(range(n)):
            raise ZeroDivisionError("singular matrix")
        return Matrix._raw(self.ops, [r[n:] for r in R.rows], rhs.ncols)

    def det(self):
        if not self.is_square():
            raise NotSquareError("determinant of a non-square matrix")
        if not self.ops.is_field:
            return _laplace_det(self.ops, self.rows)
        ops = self.ops
        rows = [list(r) for r in self.rows]
        n = self.nrows
        d = ops.one
        for j in range(n):
            pr = next((i for i in range(j, n) if rows[i][j]), None)
            if pr is None:
                return ops.zero
            if pr != j:
                rows[j], rows[pr] = rows[pr], rows[j]
                d = ops.neg(d)
            d = ops.mul(d, rows[j][j])
            inv = ops.inv(rows[j][j])
            for i in range(j + 1, n):
                if rows[i][j]:
                    f = ops.mul(rows[i][j], inv)
                    rows[i] = [ops.sub(a, ops.mul(f, b)) if b else a for a, b in zip(rows[i], rows[j])]
        return d

    # -- text and JSON ---------------------------------------------------------
    def to_json(self) -> dict:
        fmt = self.ops.format
        return {"rows": self.nrows, "cols": self.ncols, "entries": [[fmt(a) for a in r] for r in self.rows]}

    @classmethod
    def from_json(cls, data, domain) -> "Matrix":
        if isinstance(data, str):
            data = json.loads(data)
        ops = _ops(domain)
        rows = [[ops.parse(str(a)) for a in r] for r in data["entries"]]
        if len(rows) != data["rows"] or any(len(r) != data["cols"] for r in rows):
            raise DimensionMismatchError("entries do not match the declared shape")
        return cls._raw(ops, rows, data["cols"])

    def __str__(self):
        cells = [[self.ops.format(a) for a in r] for r in self.rows]
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[" + "  ".join(c.rjust(width) for c in r) + "]" for r in cells)

    def __repr__(self):
        return f"Matrix({self.domain}, {[list(map(self.ops.format, r)) for r in self.rows]})"


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    A._check_domain(B)
    if A.ncols != B.nrows:
        raise DimensionMismatchError(f"cannot multiply {A.shape} by {B.shape}")
    ops = A.ops
    add, mul = ops.add, ops.mul
    cols = B.columns()
    out = []
    for r in A.rows:
        nz = [(k, a) for k, a in enumerate(r) if a]
        row = []
        for c in cols:
            acc = ops.zero
            for k, a in nz:
                b = c[k]
                if b:
                    acc = add(acc, mul(a, b))
            row.append(acc)
        out.append(row)
    return Matrix._raw(ops, out, B.ncols)


def mat_pow(P: Matrix, k: int) -> Matrix:
    if not P.is_square():
        raise NotSquareError("power of a non-square matrix")
    if k < 0:
        raise ValueError("negative matrix power")
    result = Matrix.identity(P.nrows, P.ops)
    base = P
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


# -- determinants and characteristic polynomials -------------------------------

def _laplace_det(ops, rows):
    """Division-free determinant by row expansion memoized on column subsets."""
    n = len(rows)
    if n == 0:
        return ops.one
    # minors[mask] = det of the last popcount(mask) rows restricted to columns in mask
    minors = {0: ops.one}
    for k in range(n - 1, -1, -1):
        row = rows[k]
        nxt = {}
        for mask, sub in minors.items():
            if not sub:
                continue
            for j in range(n):
                bit = 1 << j
                if mask & bit or not row[j]:
                    continue
                # sign from the position of column j among the columns of mask|bit
                sign = bin(mask & (bit - 1)).count("1") & 1
                term = ops.mul(row[j], sub)
                key = mask | bit
                cur = nxt.get(key, ops.zero)
                nxt[key] = ops.sub(cur, term) if sign else ops.add(cur, term)
        minors = nxt
    return minors.get((1 << n) - 1, ops.zero)


class _TPolyOps:
    """Polynomials in T over a base domain, as coefficient lists (constant first)."""

    def __init__(self, base):
        self.base = base
        self.zero = ()
        self.one = (base.one,)

    def _trim(self, c):
        c = list(c)
        while c and not c[-1]:
            c.pop()
        return tuple(c)

    def add(self, a, b):
        n = max(len(a), len(b))
        z = self.base.zero
        return self._trim(self.base.add(a[i] if i < len(a) else z, b[i] if i < len(b) else z) for i in range(n))

    def sub(self, a, b):
        n = max(len(a), len(b))
        z = self.base.zero
        return self._trim(self.base.sub(a[i] if i < len(a) else z, b[i] if i < len(b) else z) for i in range(n))

    def mul(self, a, b):
        if not a or not b:
            return ()
        base = self.base
        out = [base.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = base.add(out[i + j], base.mul(x, y))
        return self._trim(out)


class CharPoly:
    """Monic ``det(T*Id - P)`` stored as ``coeffs[k]`` = coefficient of ``T^k``."""

    __slots__ = ("ops", "coeffs")

    def __init__(self, domain, coeffs):
        self.ops = _ops(domain)
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def domain(self):
        return self.ops.base

    def nonleading(self) -> list:
        """a_0, ..., a_{d-1}."""
        return list(self.coeffs[:-1])

    def at_matrix(self, P: Matrix) -> Matrix:
        """sum a_k P^k by Horner's rule; zero by Cayley-Hamilton."""
        n = P.nrows
        acc = Matrix.zeros(n, n, P.ops)
        ident = Matrix.identity(n, P.ops)
        for a in reversed(self.coeffs):
            acc = mat_mul(acc, P) + ident.scale(a)
        return acc

    def eval(self, value):
        ops = self.ops
        acc = ops.zero
        for a in reversed(self.coeffs):
            acc = ops.add(ops.mul(acc, value), a)
        return acc

    def to_poly(self, var="T") -> Polynomial:
        """As a polynomial in ``var`` over the coefficient ring (extended by ``var``)."""
        base = self.domain
        if isinstance(base, PolyRing):
            # T leads the order so terms print grouped by powers of T
            rest = base.order.kind if base.order.kind in ("lex", "grevlex") else "grevlex"
            ring = base.extended([var], order=MonomialOrder.block([base.nvars], rest))
            t = ring.var(var)
            total = ring.zero
            for k, a in enumerate(self.coeffs):
                if a:
                    total = total + a.to_ring(ring) * t ** k
            return total
        ring = make_ring([var], base)
        return Polynomial.from_terms(ring, [((k,), a) for k, a in enumerate(self.coeffs) if a])

    def __eq__(self, other):
        if not isinstance(other, CharPoly):
            return NotImplemented
        return self.ops == other.ops and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        return str(self.to_poly())

    def __repr__(self):
        return f"CharPoly({self})"


def char_poly(P: Matrix) -> CharPoly:
    """Monic characteristic polynomial, by memoized cofactor expansion of T*Id - P."""
    if not P.is_square():
        raise NotSquareError("characteristic polynomial of a non-square matrix")
    base = P.ops
    tops = _TPolyOps(base)
    n = P.nrows
    rows = []
    for i, r in enumerate(P.rows):
        row = []
        for j, a in enumerate(r):
            c = (base.neg(a),) if a else ()
            if i == j:
                c = (c[0] if c else base.zero, base.one)
            row.append(c)
        rows.append(row)
    coeffs = list(_laplace_det(tops, rows))
    coeffs += [base.zero] * (n + 1 - len(coeffs))
    return CharPoly(base, coeffs)


def kernel(M: Matrix) -> list:
    return M.kernel()


def jacobian(gens, variables=None) -> Matrix:
    gens = list(gens)
    ring = gens[0].ring
    variables = list(variables) if variables is not None else list(ring.vars)
    return Matrix(ring, [[g.diff(v) for v in variables] for g in gens])


def jacobian_rank_at(gens, point) -> tuple:
    """(rank of the Jacobian at ``point``, number of variables minus that rank)."""
    gens = [g for g in gens]
    if not gens:
        raise ValueError("no generators")
    ring = gens[0].ring
    for g in gens:
        if g.eval(point):
            raise PointNotOnVarietyError(f"{g} does not vanish at the point")
    J = jacobian(gens)
    rank = J.eval(point).rank()
    return rank, ring.nvars - rank
