"""Points of a chart, their C-matrices, coordinate frames and chart detection.

Conventions. A frame is a pair of invertible matrices. ``gl2`` has rows
(a, b), (c, e) meaning l = a*x + b*y and l' = c*x + e*y. ``glr`` has row m
expressing the new generator eps_m = sum_n glr[m][n] * e_n. In a frame, column
(m, j) of a C-matrix (block m, 0 <= j <= d) is the image of
l^(d-j) * l'^j * eps_m, and P is multiplication by l'/l.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field as dc_field

from ..errors import (
    DimensionMismatchError,
    InvalidChartError,
    NoFrameFoundError,
    RankDeficientError,
)
from ..matrix import Matrix
from ..poly.field import QQ, Field, field_from_spec
from .charts import ChartIndex, chart_vars, partitions, var_name
from .forms import monomial_in_frame


def _identity(n, field):
    return tuple(tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class CoordinateFrame:
    gl2: tuple
    glr: tuple
    field: Field = QQ

    def __post_init__(self):
        f = self.field
        gl2 = tuple(tuple(f(a) for a in row) for row in self.gl2)
        glr = tuple(tuple(f(a) for a in row) for row in self.glr)
        if len(gl2) != 2 or any(len(r) != 2 for r in gl2):
            raise DimensionMismatchError("gl2 must be 2 x 2")
        n = len(glr)
        if any(len(r) != n for r in glr):
            raise DimensionMismatchError("glr must be square")
        object.__setattr__(self, "gl2", gl2)
        object.__setattr__(self, "glr", glr)
        if not Matrix(f, gl2).det() or (n and not Matrix(f, glr).det()):
            raise InvalidChartError("frame matrices must be invertible")

    @classmethod
    def identity(cls, r, field=QQ) -> "CoordinateFrame":
        return cls(_identity(2, field), _identity(r, field), field)

    @property
    def r(self) -> int:
        return len(self.glr)

    def is_identity(self) -> bool:
        return self.gl2 == _identity(2, self.field) and self.glr == _identity(self.r, self.field)

    def compose(self, rel: "CoordinateFrame") -> "CoordinateFrame":
        """The frame whose forms and generators are ``rel``'s, read in this frame."""
        f = self.field
        gl2 = (Matrix(f, rel.gl2) * Matrix(f, self.gl2)).rows
        glr = (Matrix(f, rel.glr) * Matrix(f, self.glr)).rows
        return CoordinateFrame(gl2, glr, f)

    def to_json(self) -> dict:
        fmt = self.field.format
        return {"gl2": [[fmt(a) for a in r] for r in self.gl2], "glr": [[fmt(a) for a in r] for r in self.glr]}

    @classmethod
    def from_json(cls, data, r, field=QQ) -> "CoordinateFrame":
        if data is None:
            return cls.identity(r, field)
        gl2 = data.get("gl2") or _identity(2, field)
        glr = data.get("glr") or _identity(r, field)
        parse = lambda a: field.parse(str(a))
        return cls([[parse(a) for a in row] for row in gl2], [[parse(a) for a in row] for row in glr], field)


def frame_matrix(frame: CoordinateFrame, d: int) -> Matrix:
    """K with C_new = C_old * K, for C_old written in the frame's parent coordinates."""
    f = frame.field
    r = frame.r
    n = (d + 1) * r
    sym = [monomial_in_frame(frame.gl2, d - j, j, f) for j in range(d + 1)]
    rows = [[f.zero] * n for _ in range(n)]
    for m in range(r):
        for nn in range(r):
            g = frame.glr[m][nn]
            if not g:
                continue
            for j in range(d + 1):
                col = m * (d + 1) + j
                coeffs = sym[j]  # indexed by the power of x, i.e. d - k
                for k in range(d + 1):
                    v = coeffs[d - k]
                    if v:
                        rows[nn * (d + 1) + k][col] = f(g * v)
    return Matrix(f, rows)


class CMatrix:
    """A d x (d+1)r matrix presenting the degree-d piece of a quotient module.

    ``frame`` records the coordinates in which the columns are written.
    """

    __slots__ = ("matrix", "d", "r", "frame")

    def __init__(self, matrix: Matrix, d: int, r: int, frame: CoordinateFrame | None = None):
        if matrix.shape != (d, (d + 1) * r):
            raise DimensionMismatchError(f"C-matrix must be {d} x {(d + 1) * r}, got {matrix.shape}")
        self.matrix = matrix
        self.d = d
        self.r = r
        self.frame = frame or CoordinateFrame.identity(r, matrix.domain)

    @property
    def field(self):
        return self.matrix.domain

    @classmethod
    def from_rows(cls, rows, d, r, field=QQ, frame=None) -> "CMatrix":
        return cls(Matrix(field, rows), d, r, frame)

    def column(self, m: int, j: int) -> tuple:
        """B_{m+1, j+1}: column j of block m (both 0-based)."""
        return self.matrix.column(m * (self.d + 1) + j)

    def block(self, m: int) -> list:
        return [self.column(m, j) for j in range(self.d + 1)]

    def relative(self, rel: CoordinateFrame) -> "CMatrix":
        """Rewrite the columns in a frame given relative to the current one."""
        K = frame_matrix(rel, self.d)
        return CMatrix(self.matrix * K, self.d, self.r, self.frame.compose(rel))

    def to_standard(self) -> "CMatrix":
        if self.frame.is_identity():
            return self
        K = frame_matrix(self.frame, self.d)
        return CMatrix(self.matrix * K.inverse(), self.d, self.r, CoordinateFrame.identity(self.r, self.field))

    def normalized(self, columns) -> "CMatrix":
        """Change the row basis so that ``columns`` form the identity."""
        sub = self.matrix.select_columns(columns)
        if not sub.det():
            raise InvalidChartError("chart minor vanishes")
        return CMatrix(sub.solve(self.matrix), self.d, self.r, self.frame)

    def rank(self) -> int:
        return self.matrix.rank()

    def __eq__(self, other):
        if not isinstance(other, CMatrix):
            return NotImplemented
        return self.matrix == other.matrix and self.frame == other.frame

    def __str__(self):
        return str(self.matrix)

    def to_json(self) -> dict:
        out = self.matrix.to_json()
        out.update({"d": self.d, "r": self.r, "frame": self.frame.to_json()})
        if self.field.p:
            out["field"] = self.field.spec()
        return out

    @classmethod
    def from_json(cls, data, field=None) -> "CMatrix":
        if isinstance(data, str):
            data = json.loads(data)
        field = field or field_from_spec(data.get("field", "Q"))
        d, r = int(data["d"]), int(data["r"])
        frame = CoordinateFrame.from_json(data.get("frame"), r, field)
        return cls(Matrix.from_json(data, field), d, r, frame)


@dataclass(frozen=True)
class QuotPoint:
    """A k-point of a chart: parameter values w_{h,m} plus the frame used."""

    chart: ChartIndex
    params: dict = dc_field(hash=False)
    frame: CoordinateFrame = None
    field: Field = QQ

    def __post_init__(self):
        f = self.field
        names = chart_vars(self.chart.d, self.chart.r)
        params = {}
        for k, v in dict(self.params).items():
            if k not in names:
                raise InvalidChartError(f"unknown parameter {k!r} for chart {self.chart}")
            params[k] = f(v) if not isinstance(v, str) else f.parse(v)
        missing = [n for n in names if n not in params]
        if missing:
            raise InvalidChartError(f"missing parameters: {', '.join(missing)}")
        object.__setattr__(self, "params", {n: params[n] for n in names})
        if self.frame is None:
            object.__setattr__(self, "frame", CoordinateFrame.identity(self.chart.r, f))
        elif self.frame.r != self.chart.r:
            raise DimensionMismatchError("frame rank does not match the chart")

    @property
    def d(self) -> int:
        return self.chart.d

    @property
    def r(self) -> int:
        return self.chart.r

    def param(self, h: int, m: int):
        return self.params[var_name(h, m)]

    def param_column(self, m: int) -> tuple:
        """Values of w_{1..d, m} (m 1-based)."""
        return tuple(self.param(h, m) for h in range(1, self.d + 1))

    def __eq__(self, other):
        if not isinstance(other, QuotPoint):
            return NotImplemented
        return (self.chart, self.frame, self.field) == (other.chart, other.frame, other.field) and self.params == other.params

    def __hash__(self):
        return hash((self.chart, tuple(self.params.values())))

    def to_json(self) -> dict:
        fmt = self.field.format
        out = {
            "d": self.d,
            "r": self.r,
            "chart": list(self.chart.parts),
            "frame": self.frame.to_json(),
            "params": {k: fmt(v) for k, v in self.params.items()},
        }
        if self.field.p:
            out["field"] = self.field.spec()
        return out

    @classmethod
    def from_json(cls, data, field=None) -> "QuotPoint":
        if isinstance(data, str):
            data = json.loads(data)
        field = field or field_from_spec(data.get("field", "Q"))
        chart = ChartIndex(int(data["d"]), int(data["r"]), tuple(data["chart"]))
        frame = CoordinateFrame.from_json(data.get("frame"), chart.r, field)
        params = {k: field.parse(str(v)) for k, v in data["params"].items()}
        return cls(chart, params, frame, field)


def p_matrix_at(pt: QuotPoint) -> Matrix:
    """The chart's generic P evaluated at the point's parameters."""
    f = pt.field
    d = pt.d
    cols = []
    for m, (i, off) in enumerate(zip(pt.chart.parts, pt.chart.offsets())):
        for j in range(1, i):
            cols.append([f.one if row == off + j else f.zero for row in range(d)])
        cols.append(list(pt.param_column(m + 1)))
    return Matrix.from_columns(cols, f)


def expand_point(pt: QuotPoint) -> CMatrix:
    """The full C-matrix, each block grown from its first column by powers of P."""
    f = pt.field
    d, r = pt.d, pt.r
    P = p_matrix_at(pt)
    chart = pt.chart
    offsets = chart.offsets()
    columns = []
    for m in range(r):
        if m < chart.s:
            first = tuple(f.one if row == offsets[m] else f.zero for row in range(d))
        else:
            first = pt.param_column(m + 1)
        block = [first]
        for _ in range(d):
            block.append(P.apply(block[-1]))
        columns.extend(block)
    return CMatrix(Matrix.from_columns(columns, f), d, r, pt.frame)


def point_from_cmatrix(C: CMatrix, chart: ChartIndex, check=True) -> QuotPoint:
    """Read the chart parameters off C (normalizing its rows first).

    With ``check`` the column recursion B_{m,j} = P B_{m,j-1} is verified;
    failure means C does not present a module on this chart in C's frame.
    """
    if (chart.d, chart.r) != (C.d, C.r):
        raise DimensionMismatchError("chart does not match the C-matrix")
    N = C.normalized(chart.columns())
    params = {}
    for m in range(chart.r):
        col = N.matrix.column(chart.param_column(m))
        for h in range(chart.d):
            params[var_name(h + 1, m + 1)] = col[h]
    pt = QuotPoint(chart, params, N.frame, C.field)
    if check and expand_point(pt).matrix != N.matrix:
        raise InvalidChartError(f"C-matrix is not a module point of chart {chart} in this frame")
    return pt


def to_standard(pt: QuotPoint) -> CMatrix:
    return expand_point(pt).to_standard()


def change_frame(pt: QuotPoint, rel: CoordinateFrame, chart: ChartIndex | None = None) -> QuotPoint:
    """The same module seen in a frame given relative to the point's own frame."""
    C = expand_point(pt).relative(rel)
    if chart is not None:
        return point_from_cmatrix(C, chart)
    return detect_chart(C, gl2_candidates=[_identity(2, pt.field)])[3]


def _permutation_matrix(order, field):
    n = len(order)
    return tuple(tuple(field.one if order[m] == nn else field.zero for nn in range(n)) for m in range(n))


def default_gl2_candidates(d, field):
    """Identity, then l = x + c*y for c = 1, -1, 2, -2, ..., then the swap x <-> y.

    d + 1 shifts always include a form that misses the (at most d) support
    points, so multiplication by l is injective for one of them.
    """
    out = [_identity(2, field)]
    for k in range(1, d + 2):
        for c in (k, -k):
            out.append(((field.one, field(c)), (field.zero, field.one)))
    out.append(((field.zero, field.one), (field.one, field.zero)))
    return out


def _orderings(r, s):
    """Block orders whose first s entries vary; the rest stay increasing."""
    for head in itertools.permutations(range(r), s):
        rest = [m for m in range(r) if m not in head]
        yield tuple(head) + tuple(rest)


def detect_chart(C: CMatrix, gl2_candidates=None, permute=True):
    """Find a frame and the lex-largest chart containing the module presented by C.

    Frames are tried in the order of ``default_gl2_candidates`` (relative to
    C's own frame); within a frame, charts from lex-largest down, each with
    the reorderings of e_1..e_r. A candidate must have an invertible chart
    minor and satisfy the column recursion. Returns
    ``(chart, frame, normalized CMatrix, QuotPoint)``.
    """
    field = C.field
    d, r = C.d, C.r
    if C.rank() < d:
        raise RankDeficientError(f"C-matrix has rank {C.rank()} < d = {d}")
    if gl2_candidates is None:
        gl2_candidates = default_gl2_candidates(d, field)
    charts = partitions(d, r)
    ident_r = _identity(r, field)
    for gl2 in gl2_candidates:
        base = C.relative(CoordinateFrame(gl2, ident_r, field))
        for chart in charts:
            orders = _orderings(r, chart.s) if permute else [tuple(range(r))]
            for order in orders:
                cols = []
                for m, i in enumerate(chart.parts):
                    start = order[m] * (d + 1)
                    cols.extend(range(start, start + i))
                if not base.matrix.select_columns(cols).det():
                    continue
                if order == tuple(range(r)):
                    Cf = base
                else:
                    Cf = base.relative(CoordinateFrame(_identity(2, field), _permutation_matrix(order, field), field))
                try:
                    pt = point_from_cmatrix(Cf, chart)
                except InvalidChartError:
                    continue
                N = expand_point(pt)
                return chart, pt.frame, N, pt
    raise NoFrameFoundError("no candidate frame presents C on a chart")


@dataclass(frozen=True)
class PlueckerVector:
    """Maximal minors of a C-matrix; ``subsets`` are 0-based, in colex order."""

    subsets: tuple
    values: tuple
    field: Field = QQ

    def __post_init__(self):
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.subsets)})

    def __len__(self):
        return len(self.values)

    def at(self, columns):
        return self.values[self._index[tuple(sorted(columns))]]

    def nonzero(self) -> dict:
        return {s: v for s, v in zip(self.subsets, self.values) if v}

    def to_json(self) -> dict:
        fmt = self.field.format
        return {
            "count": len(self.values),
            "minors": [{"columns": [j + 1 for j in s], "value": fmt(v)} for s, v in zip(self.subsets, self.values)],
        }


def colex_subsets(n, k):
    return sorted(itertools.combinations(range(n), k), key=lambda s: s[::-1])


def pluecker_coords(C: CMatrix) -> PlueckerVector:
    M = C.matrix
    subsets = tuple(colex_subsets(M.ncols, C.d))
    values = tuple(M.select_columns(s).det() for s in subsets)
    return PlueckerVector(subsets, values, C.field)
