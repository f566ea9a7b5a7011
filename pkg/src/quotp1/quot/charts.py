"""Charts of Quot^d(O^r) on P^1 and their generic matrices and ideals."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..errors import InvalidChartError
from ..gb.ideal import Ideal
from ..matrix import Matrix, char_poly, mat_pow
from ..poly.field import QQ
from ..poly.ring import make_ring


def var_name(h: int, m: int) -> str:
    return f"w_{h}_{m}"


@dataclass(frozen=True)
class ChartIndex:
    """A chart ``[i_1, ..., i_s]`` of the Quot scheme of degree ``d`` and rank ``r``.

    The chart's identity columns are the first ``i_m`` columns of block ``m``.
    Column indices are 0-based throughout.
    """

    d: int
    r: int
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(i) for i in self.parts)
        object.__setattr__(self, "parts", parts)
        if self.d < 1:
            raise InvalidChartError(f"degree must be at least 1, got {self.d}")
        if self.r < 2:
            raise InvalidChartError(f"rank must be at least 2, got {self.r}")
        if not parts or any(i <= 0 for i in parts):
            raise InvalidChartError(f"chart parts must be positive: {list(parts)}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidChartError(f"chart parts must be weakly decreasing: {list(parts)}")
        if sum(parts) != self.d:
            raise InvalidChartError(f"chart parts {list(parts)} do not sum to d={self.d}")
        if len(parts) > min(self.d, self.r):
            raise InvalidChartError(f"chart {list(parts)} has more than min(d, r) parts")

    @classmethod
    def parse(cls, text, d, r) -> "ChartIndex":
        try:
            parts = tuple(int(t) for t in str(text).replace("[", "").replace("]", "").split(",") if t.strip())
        except ValueError:
            raise InvalidChartError(f"malformed chart {text!r}") from None
        return cls(d, r, parts)

    @property
    def s(self) -> int:
        return len(self.parts)

    @property
    def ncols(self) -> int:
        return (self.d + 1) * self.r

    def block_start(self, m: int) -> int:
        """First column of block ``m`` (0-based block index)."""
        return m * (self.d + 1)

    def offsets(self) -> list:
        """Row of the first identity column of each of the first ``s`` blocks."""
        out, acc = [], 0
        for i in self.parts:
            out.append(acc)
            acc += i
        return out

    def columns(self) -> tuple:
        """The chart's identity columns j_1 < ... < j_d."""
        cols = []
        for m, i in enumerate(self.parts):
            start = self.block_start(m)
            cols.extend(range(start, start + i))
        return tuple(cols)

    def param_column(self, m: int) -> int:
        """Column carrying the parameters w_{., m+1}."""
        if m < self.s:
            return self.block_start(m) + self.parts[m]
        return self.block_start(m)

    def variables(self) -> tuple:
        return chart_vars(self.d, self.r)

    def __str__(self):
        return "[" + ",".join(map(str, self.parts)) + "]"


def chart_vars(d: int, r: int) -> tuple:
    """w_1_1, w_1_2, ..., w_1_r, w_2_1, ...: row index first."""
    return tuple(var_name(h, m) for h in range(1, d + 1) for m in range(1, r + 1))


def chart_ring(chart_or_d, r=None, field=QQ, order="grevlex"):
    if isinstance(chart_or_d, ChartIndex):
        d, r = chart_or_d.d, chart_or_d.r
    else:
        d = chart_or_d
    return make_ring(chart_vars(d, r), field, order)


def partitions(d: int, r: int):
    """All charts of Quot^d(O^r), lex-largest first."""
    def rec(rest, cap, prefix):
        if rest == 0:
            yield tuple(prefix)
            return
        if len(prefix) == min(d, r):
            return
        for i in range(min(rest, cap), 0, -1):
            yield from rec(rest - i, i, prefix + [i])

    return [ChartIndex(d, r, p) for p in rec(d, d, [])]


def generic_p_matrix(chart: ChartIndex, field=QQ, order="grevlex") -> Matrix:
    """The d x d matrix of multiplication by y/x on the chart, with parameter columns."""
    ring = chart_ring(chart, field=field, order=order)
    d = chart.d
    zero, one = ring.zero, ring.one
    cols = []
    for m, (i, off) in enumerate(zip(chart.parts, chart.offsets())):
        for j in range(1, i):
            cols.append([one if row == off + j else zero for row in range(d)])
        cols.append([ring.var(var_name(h, m + 1)) for h in range(1, d + 1)])
    return Matrix.from_columns(cols, ring)


@lru_cache(maxsize=128)
def _chart_ideal(chart, t, field, order):
    P = generic_p_matrix(chart, field, order)
    gens, seen = [], set()
    for g in mat_pow(P, t).entries():
        if g and g not in seen:
            seen.add(g)
            gens.append(g)
    return Ideal(gens, P.domain)


def chart_ideal(chart: ChartIndex, t: int | None = None, field=QQ, order="grevlex") -> Ideal:
    """Ideal of the entries of P^t (row-major, zeros and repeats dropped).

    Only the full-degree fat point is supported: ``t`` must equal ``d``.
    """
    t = chart.d if t is None else t
    if t != chart.d:
        raise InvalidChartError(f"chart ideals need t = d (got t={t}, d={chart.d}); split supports with fiber_decompose")
    return _chart_ideal(chart, t, field, order)


def chart_char_poly(chart: ChartIndex, field=QQ, order="grevlex"):
    return char_poly(generic_p_matrix(chart, field, order))


def reduced_chart_equations(chart: ChartIndex, field=QQ, order="grevlex") -> Ideal:
    """The non-leading coefficients of the generic characteristic polynomial.

    Listed from the T^(d-1) coefficient down, each scaled to be monic.
    """
    cp = chart_char_poly(chart, field, order)
    ring = chart_ring(chart, field=field, order=order)
    gens = [a.monic() for a in reversed(cp.nonleading()) if a]
    return Ideal(gens, ring)


def xi_chart_map(chart: ChartIndex, field=QQ, order="grevlex") -> list:
    """Coefficients of x^d chi(y/x) ordered y^d, x*y^(d-1), ..., x^d."""
    cp = chart_char_poly(chart, field, order)
    return list(reversed(cp.coeffs))
