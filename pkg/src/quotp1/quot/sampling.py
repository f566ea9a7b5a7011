"""Random points and points built from an explicit action, for property checks."""

from __future__ import annotations

import random

from ..matrix import Matrix
from ..poly.field import QQ
from .charts import ChartIndex, chart_vars, partitions
from .points import CMatrix, CoordinateFrame, QuotPoint, detect_chart


def _scalar(rng, field, lo, hi):
    return field(rng.randint(lo, hi))


def random_point(chart: ChartIndex, rng: random.Random, field=QQ, lo=-5, hi=5) -> QuotPoint:
    """Uniform integer parameters in [lo, hi] on the given chart, identity frame."""
    params = {n: _scalar(rng, field, lo, hi) for n in chart_vars(chart.d, chart.r)}
    return QuotPoint(chart, params, None, field)


def random_chart(d: int, r: int, rng: random.Random) -> ChartIndex:
    return rng.choice(partitions(d, r))


def random_invertible(n: int, rng: random.Random, field=QQ, lo=-3, hi=3) -> Matrix:
    while True:
        M = Matrix(field, [[_scalar(rng, field, lo, hi) for _ in range(n)] for _ in range(n)])
        if M.det():
            return M


def point_from_action(P: Matrix, seeds, frame: CoordinateFrame | None = None) -> QuotPoint:
    """The point whose module has l'/l acting by P, generated by ``seeds``.

    Block m of the C-matrix is [h_m, P h_m, ..., P^d h_m]; the seeds must
    span k^d under P. The chart is found with ``detect_chart``.
    """
    field = P.domain
    d = P.shape[0]
    cols = []
    for h in seeds:
        h = tuple(field(a) for a in h)
        for _ in range(d + 1):
            cols.append(h)
            h = P.apply(h)
    C = CMatrix(Matrix.from_columns(cols, field), d, len(seeds), frame)
    return detect_chart(C)[3]


def random_split_point(d: int, r: int, rng: random.Random, eigenvalues=None, field=QQ) -> QuotPoint:
    """A point whose P is diagonalizable with the given (default: distinct) eigenvalues.

    P is conjugated by a random invertible matrix and the generators are
    random; a draw that fails to generate is retried.
    """
    if eigenvalues is None:
        eigenvalues = rng.sample(range(-6, 7), d)
    D = Matrix(field, [[field(eigenvalues[i]) if i == j else field.zero for j in range(d)] for i in range(d)])
    while True:
        S = random_invertible(d, rng, field)
        P = S * D * S.inverse()
        seeds = [[_scalar(rng, field, -3, 3) for _ in range(d)] for _ in range(r)]
        cols = []
        for h in seeds:
            h = tuple(h)
            for _ in range(d):
                cols.append(h)
                h = P.apply(h)
        if Matrix.from_columns(cols, field).rank() == d:
            return point_from_action(P, seeds)
