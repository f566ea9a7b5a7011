"""Tangent-space and embedded-component diagnostics at rational points."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import MissingVariableError
from ..gb.ideal import Ideal, ideal_equal, krull_dim, saturate
from ..matrix import jacobian_rank_at


def _full_point(I: Ideal, point) -> dict:
    ring = I.ring
    field = ring.field
    out = {}
    for k, v in point.items():
        name = ring.vars[k] if isinstance(k, int) else k
        if name not in ring.index:
            raise MissingVariableError(f"{name} is not a variable of {ring}")
        out[name] = field(v)
    missing = [v for v in ring.vars if v not in out]
    if missing:
        raise MissingVariableError(f"no value for {', '.join(missing)}")
    return {v: out[v] for v in ring.vars}


@dataclass(frozen=True)
class TangentReport:
    ideal: Ideal
    point: dict
    jacobian_rank: int
    tangent_dim: int
    krull_dim: int

    @property
    def verdict(self) -> str:
        return "singular" if self.tangent_dim > self.krull_dim else "smooth"

    def to_json(self) -> dict:
        fmt = self.ideal.ring.field.format
        return {
            "ideal": self.ideal.to_json(),
            "point": {k: fmt(v) for k, v in self.point.items()},
            "jacobian_rank": self.jacobian_rank,
            "tangent_dim": self.tangent_dim,
            "krull_dim": self.krull_dim,
            "verdict": self.verdict,
        }

    def __str__(self):
        return (
            f"jacobian rank {self.jacobian_rank}, tangent dim {self.tangent_dim}, "
            f"krull dim {self.krull_dim}: {self.verdict}"
        )


def tangent_report(I: Ideal, point) -> TangentReport:
    """Jacobian of the given generators at the point against dim V(I).

    The verdict compares the Zariski tangent space of the scheme cut out by
    the generators with the dimension of I, so it is only a smoothness test
    for the support when the generators define it.
    """
    pt = _full_point(I, point)
    rank, tdim = jacobian_rank_at(I.gens, pt)
    return TangentReport(I, pt, rank, tdim, krull_dim(I))


def component_at(I: Ideal, point) -> str:
    """'none', 'isolated' or 'embedded': what saturating by the point's ideal removes."""
    pt = _full_point(I, point)
    ring = I.ring
    m = Ideal([ring.var(v) - pt[v] for v in ring.vars], ring)
    S = saturate(I, m)
    if ideal_equal(S, I):
        return "none"
    on_rest = all(not g.eval(pt) for g in S.groebner_basis())
    return "embedded" if on_rest else "isolated"
