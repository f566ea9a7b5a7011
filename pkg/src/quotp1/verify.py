"""Re-verification of the concrete claims about charts, ideals and supports.

Each claim has a stable id (AC1..AC11), a short anchor describing what it
reproduces, and a time budget. ``run_claims`` evaluates them, possibly in
parallel (capped by the QUOT_THREADS environment variable), and returns the
results ordered by id.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field

from .gb import Ideal, ideal_equal, ideal_member, intersect, krull_dim, radical_member, saturate
from .matrix import Matrix, char_poly, mat_pow
from .poly import GF, QQ, parse_poly
from .quot import (
    ChartIndex,
    CMatrix,
    CoordinateFrame,
    annihilates,
    cayley_hamilton_check,
    cayley_hamilton_symbolic,
    change_frame,
    chart_ideal,
    chart_ring,
    component_at,
    detect_chart,
    expand_point,
    fiber_decompose,
    frame_form,
    generic_p_matrix,
    hilb_support,
    QuotPoint,
    multiplicity_profile,
    p_matrix_at,
    random_chart,
    random_invertible,
    random_point,
    random_split_point,
    reduced_chart_equations,
    tangent_report,
)
from .quot.forms import BinaryForm

# The four generators of the t = 2 fat-point ideal on chart [1,1], as published
# (the two middle ones are (w_1_1 + w_2_2)*w_1_2 and (w_1_1 + w_2_2)*w_2_1 expanded).
CHART_11_GENERATORS = (
    "w_1_1^2 + w_1_2*w_2_1",
    "w_1_1*w_1_2 + w_2_2*w_1_2",
    "w_1_1*w_2_1 + w_2_2*w_2_1",
    "w_2_1*w_1_2 + w_2_2^2",
)


@dataclass
class ClaimResult:
    id: str
    anchor: str
    status: str
    elapsed: float
    budget: float
    details: list = dc_field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "status": self.status,
            "elapsed": round(self.elapsed, 3),
            "budget": self.budget,
            "details": list(self.details),
        }


@dataclass
class VerificationReport:
    max_d: int
    field: str
    claims: list

    @property
    def failed(self) -> list:
        return [c for c in self.claims if c.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failed

    def to_json(self) -> dict:
        return {
            "max_d": self.max_d,
            "field": self.field,
            "passed": sum(c.status == "pass" for c in self.claims),
            "failed": len(self.failed),
            "skipped": sum(c.status == "skipped" for c in self.claims),
            "claims": [c.to_json() for c in self.claims],
        }

    def summary(self) -> str:
        lines = []
        for c in self.claims:
            lines.append(f"{c.id:<5} {c.status:<8} {c.elapsed:7.2f}s  {c.anchor}")
            if c.status == "fail":
                lines.extend(f"      ! {msg}" for msg in c.details if msg.startswith("FAIL"))
        n = len(self.claims)
        lines.append(f"{n - len(self.failed)}/{n} claims without failure (max_d={self.max_d}, field={self.field})")
        return "\n".join(lines)


class _Checks:
    """Collects labelled boolean checks for one claim."""

    def __init__(self):
        self.details = []
        self.ok = True

    def __call__(self, label, ok):
        ok = bool(ok)
        self.ok &= ok
        self.details.append(("ok   " if ok else "FAIL ") + label)
        return ok

    def note(self, text):
        self.details.append("note " + text)


def _zero_point(ring):
    return {v: ring.field.zero for v in ring.vars}


# -- claims --------------------------------------------------------------------

def _ac1(ctx, check):
    chart = ChartIndex(2, 2, (1, 1))
    I = chart_ideal(chart, field=ctx.field)
    ref = [parse_poly(s, I.ring) for s in CHART_11_GENERATORS]
    check("generators match the published list in order", list(I.gens) == ref)
    check("ideal_equal with the published list", ideal_equal(I, Ideal(ref, I.ring)))


def _ac2(ctx, check):
    chart = ChartIndex(2, 2, (1, 1))
    I = chart_ideal(chart, field=ctx.field)
    R = I.ring
    w11, w12, w21, w22 = (R.var(v) for v in R.vars)
    cone = Ideal([w11 + w22, w11 * w22 - w12 * w21], R)
    emb = Ideal([w12, w21, w11 ** 2, w22 ** 2], R)
    check("intersect((trace, det), (w12, w21, w11^2, w22^2)) = I", ideal_equal(intersect(cone, emb), I))
    m = Ideal([R.var(v) for v in R.vars], R)
    check("saturate(I, maximal ideal of 0) = (trace, det)", ideal_equal(saturate(I, m), cone))
    check("component_at(I, origin) = embedded", component_at(I, _zero_point(R)) == "embedded")


def _ac3(ctx, check):
    for t in range(2, min(5, ctx.max_d) + 1):
        for r in (2, 3):
            I = chart_ideal(ChartIndex(t, r, (t,)), field=ctx.field)
            expected = tuple(I.ring.var(f"w_{h}_1") for h in range(1, t + 1))
            gb = I.groebner_basis()
            check(f"t={t} r={r}: reduced GB = w_1_1..w_{t}_1", sorted(map(str, gb)) == sorted(map(str, expected)))
    if ctx.max_d < 5:
        check.note(f"t > {ctx.max_d} not run")


def _ac4_one(t, field, check):
    J = chart_ideal(ChartIndex(t, 2, (t - 1, 1)), field=field)
    R = J.ring
    f = R.var(f"w_{t - 1}_1") + R.var(f"w_{t}_2")
    check(f"t={t} over {field}: trace in radical", radical_member(f, J))
    check(f"t={t} over {field}: trace not in ideal", not ideal_member(f, J))


def _ac4(ctx, check):
    for t in range(2, min(4, ctx.max_d) + 1):
        if t == 4 and ctx.field is QQ:
            _ac4_one(t, GF(32003), check)
        _ac4_one(t, ctx.field, check)


def _ac5(ctx, check):
    for t, r in ((2, 2), (2, 3), (3, 3)):
        if t > ctx.max_d:
            continue
        I = chart_ideal(ChartIndex(t, r, (1,) * t), field=ctx.field)
        check(f"chart [1]*{t}, r={r}: krull_dim = {t * (r - 1)}", krull_dim(I) == t * (r - 1))
    for t in (2, 3):
        if t > ctx.max_d:
            continue
        for r in (2, 3):
            I = reduced_chart_equations(ChartIndex(t, r, (t - 1, 1)), field=ctx.field)
            check(f"reduced [{t - 1},1], r={r}: krull_dim = {t * (r - 1)}", krull_dim(I) == t * (r - 1))


def _ac6(ctx, check):
    for t in range(2, min(4, ctx.max_d) + 1):
        I = reduced_chart_equations(ChartIndex(t, 2, (t - 1, 1)), field=ctx.field)
        rep = tangent_report(I, _zero_point(I.ring))
        check(f"t={t}: jacobian rank {rep.jacobian_rank} = {t - 1}", rep.jacobian_rank == t - 1)
        check(f"t={t}: verdict singular", rep.verdict == "singular")
    I = chart_ideal(ChartIndex(2, 2, (1, 1)), field=ctx.field)
    pt = _zero_point(I.ring)
    pt["w_1_2"] = ctx.field.one
    check("chart [1,1] at (0,1,0,0): smooth", tangent_report(I, pt).verdict == "smooth")


def _ac7(ctx, check):
    chart = ChartIndex(2, 2, (1, 1))
    P = generic_p_matrix(chart, ctx.field)
    R = P.domain
    cone = Ideal([P.trace(), P.det()], R)
    entries = chart_ideal(chart, field=ctx.field)
    check("entries of P^2 in the radical of (trace, det)",
          all(radical_member(e, cone) for e in mat_pow(P, 2).entries() if e))
    check("trace and det in the radical of the entries", all(radical_member(g, entries) for g in cone.gens))


def _ac8(ctx, check):
    rng = ctx.rng("AC8")
    for d in range(2, min(4, ctx.max_d) + 1):
        for r in (2, 3, 4):
            bad = 0
            for _ in range(200):
                if not cayley_hamilton_check(random_point(random_chart(d, r, rng), rng, ctx.field)):
                    bad += 1
            check(f"d={d} r={r}: 200 random points", bad == 0)
    check("symbolic check on chart [1,1], d=2", cayley_hamilton_symbolic(ChartIndex(2, 2, (1, 1))))


def _ac9(ctx, check):
    rng = ctx.rng("AC9")
    f = ctx.field
    ident2 = ((f.one, f.zero), (f.zero, f.one))
    counts = {"basis": 0, "shift": 0, "swap": 0}
    bad = {"basis": 0, "shift": 0, "swap": 0}
    for _ in range(100):
        d = rng.randint(2, min(4, ctx.max_d))
        r = rng.randint(2, 3)
        pt = random_point(random_chart(d, r, rng), rng, f)
        h = hilb_support(pt)
        G = random_invertible(r, rng, f)
        C = expand_point(pt).relative(CoordinateFrame(ident2, G.rows, f)).to_standard()
        moved = detect_chart(C)[3]
        counts["basis"] += 1
        bad["basis"] += hilb_support(moved) != h
        identr = tuple(tuple(f.one if i == j else f.zero for j in range(r)) for i in range(r))
        c = f(rng.choice((1, -1, 2, -2, 3)))
        shifted = change_frame(pt, CoordinateFrame(((f.one, f.zero), (c, f.one)), identr, f))
        counts["shift"] += 1
        bad["shift"] += (
            frame_form(shifted) != frame_form(pt).substitute(((f.one, f.zero), (-c, f.one)))
            or char_poly(p_matrix_at(shifted)).coeffs != char_poly(p_matrix_at(pt) + Matrix.identity(d, f).scale(c)).coeffs
            or hilb_support(shifted) != h
        )
        if p_matrix_at(pt).det():
            swapped = change_frame(pt, CoordinateFrame(((f.zero, f.one), (f.one, f.zero)), identr, f))
            counts["swap"] += 1
            bad["swap"] += frame_form(swapped) != frame_form(pt).reversed() or hilb_support(swapped) != h
    check(f"random basis change + re-detection ({counts['basis']} points)", bad["basis"] == 0)
    check(f"frame y -> y + c x ({counts['shift']} points)", bad["shift"] == 0)
    check(f"frame swap with P invertible ({counts['swap']} points)", bad["swap"] == 0 and counts["swap"] > 0)


def _ac10(ctx, check):
    rng = ctx.rng("AC10")
    for d in (2, 3):
        if d > ctx.max_d:
            continue
        for r in (2, 3):
            bad = 0
            for _ in range(10):
                pt = random_split_point(d, r, rng, field=ctx.field)
                comps = fiber_decompose(pt)
                ok = len(comps) == d and all(c.multiplicity == 1 for c in comps)
                prod = comps[0].support_form()
                for c in comps[1:]:
                    prod = prod * c.support_form()
                ok = ok and prod == hilb_support(pt)
                for c in comps:
                    q = c.point
                    ok = ok and q.d == 1 and q.chart.parts == (1,) and hilb_support(q) == c.form
                    ok = ok and [str(g) for g in chart_ideal(q.chart, field=ctx.field).groebner_basis()] == ["w_1_1"]
                    ok = ok and len(q.params) - 1 == r - 1
                bad += not ok
            check(f"d={d} r={r}: 10 split points decompose into Quot^1 points", bad == 0)


def _ac11(ctx, check):
    f = ctx.field
    C = CMatrix.from_rows([[1, 0, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0]], 2, 2, f)
    chart, frame, _, pt = detect_chart(C)
    check("chart [1,1] detected", chart.parts == (1, 1))
    check("P = 0", p_matrix_at(pt).is_zero())
    h = hilb_support(pt)
    check("Hilb-support y^2", str(h) == "y^2" and h.d == 2)
    check("y annihilates the module", annihilates(pt, BinaryForm([f.one, f.zero], f)))
    prof = multiplicity_profile(pt)
    check("profile reports algebraic 2, corank 2, not flagged",
          [(e.algebraic, e.corank, e.flagged) for e in prof] == [(2, 2, False)])
    ring = chart_ring(chart, field=f)
    jordan = QuotPoint(chart, {v: f.zero for v in ring.vars} | {"w_1_2": f.one}, None, f)
    prof = multiplicity_profile(jordan)
    check("Jordan block flagged: algebraic 2, corank 1",
          [(e.algebraic, e.corank, e.flagged) for e in prof] == [(2, 1, True)])


@dataclass(frozen=True)
class Claim:
    id: str
    anchor: str
    budget: float
    run: object


CLAIMS = (
    Claim("AC1", "chart [1,1], t=2: generators of the fat-point ideal", 1.0, _ac1),
    Claim("AC2", "chart [1,1], t=2: cone plus embedded point at the origin", 5.0, _ac2),
    Claim("AC3", "chart [t] is a coordinate subspace (ideal of w_{.,1})", 1.0, _ac3),
    Claim("AC4", "chart [t-1,1]: trace in the radical but not the ideal", 120.0, _ac4),
    Claim("AC5", "dimension t(r-1) of the fat-point chart", 60.0, _ac5),
    Claim("AC6", "singular point: Jacobian rank t-1 of the reduced equations", 10.0, _ac6),
    Claim("AC7", "null cone: entries of P^2 and (trace, det) share a radical", 5.0, _ac7),
    Claim("AC8", "Cayley-Hamilton kills every block of the C-matrix", 30.0, _ac8),
    Claim("AC9", "Hilb-support depends only on the module", 30.0, _ac9),
    Claim("AC10", "fibers over distinct points are products of Quot^1", 10.0, _ac10),
    Claim("AC11", "basis x^2 e1, x^2 e2: support y^2, annihilator contains y", 1.0, _ac11),
)

CLAIM_IDS = tuple(c.id for c in CLAIMS)


class _Context:
    def __init__(self, max_d, field, seed):
        self.max_d = max_d
        self.field = field
        self.seed = seed

    def rng(self, tag):
        return random.Random(f"{self.seed}:{tag}")


def run_claim(claim: Claim, max_d=4, field=QQ, seed=0) -> ClaimResult:
    ctx = _Context(max_d, field, seed)
    check = _Checks()
    start = time.perf_counter()
    try:
        claim.run(ctx, check)
    except Exception as exc:  # a crash is a failed claim, not a crashed report
        check(f"raised {type(exc).__name__}: {exc}", False)
    elapsed = time.perf_counter() - start
    if elapsed > claim.budget:
        check(f"elapsed {elapsed:.2f}s within budget {claim.budget}s", False)
    return ClaimResult(claim.id, claim.anchor, "pass" if check.ok else "fail", elapsed, claim.budget, check.details)


def thread_count() -> int:
    try:
        n = int(os.environ.get("QUOT_THREADS", "1"))
    except ValueError:
        n = 1
    return max(1, n)


def run_claims(max_d=4, field=QQ, ids=None, seed=0, threads=None) -> VerificationReport:
    if max_d < 2:
        raise ValueError("max_d must be at least 2")
    wanted = set(ids) if ids else None
    todo = [c for c in CLAIMS if wanted is None or c.id in wanted]
    threads = thread_count() if threads is None else threads
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda c: run_claim(c, max_d, field, seed), todo))
    else:
        results = [run_claim(c, max_d, field, seed) for c in todo]
    skipped = [
        ClaimResult(c.id, c.anchor, "skipped", 0.0, c.budget, ["note not selected"])
        for c in CLAIMS if c not in todo
    ]
    order = {cid: k for k, cid in enumerate(CLAIM_IDS)}
    claims = sorted(results + skipped, key=lambda c: order[c.id])
    return VerificationReport(max_d, field.spec(), claims)
