"""Command-line front end: ``quot <command> [flags]``.

Exit status: 0 on success, 1 when a verification fails or a requested
decomposition does not exist over the base field, 2 on usage errors
(bad flags, malformed files, invalid charts, points off the variety).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .errors import NonSplitCharPolyError, QuotError
from .gb import Ideal
from .matrix import char_poly
from .poly import QQ, field_from_spec
from .poly.ring import make_ring
from .quot import (
    ChartIndex,
    CMatrix,
    QuotPoint,
    chart_char_poly,
    chart_ideal,
    component_at,
    detect_chart,
    expand_point,
    fiber_decompose,
    hilb_support,
    multiplicity_profile,
    p_matrix_at,
    pluecker_coords,
    reduced_chart_equations,
    tangent_report,
    xi_chart_map,
)
from .verify import run_claims


class UsageError(Exception):
    pass


def _emit(args, payload, text):
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=False) + "\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _field(args, default=QQ):
    if args.field is None:
        return default
    try:
        return field_from_spec(args.field)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _chart(args) -> ChartIndex:
    if args.degree is None or args.rank is None or args.chart is None:
        raise UsageError("this command needs -d/--degree, -r/--rank and --chart")
    return ChartIndex.parse(args.chart, args.degree, args.rank)


def _load_json(path, what):
    if path is None:
        raise UsageError(f"this command needs --{what} <path>")
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from None


def _load_point(args) -> QuotPoint:
    data = _load_json(args.point, "point")
    field = _field(args, None)
    try:
        return QuotPoint.from_json(data, field)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed point file: missing or bad {exc}") from None


def _load_cmatrix(args) -> CMatrix:
    data = _load_json(args.matrix, "matrix")
    try:
        return CMatrix.from_json(data, _field(args, None))
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed matrix file: missing or bad {exc}") from None


def _parse_at(text, ring) -> dict:
    """``w_1_1=0,w_1_2=1``; variables not mentioned are set to 0."""
    point = {v: ring.field.zero for v in ring.vars}
    if text:
        for item in text.split(","):
            if not item.strip():
                continue
            if "=" not in item:
                raise UsageError(f"--at entries look like name=value, got {item.strip()!r}")
            name, value = (s.strip() for s in item.split("=", 1))
            if name not in ring.index:
                raise UsageError(f"--at names unknown variable {name!r}")
            try:
                point[name] = ring.field.parse(value)
            except (ValueError, ZeroDivisionError):
                raise UsageError(f"bad value {value!r} for {name}") from None
    return point


def _ideal_for(args) -> Ideal:
    if args.ideal is not None:
        data = _load_json(args.ideal, "ideal")
        try:
            I = Ideal.from_json(data)
        except (KeyError, TypeError) as exc:
            raise UsageError(f"malformed ideal file: missing or bad {exc}") from None
        if args.field is not None:
            ring = make_ring(I.ring.vars, _field(args), I.ring.order)
            I = Ideal.parse([str(g) for g in I.gens], ring)
        return I
    chart = _chart(args)
    field = _field(args)
    if args.equations == "reduced":
        return reduced_chart_equations(chart, field, args.order)
    return chart_ideal(chart, args.fat, field, args.order)


def _chart_json(chart):
    return {"d": chart.d, "r": chart.r, "chart": list(chart.parts)}


# -- commands ------------------------------------------------------------------

def cmd_chart_ideal(args):
    chart = _chart(args)
    I = chart_ideal(chart, args.fat, _field(args), args.order)
    gens = I.groebner_basis() if args.reduced else I.gens
    payload = _chart_json(chart) | {"t": args.fat or chart.d, "reduced": args.reduced, "ideal": I.to_json(args.reduced)}
    _emit(args, payload, "\n".join(map(str, gens)))
    return 0


def cmd_reduced_eqs(args):
    chart = _chart(args)
    I = reduced_chart_equations(chart, _field(args), args.order)
    gens = I.groebner_basis() if args.reduced else I.gens
    payload = _chart_json(chart) | {"reduced": args.reduced, "ideal": I.to_json(args.reduced)}
    _emit(args, payload, "\n".join(map(str, gens)))
    return 0


def cmd_char_poly(args):
    if args.point is not None:
        pt = _load_point(args)
        cp = char_poly(p_matrix_at(pt))
        fmt = pt.field.format
        payload = {"point": pt.to_json(), "coeffs": [fmt(a) for a in cp.coeffs], "poly": str(cp)}
        _emit(args, payload, str(cp))
        return 0
    chart = _chart(args)
    cp = chart_char_poly(chart, _field(args), args.order)
    payload = _chart_json(chart) | {"coeffs": [str(a) for a in cp.coeffs], "poly": str(cp)}
    _emit(args, payload, str(cp))
    return 0


def cmd_hilb_support(args):
    pt = _load_point(args)
    form = hilb_support(pt)
    _emit(args, form.to_json(), str(form))
    return 0


def cmd_xi_map(args):
    chart = _chart(args)
    coords = xi_chart_map(chart, _field(args), args.order)
    payload = _chart_json(chart) | {"coords": [str(c) for c in coords]}
    _emit(args, payload, "\n".join(map(str, coords)))
    return 0


def _point_text(pt: QuotPoint) -> str:
    fmt = pt.field.format
    lines = [f"chart {pt.chart}"]
    if not pt.frame.is_identity():
        lines.append("gl2 " + json.dumps(pt.frame.to_json()["gl2"]))
        lines.append("glr " + json.dumps(pt.frame.to_json()["glr"]))
    lines.extend(f"{k} = {fmt(v)}" for k, v in pt.params.items())
    return "\n".join(lines)


def cmd_detect_chart(args):
    C = _load_cmatrix(args)
    pt = detect_chart(C)[3]
    _emit(args, pt.to_json(), _point_text(pt))
    return 0


def cmd_pluecker(args):
    if args.point is not None:
        C = expand_point(_load_point(args))
    else:
        C = _load_cmatrix(args)
    pv = pluecker_coords(C)
    fmt = C.field.format
    text = [f"{len(pv)} coordinates"]
    text.extend(
        "[" + ",".join(str(j + 1) for j in s) + "] " + fmt(v) for s, v in zip(pv.subsets, pv.values) if v
    )
    _emit(args, pv.to_json(), "\n".join(text))
    return 0


def cmd_fiber(args):
    pt = _load_point(args)
    try:
        comps = fiber_decompose(pt)
        profile = multiplicity_profile(pt)
    except NonSplitCharPolyError as exc:
        sys.stderr.write(f"quot {args.command}: {exc}\n")
        return 1
    payload = {"components": [c.to_json() for c in comps], "profile": [e.to_json() for e in profile]}
    lines = []
    for c, e in zip(comps, profile):
        flag = "  (flagged)" if e.flagged else ""
        lines.append(f"{c.form}  multiplicity {c.multiplicity}  corank {e.corank}{flag}")
        lines.extend("  " + line for line in _point_text(c.point).splitlines())
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_tangent(args):
    I = _ideal_for(args)
    point = _parse_at(args.at, I.ring)
    rep = tangent_report(I, point)
    _emit(args, rep.to_json(), str(rep))
    return 0


def cmd_component(args):
    I = _ideal_for(args)
    point = _parse_at(args.at, I.ring)
    kind = component_at(I, point)
    fmt = I.ring.field.format
    _emit(args, {"point": {k: fmt(v) for k, v in point.items()}, "component": kind}, kind)
    return 0


def cmd_verify_paper(args):
    if args.max_d < 2:
        raise UsageError("--max-d must be at least 2")
    report = run_claims(args.max_d, _field(args))
    _emit(args, report.to_json(), report.summary())
    return 0 if report.ok else 1


COMMANDS = {
    "chart-ideal": (cmd_chart_ideal, "generators of the fat-point ideal on a chart"),
    "reduced-eqs": (cmd_reduced_eqs, "non-leading coefficients of the generic characteristic polynomial"),
    "char-poly": (cmd_char_poly, "characteristic polynomial of P on a chart or at a point"),
    "hilb-support": (cmd_hilb_support, "the binary form xi(M) of a point"),
    "xi-map": (cmd_xi_map, "coordinates of xi on a chart"),
    "detect-chart": (cmd_detect_chart, "chart, frame and parameters of a C-matrix"),
    "pluecker": (cmd_pluecker, "maximal minors of a C-matrix"),
    "fiber": (cmd_fiber, "decomposition along the roots of the Hilb-support"),
    "tangent": (cmd_tangent, "Jacobian rank, tangent dimension and verdict at a point"),
    "component": (cmd_component, "whether a point carries an isolated or embedded component"),
    "verify-paper": (cmd_verify_paper, "re-run the acceptance claims"),
}


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-d", "--degree", type=_positive)
    common.add_argument("-r", "--rank", type=_positive)
    common.add_argument("--chart", help="chart parts, e.g. 2,1")
    common.add_argument("-t", "--fat", type=_positive, help="fat-point order (must equal d)")
    common.add_argument("--order", choices=("grevlex", "lex"), default="grevlex")
    common.add_argument("--field", help="q (default) or fp:<prime>")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--point", help="QuotPoint JSON file")
    common.add_argument("--matrix", help="C-matrix JSON file")
    common.add_argument("--ideal", help="ideal JSON file")
    common.add_argument("--at", help='point as "w_1_1=0,w_1_2=1"; missing variables are 0')
    common.add_argument("--equations", choices=("fat", "reduced"), default="fat",
                        help="which chart equations tangent/component use without --ideal")
    common.add_argument("--reduced", action="store_true", help="print the reduced Groebner basis")
    common.add_argument("--max-d", type=int, default=4)

    parser = argparse.ArgumentParser(prog="quot", description="Local charts of Quot^d(O^r) on P^1.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command", required=True)
    for name, (fn, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        p.set_defaults(func=fn)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"quot {args.command}: {exc}\n")
        return 2
    except (QuotError, ValueError, ZeroDivisionError) as exc:
        sys.stderr.write(f"quot {args.command}: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
