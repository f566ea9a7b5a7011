"""Compare the compiled and pure-Python term-list kernels.

Micro benchmarks call each backend's functions directly on the same inputs
(and check they agree); the end-to-end workloads run in subprocesses with
QUOTP1_PURE toggled, since the Groebner engine binds its backend at import.

    python3 benchmarks/bench_kernel.py [--repeat N] [--json]
"""

import argparse
import json
import os
import random
import subprocess
import sys
import time

from quotp1 import kernel
from quotp1.gb.groebner import _entry, _monic_terms
from quotp1.poly import GF, QQ, Polynomial, make_ring
from quotp1.quot import ChartIndex, chart_ideal

WORKLOADS = {
    "trace-radical-t4": (
        "from quotp1.quot import ChartIndex, chart_ideal\n"
        "from quotp1.gb import radical_member\n"
        "J = chart_ideal(ChartIndex(4, 3, (3, 1)))\n"
        "R = J.ring\n"
        "assert radical_member(R.var('w_3_1') + R.var('w_4_2'), J)\n"
    ),
    "null-cone-dim-t3r3": (
        "from quotp1.quot import ChartIndex, chart_ideal\n"
        "from quotp1.gb import krull_dim\n"
        "assert krull_dim(chart_ideal(ChartIndex(3, 3, (1, 1, 1)))) == 6\n"
    ),
    "saturation-t2": (
        "from quotp1.quot import ChartIndex, chart_ideal\n"
        "from quotp1.gb import Ideal, saturate\n"
        "I = chart_ideal(ChartIndex(3, 2, (2, 1)))\n"
        "R = I.ring\n"
        "saturate(I, Ideal([R.var(v) for v in R.vars], R)).groebner_basis()\n"
    ),
}


def _random_terms(ring, rng, n, deg):
    pairs = []
    for _ in range(n):
        exps = [0] * ring.nvars
        for _ in range(rng.randint(0, deg)):
            exps[rng.randrange(ring.nvars)] += 1
        pairs.append((tuple(exps), ring.field(rng.randint(1, 9))))
    return list(Polynomial.from_terms(ring, pairs).terms)


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def micro(repeat):
    rng = random.Random(7)
    rows = []
    for field in (QQ, GF(32003)):
        ring = make_ring([f"x{i}" for i in range(6)], field)
        f = _random_terms(ring, rng, 60, 6)
        g = _random_terms(ring, rng, 60, 6)
        I = chart_ideal(ChartIndex(3, 3, (1, 1, 1)), field=field)
        gb = I.groebner_basis()
        R = I.ring
        basis = [_entry(R, _monic_terms(R, b.terms)) for b in gb]
        targets = [_random_terms(R, rng, 40, 5) for _ in range(20)]
        codec = R.codec
        cases = {
            "add_terms": lambda m: m.add_terms(f, g, ring.p),
            "mul_terms": lambda m: m.mul_terms(f, g, ring.p),
            "normal_form": lambda m: [m.normal_form(list(t), basis, codec.shift_mask, codec.guard, R.p) for t in targets],
        }
        impls = kernel.backends()
        for name, fn in cases.items():
            results = {b: fn(m) for b, m in impls.items()}
            agree = len({repr(r) for r in results.values()}) == 1
            times = {b: _time(lambda m=m: fn(m), repeat) for b, m in impls.items()}
            rows.append({"case": f"{name} [{field}]", "times": times, "agree": agree})
    return rows


def end_to_end(repeat):
    rows = []
    for name, code in WORKLOADS.items():
        times = {}
        for backend, pure in (("python", "1"), ("cython", "0")):
            env = dict(os.environ, QUOTP1_PURE=pure)
            probe = subprocess.run(
                [sys.executable, "-c", "from quotp1 import kernel; print(kernel.BACKEND)"],
                env=env, capture_output=True, text=True, check=True,
            )
            if probe.stdout.strip() != backend:
                continue
            script = "import time\nt = time.perf_counter()\n" + code + "print(time.perf_counter() - t)\n"
            best = float("inf")
            for _ in range(repeat):
                out = subprocess.run([sys.executable, "-c", script], env=env, capture_output=True, text=True, check=True)
                best = min(best, float(out.stdout.strip().splitlines()[-1]))
            times[backend] = best
        rows.append({"case": name, "times": times, "agree": True})
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = micro(args.repeat) + end_to_end(args.repeat)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'case':<32}{'python':>12}{'cython':>12}{'speedup':>10}  agree")
    for row in rows:
        t = row["times"]
        py, cy = t.get("python"), t.get("cython")
        speed = f"{py / cy:9.1f}x" if py and cy else "      n/a"
        fmt = lambda v: f"{v * 1e3:10.2f}ms" if v is not None else "       n/a"
        print(f"{row['case']:<32}{fmt(py)}{fmt(cy)} {speed}  {row['agree']}")


if __name__ == "__main__":
    main()
