"""Compiled vs pure-Python convolution kernel, plus an end-to-end analysis run.

    python3 bench/bench_kernels.py [--repeat N]
"""
import argparse
import os
import subprocess
import sys
import time

import numpy as np

from kummer_models import kernels
from kummer_models.padic import mk_context

CASES = [
    # (label, p, d, shape of a, shape of b)
    ("R x R, p=3 d=3", 3, 3, (), ()),
    ("A x A, D=16", 3, 3, (16,), (16,)),
    ("B1 x B1, 16x3", 3, 3, (16, 3), (16, 3)),
    ("H x H tensor, 3x3x3x3", 3, 1, (3, 3, 3, 3), (3, 3, 3, 3)),
    ("A x A, p=5 D=32", 5, 1, (32,), (32,)),
]

E2E = "(1+pi^12*(1+Z^2))*(1+Z^2+pi^3*Z)^3"


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def bench_conv(repeat):
    rng = np.random.default_rng(0)
    rows = []
    for label, p, d, sa, sb in CASES:
        ctx = mk_context(p, d)
        a = rng.integers(0, ctx.q, size=sa + (ctx.e,), dtype=np.int64)
        b = rng.integers(0, ctx.q, size=sb + (ctx.e,), dtype=np.int64)
        if not sa:
            a, b = a[None], b[None]
        ref = kernels.conv(a, b, ctx.red, ctx.q, backend="python")
        row = [label, best_of(lambda: kernels.conv(a, b, ctx.red, ctx.q, backend="python"), repeat)]
        if kernels.BACKEND == "cython":
            out = kernels.conv(a, b, ctx.red, ctx.q, backend="cython")
            assert np.array_equal(out, ref), label
            row.append(best_of(lambda: kernels.conv(a, b, ctx.red, ctx.q, backend="cython"), repeat))
        rows.append(row)
    return rows


def bench_e2e():
    out = {}
    for backend in ("cython", "python"):
        env = dict(os.environ, KUMMER_MODELS_BACKEND=backend)
        t = time.perf_counter()
        subprocess.run([sys.executable, "-m", "kummer_models.cli", "analyze", "--p", "3", "--d", "3",
                        "--f", E2E], env=env, check=True, capture_output=True)
        out[backend] = time.perf_counter() - t
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=20)
    args = ap.parse_args()
    print("active backend: %s" % kernels.BACKEND)
    print("%-28s %12s %12s %8s" % ("kernel", "python [ms]", "cython [ms]", "speedup"))
    for row in bench_conv(args.repeat):
        if len(row) == 3:
            print("%-28s %12.3f %12.3f %7.1fx" % (row[0], 1e3 * row[1], 1e3 * row[2], row[1] / row[2]))
        else:
            print("%-28s %12.3f %12s" % (row[0], 1e3 * row[1], "n/a"))
    e2e = bench_e2e()
    print("end-to-end analyze (process wall time): cython %.2fs, python %.2fs"
          % (e2e["cython"], e2e["python"]))


if __name__ == "__main__":
    main()
