"""Compiled vs pure-Python timing for the tableau minimization kernels.

    python benchmarks/bench_min_cost.py [--reps 3] [--sizes 3,5,7]

Each mode runs in its own interpreter, the pure one with BZKIT_DISABLE_JIT=1,
so nested kernel calls fall back too.
"""
import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np


def workload(m, count, seed=0):
    from bzkit import lusztig_finite as lf
    from bzkit import maya as my
    from bzkit.root_data import Interval

    rng = np.random.default_rng(seed)
    I = Interval(1, m)
    ks = [np.asarray(k.members, dtype=np.int64) for k in my.all_maya_finite(I)]
    return [(lf.random_datum(rng, I, 6).matrix, ks) for _ in range(count)]


def run(fn, work):
    total = 0
    for mat, ks in work:
        for kk in ks:
            total += int(fn(mat, 1, kk))
    return total


def measure(sizes, data, reps):
    from bzkit import _accel, kernels

    rows = []
    for name in ("min_cost_cut", "min_cost_bnb"):
        fn = getattr(kernels, name)
        for m in sizes:
            work = workload(m, data)
            run(fn, work[:1])  # compile outside the timing
            best, out = float("inf"), None
            for _ in range(reps):
                t = time.perf_counter()
                out = run(fn, work)
                best = min(best, time.perf_counter() - t)
            rows.append({"kernel": name, "m": m, "calls": sum(len(k) for _, k in work), "seconds": best, "checksum": out})
    return {"jit": _accel.USE_JIT, "rows": rows}


def spawn(args, disable):
    env = dict(os.environ, BZKIT_DISABLE_JIT="1" if disable else "0")
    cmd = [sys.executable, __file__, "--child", "--sizes", args.sizes, "--data", str(args.data), "--reps", str(args.reps)]
    return json.loads(subprocess.run(cmd, env=env, check=True, capture_output=True, text=True).stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--reps", type=int, default=3)
    ap.add_argument("--sizes", default="3,5,7")
    ap.add_argument("--data", type=int, default=5, help="random data per size")
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    sizes = [int(x) for x in args.sizes.split(",")]
    if args.child:
        print(json.dumps(measure(sizes, args.data, args.reps)))
        return

    fast, slow = spawn(args, False), spawn(args, True)
    if not fast["jit"]:
        print("numba unavailable: both columns are pure Python")
    print(f"{'kernel':<14}{'m':>3}{'calls':>8}{'compiled s':>12}{'python s':>11}{'speedup':>9}")
    for a, b in zip(fast["rows"], slow["rows"]):
        assert a["checksum"] == b["checksum"], "compiled and python kernels disagree"
        print(
            f"{a['kernel']:<14}{a['m']:>3}{a['calls']:>8}{a['seconds']:>12.4f}{b['seconds']:>11.4f}"
            f"{b['seconds'] / a['seconds']:>8.0f}x"
        )


if __name__ == "__main__":
    main()
