#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure numpy fallback.

Run:  python benchmarks/bench_backends.py [--repeats N]
"""

import argparse
import math
import time

import numpy as np

from rmspec import _kernel_py

try:
    from rmspec import _kernel_cy
except ImportError:
    _kernel_cy = None


def timeit(fn, repeats):
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(repeats):
    z = np.linspace(-30.0, 30.0, 20001)
    s = 1.0 / (1.0 + np.exp(2.0 * z))
    w = 1.0 / (1.0 + np.exp(-2.0 * z))
    al, be, ga = 0.25 - 1.3j, 0.25 + 1.3j, 1.5 + 0j
    x = np.linspace(-1.0, 1.0, 200001)
    diag = np.random.default_rng(0).uniform(1.0, 5.0, size=40000)
    off = np.random.default_rng(1).uniform(-1.0, 1.0, size=39999)

    cases = [
        ("hyp2f1_grid (20k points, mixed branches)",
         lambda k: k.hyp2f1_grid(al, be, ga, s, w)),
        ("hyp2f1 scalar x 2000 (s = 0.45)",
         lambda k: [k.hyp2f1(al, be, ga, 0.45) for _ in range(2000)]),
        ("jacobi_grid n=8 (200k points)",
         lambda k: k.jacobi_grid(8, 0.3, 1.7, x)),
        ("sturm_count (40k rows) x 50",
         lambda k: [k.sturm_count(diag, off, 2.5) for _ in range(50)]),
    ]

    backends = [("python", _kernel_py)]
    if _kernel_cy is not None:
        backends.append(("cython", _kernel_cy))

    print(f"{'case':<45}" + "".join(f"{name:>12}" for name, _ in backends)
          + ("     speedup" if len(backends) == 2 else ""))
    for label, runner in cases:
        times = [timeit(lambda k=kern: runner(k), repeats) for _, kern in backends]
        row = f"{label:<45}" + "".join(f"{t * 1e3:>10.1f}ms" for t in times)
        if len(times) == 2 and times[1] > 0:
            row += f"{times[0] / times[1]:>10.1f}x"
        print(row)

    if _kernel_cy is None:
        print("\ncompiled kernel not built; only the fallback was timed")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeats", type=int, default=3)
    bench(ap.parse_args().repeats)
