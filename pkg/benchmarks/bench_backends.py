#!/usr/bin/env python3
"""Benchmark the compiled kernel backend against the pure-Python twin.

Usage: python benchmarks/bench_backends.py [--repeat N]

Times the scalar hot kernels (AGM elliptic integral, modulus, modulus
inverse, distortion function), the batch metric kernels, and one
representative end-to-end suite run per backend.
"""

import argparse
import time

import numpy as np

from hgf import _core_py

try:
    from hgf import _core
except ImportError:
    _core = None

CFG = (1e-15, 200, 1e-8, 1.0 - 1e-8)


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def scalar_benchmarks(backend):
    rtol, mi, rs, rn = CFG
    rr = np.geomspace(1e-6, 1.0 - 1e-6, 2000)
    yy = np.geomspace(1e-2, 19.0, 500)

    def bench_ellint():
        for r in rr:
            backend.ellint_K(r, rtol, mi)

    def bench_mu():
        for r in rr:
            backend.mu(r, rtol, mi, rs, rn)

    def bench_mu_inv():
        for y in yy:
            backend.mu_inv(y, rtol, 1e-12, mi, rs, rn)

    def bench_phi():
        for r in rr[::4]:
            backend.phi(2.0, r, rtol, 1e-12, mi, rs, rn)

    return [
        ("ellint_K x2000", bench_ellint),
        ("mu x2000", bench_mu),
        ("mu_inv x500", bench_mu_inv),
        ("phi_K x500", bench_phi),
    ]


def batch_benchmarks(backend):
    rng = np.random.default_rng(12345)
    n = 200_000
    ax, bx, cx = (rng.uniform(-10, 10, n) for _ in range(3))
    ay, by, cy = (rng.uniform(0.01, 10, n) for _ in range(3))
    out = np.empty(n)

    def bench_pairs():
        backend.h_pairs_half_plane(2.0, ax, ay, bx, by, out)

    def bench_triangles():
        backend.triangle_margins_half_plane(2.0, ax, ay, bx, by, cx, cy, out)

    return [
        (f"h_pairs x{n}", bench_pairs),
        (f"triangle_margins x{n}", bench_triangles),
    ]


def suite_benchmark(backend_name):
    # run in a subprocess so the import-time backend selection applies
    import os
    import subprocess
    import sys

    env = dict(os.environ, HGF_BACKEND=backend_name)
    code = (
        "import time; from hgf.report import ScanSpec; from hgf import suites\n"
        "t0 = time.perf_counter()\n"
        "suites.run_suite(ScanSpec(suite='eta-bound'))\n"
        "suites.run_suite(ScanSpec(suite='schwarz-chain'))\n"
        "print(time.perf_counter() - t0)\n"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = [("python", _core_py)]
    if _core is not None:
        backends.append(("c", _core))
    else:
        print("note: compiled backend not built; showing pure Python only")

    results = {}
    for bname, mod in backends:
        for label, fn in scalar_benchmarks(mod) + batch_benchmarks(mod):
            results.setdefault(label, {})[bname] = timeit(fn, args.repeat)
    for bname, _ in backends:
        results.setdefault("suites eta-bound+schwarz-chain", {})[bname] = \
            suite_benchmark(bname)

    width = max(len(k) for k in results)
    header = f"{'benchmark':<{width}}  {'python':>10}  {'c':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, times in results.items():
        py = times.get("python")
        cc = times.get("c")
        if cc is not None:
            print(f"{label:<{width}}  {py:>9.4f}s  {cc:>9.4f}s  {py / cc:>7.1f}x")
        else:
            print(f"{label:<{width}}  {py:>9.4f}s  {'-':>10}  {'-':>8}")


if __name__ == "__main__":
    main()
