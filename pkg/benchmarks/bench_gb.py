#!/usr/bin/env python3
"""Benchmark the F_p reduction kernels: numba jit vs pure numpy.

The workloads are the certification Gröbner bases that dominate the
`verify all` runtime.  The numba path is warmed up before timing so the
comparison excludes compilation.

Usage: python benchmarks/bench_gb.py [--repeat N]
"""

import argparse
import time

from symtheta import gb_backend, gb_kernels_numba, gb_kernels_numpy
from symtheta.groebner import Ideal, singular_locus_ideal
from symtheta.poly import GF, Ring
from symtheta.ranklocus import catalog

PRIME = 31991


def _fp(gens):
    ring = Ring(gens[0].ring.variables, GF(PRIME))
    return [g.reduce_mod(ring) for g in gens]


def workloads():
    d11 = catalog("d11")[1].ideal.generators
    d13 = catalog("d13")[0]
    d14 = catalog("d14")[0]
    d16 = catalog("d16")[0].ideal.generators
    sing14 = singular_locus_ideal(d14.ideal, 2).generators
    return {
        "curve-degree-20 (5 vars, 10 quartics)": _fp(d11),
        "threefold-degree-21 (6 vars, 7 sextics)": _fp(d13.data["seven"]),
        "threefold-degree-40 (7 vars, 5 quartics)": _fp(d16),
        "singular-curve-24 (6 vars, 17 mixed)": _fp(sing14),
    }


def run_backend(kernels, jobs, repeat):
    saved = (gb_backend.normal_form, gb_backend.add_scaled_shifted)
    gb_backend.normal_form = kernels.normal_form
    gb_backend.add_scaled_shifted = kernels.add_scaled_shifted
    try:
        kernels.warmup()
        results = {}
        for name, gens in jobs.items():
            best = None
            for _ in range(repeat):
                ring = gens[0].ring
                t0 = time.perf_counter()
                Ideal(ring, gens).hilbert_summary()
                dt = time.perf_counter() - t0
                best = dt if best is None else min(best, dt)
            results[name] = best
        return results
    finally:
        gb_backend.normal_form, gb_backend.add_scaled_shifted = saved


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    jobs = workloads()
    timings = {}
    for label, kernels in (("numba", gb_kernels_numba), ("numpy", gb_kernels_numpy)):
        print(f"running {label} backend ...")
        timings[label] = run_backend(kernels, jobs, args.repeat)

    width = max(len(k) for k in jobs)
    print(f"\n{'workload':{width}s}  {'numba':>9s}  {'numpy':>9s}  {'ratio':>6s}")
    for name in jobs:
        a = timings["numba"][name]
        b = timings["numpy"][name]
        print(f"{name:{width}s}  {a*1000:8.1f}ms  {b*1000:8.1f}ms  {b/a:5.1f}x")


if __name__ == "__main__":
    main()
