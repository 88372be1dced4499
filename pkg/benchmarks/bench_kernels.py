#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Times the two hot loops (gap moment sums and pointwise p/sqrt(q)
evaluation) plus a full capacity computation under each backend.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import statistics
import time

import numpy as np

from logcap._kernels import pure

try:
    from logcap._kernels import _native as native
except ImportError:
    native = None


def endpoints_for(n):
    # evenly spread components inside [-1, 1]
    pts = np.linspace(-1.0, 1.0, 2 * n)
    return np.ascontiguousarray(pts)


def best_time(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times), statistics.median(times)


def bench_case(label, make_fn, repeat):
    rows = []
    for name, mod in (("pure", pure), ("native", native)):
        if mod is None:
            rows.append((name, None, None))
            continue
        fn = make_fn(mod)
        fn()  # warm up
        tmin, tmed = best_time(fn, repeat)
        rows.append((name, tmin, tmed))
    print(f"\n{label}")
    base = rows[0][1]
    for name, tmin, tmed in rows:
        if tmin is None:
            print(f"  {name:<8} unavailable")
            continue
        speedup = "" if name == "pure" or base is None else f"  ({base / tmin:.1f}x vs pure)"
        print(f"  {name:<8} best {tmin * 1e3:8.3f} ms   median {tmed * 1e3:8.3f} ms{speedup}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=7)
    args = parser.parse_args()

    for n in (2, 4, 8):
        ep = endpoints_for(n)
        m = 4096

        def make(mod, ep=ep, n=n, m=m):
            def run():
                for gap in range(n - 1):
                    mod.gap_moment_sums(ep, gap, m, n - 1)
            return run

        bench_case(f"gap_moment_sums: n={n}, m={m}, all gaps", make, args.repeat)

    ep = endpoints_for(4)
    coeffs = np.array([0.01, -0.2, 0.3])
    t = np.linspace(1.001, 400.0, 200_000)

    def make_ratio(mod):
        def run():
            mod.poly_over_sqrt_q(ep, coeffs, t)
        return run

    bench_case("poly_over_sqrt_q: n=4, 200k points", make_ratio, args.repeat)

    # end-to-end: capacity of a four-interval set under each backend
    import logcap._kernels as kernels
    from logcap import make_interval_union
    from logcap.exact import widom_capacity

    e = make_interval_union([(-1, -0.7), (-0.5, -0.1), (0.05, 0.3), (0.6, 1)])

    def make_cap(mod):
        def run():
            saved = (kernels.gap_moment_sums, kernels.poly_over_sqrt_q, kernels.skip_product)
            kernels.gap_moment_sums = mod.gap_moment_sums
            kernels.poly_over_sqrt_q = mod.poly_over_sqrt_q
            kernels.skip_product = mod.skip_product
            try:
                widom_capacity(e)
            finally:
                (kernels.gap_moment_sums, kernels.poly_over_sqrt_q,
                 kernels.skip_product) = saved
        return run

    bench_case("widom_capacity: 4 intervals end-to-end", make_cap, args.repeat)

    if native is None:
        print("\ncompiled extension not built; only the numpy fallback was timed")


if __name__ == "__main__":
    main()
