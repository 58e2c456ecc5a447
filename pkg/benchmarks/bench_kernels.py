#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Usage:  python benchmarks/bench_kernels.py [--repeat N]

Times the three hot loops (partition series, truncated polynomial powering,
stride-t convolution) on workloads shaped like the verification runs.
"""

import argparse
import time

from tcore import _series_py

try:
    from tcore import _series_cy
except ImportError:
    _series_cy = None


def _pow_trunc(kernels, base, e, cap):
    result = [1]
    while e:
        if e & 1:
            result = kernels.poly_mul_trunc(result, base, cap)
        e >>= 1
        if e:
            base = kernels.poly_mul_trunc(base, base, cap)
    return result


def workloads():
    yield "partition_series(30000)", lambda k: k.partition_series(30_000)
    yield "inner_factor t=50 cap=2000", lambda k: _pow_trunc(
        k, k.euler_factor(2000), 50, 2000
    )

    def core_series(k):
        p = k.partition_series(4000)
        inner = _pow_trunc(k, k.euler_factor(4000 // 7), 7, 4000 // 7)
        return k.core_series_from_inner(inner, 7, p, 4000)

    yield "tcore series t=7 limit=4000", core_series


def bench(fn, kernels, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(kernels)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = [("python", _series_py)]
    if _series_cy is not None:
        backends.append(("cython", _series_cy))
    else:
        print("compiled extension not available; timing pure Python only")

    print(f"{'workload':<34} " + " ".join(f"{name:>10}" for name, _ in backends)
          + ("    speedup" if len(backends) == 2 else ""))
    for name, fn in workloads():
        times = [bench(fn, kernels, args.repeat) for _, kernels in backends]
        row = f"{name:<34} " + " ".join(f"{t * 1e3:>8.1f}ms" for t in times)
        if len(times) == 2:
            row += f"    {times[0] / times[1]:>6.2f}x"
        print(row)


if __name__ == "__main__":
    main()
