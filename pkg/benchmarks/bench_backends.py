#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Every workload is run on both backends with the same seed; results must
agree bit for bit (the point of the fallback), so the table also serves
as a parity check.

    python benchmarks/bench_backends.py [--scale N]

--scale multiplies the replication counts (default 1: a few seconds).
"""

from __future__ import annotations

import argparse
import sys
import time

from shiftstats import _purepy

try:
    from shiftstats import _core
except ImportError:
    print("compiled backend not built; run `pip install -e . --no-build-isolation`")
    sys.exit(1)

MU = 26 / 1734


def special_functions(kernels) -> float:
    acc = 0.0
    for i in range(20_000):
        x = 0.5 + i * 0.05
        acc += kernels.log_gamma(x)
        acc += kernels.reg_lower_incomplete_gamma(7.0, x % 40.0)
        acc += kernels.log_binomial(1029, i % 1029)
    return acc


def workloads(scale: int):
    return [
        ("special functions (60k evals)", special_functions),
        (
            f"mixture tail, {200_000 * scale:,} reps",
            lambda k: k.mixture_tail_hits(1.0, MU, 203.0, 7, 200_000 * scale, 42),
        ),
        (
            f"moment sums, {100_000 * scale:,} reps",
            lambda k: k.mixture_moment_sums(1.0, MU, 203.0, 100_000 * scale, 43),
        ),
        (
            f"rate ratio, {200_000 * scale:,} reps",
            lambda k: k.rate_ratio_hits(MU, 2.0, 200_000 * scale, 44),
        ),
        (
            f"allocation (1029/11/142), {20_000 * scale:,} reps",
            lambda k: k.allocation_hits(1029, 11, 142, 7, 20_000 * scale, 45),
        ),
    ]


def run(fn, kernels):
    start = time.perf_counter()
    result = fn(kernels)
    return time.perf_counter() - start, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--scale", type=int, default=1)
    args = parser.parse_args()

    rows = []
    mismatches = 0
    for label, fn in workloads(args.scale):
        cython_time, cython_result = run(fn, _core)
        python_time, python_result = run(fn, _purepy)
        match = cython_result == python_result
        mismatches += not match
        rows.append((label, cython_time, python_time, match))

    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'cython':>10}  {'python':>10}  {'speedup':>8}  agree")
    for label, ct, pt, match in rows:
        print(
            f"{label:<{width}}  {ct * 1e3:>8.1f}ms  {pt * 1e3:>8.1f}ms  "
            f"{pt / ct:>7.1f}x  {'yes' if match else 'NO'}"
        )
    if mismatches:
        print(f"\n{mismatches} workload(s) disagree between backends", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
