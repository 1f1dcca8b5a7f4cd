#!/usr/bin/env python3
"""Benchmark the two denumerant-table backends against each other.

The compiled kernel and the pure-Python fallback compute bit-identical
tables; this script reports how much the kernel buys on sweep-sized and
larger workloads.  Run after an editable install:

    python benchmarks/bench_rep_table.py [--repeats N] [--quick]
"""
from __future__ import annotations

import argparse
from time import perf_counter

from frobgen import dp

CASES = [
    ((5, 7), 500_000),
    ((71, 103), 1_000_000),
    ((31, 47, 60), 400_000),
    ((101, 103, 107, 109), 200_000),
]

QUICK_CASES = [((5, 7), 50_000), ((31, 47, 60), 40_000)]


def time_backend(denoms: tuple[int, ...], bound: int, backend: str, repeats: int) -> tuple[float, list[int]]:
    best = float("inf")
    result: list[int] = []
    for _ in range(repeats):
        start = perf_counter()
        result = dp.rep_counts(denoms, bound, backend=backend)
        best = min(best, perf_counter() - start)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--quick", action="store_true", help="small sizes for smoke runs")
    args = parser.parse_args()

    cases = QUICK_CASES if args.quick else CASES
    if not dp.have_compiled():
        print("compiled kernel not built; timing the pure-Python backend only")

    header = f"{'denominations':>24} {'bound':>10} {'python':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for denoms, bound in cases:
        py_time, py_table = time_backend(denoms, bound, "python", args.repeats)
        if dp.have_compiled():
            c_time, c_table = time_backend(denoms, bound, "compiled", args.repeats)
            if c_table != py_table:
                print(f"MISMATCH for {denoms} bound {bound}")
                return 1
            print(
                f"{str(denoms):>24} {bound:>10} {py_time:>9.3f}s {c_time:>9.3f}s "
                f"{py_time / c_time:>7.1f}x"
            )
        else:
            print(f"{str(denoms):>24} {bound:>10} {py_time:>9.3f}s {'-':>10} {'-':>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
