#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Runs each hot kernel on a representative workload with both backends and
prints a timing table.  The outputs are also compared, so a mismatch
aborts the run.

Usage: python benchmarks/bench_kernels.py [--repeat N] [--heavy]
"""

import argparse
import sys
import time

from osctab import _kernels_py as pure
from osctab.kernels import backends


def walk_census(backend, length):
    return backend.ot_weight_profile((), (), length)


def skew_census(backend, length):
    return backend.ot_weight_profile((2, 1), (3, 1, 1), length)

def joint_counts(backend, n):
    return backend.joint_distribution_counts(n)


def search(backend, node_budget):
    # alignment values of all matchings of [10]: a hard instance where the
    # first-fit path dead-ends, so the fixed node budget is fully consumed
    # and both backends perform the identical amount of work
    from osctab.homomesy import matching_items

    values = [value for _, value in matching_items(5)]
    return backend.triple_search(values, 10, node_budget, 3600.0, None)


def time_one(fn, backend, arg, repeat):
    best = None
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(backend, arg)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--heavy", action="store_true", help="larger workloads")
    args = parser.parse_args()

    impls = backends()
    if "compiled" not in impls:
        print("compiled extension not available; build it with: pip install -e .")
        return 1
    compiled = impls["compiled"]

    length = 16 if args.heavy else 14
    skew_len = 12 if args.heavy else 10
    joint_n = 7 if args.heavy else 6
    node_budget = 200_000 if args.heavy else 50_000

    workloads = [
        (f"walk census, closed walks, length {length}", walk_census, length),
        (f"walk census, skew endpoints, length {skew_len}", skew_census, skew_len),
        (f"joint (cr, ne, al) distribution, n = {joint_n}", joint_counts, joint_n),
        (f"triple search, 945 items, {node_budget} nodes", search, node_budget),
    ]

    print(f"{'workload':<46} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, fn, arg in workloads:
        pure_time, pure_out = time_one(fn, pure, arg, args.repeat)
        comp_time, comp_out = time_one(fn, compiled, arg, args.repeat)
        if pure_out != comp_out:
            print(f"BACKEND MISMATCH in {name}", file=sys.stderr)
            return 2
        print(
            f"{name:<46} {pure_time:>9.3f}s {comp_time:>9.3f}s {pure_time / comp_time:>7.1f}x"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
