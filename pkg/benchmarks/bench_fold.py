#!/usr/bin/env python3
"""Benchmark the compiled fold core against the pure-Python fallback.

Runs the enumeration counts and statistics folds on both backends for a
range of sizes and prints a timing table with speedups.  The two backends
return identical values; this script asserts that on every row.

Usage:
  python benchmarks/bench_fold.py            # default sizes
  python benchmarks/bench_fold.py --k 8 12 14 --am-k 6 9 11
"""

import argparse
import time

from pathforge import _fold_py

try:
    from pathforge import _foldcore
except ImportError:
    _foldcore = None


def clock(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return time.perf_counter() - start, result


def bench(label, pure_fn, fast_fn, sizes):
    print(f"\n{label}")
    print(f"{'k':>4} {'pure (s)':>12} {'compiled (s)':>14} {'speedup':>9}")
    for k in sizes:
        t_pure, a = clock(pure_fn, k)
        if fast_fn is None:
            print(f"{k:>4} {t_pure:>12.4f} {'-':>14} {'-':>9}")
            continue
        t_fast, b = clock(fast_fn, k)
        assert list(a) == list(b) if isinstance(a, tuple) else a == b, f"backend mismatch at k={k}"
        speedup = t_pure / t_fast if t_fast > 0 else float("inf")
        print(f"{k:>4} {t_pure:>12.4f} {t_fast:>14.4f} {speedup:>8.1f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k", type=int, nargs="+", default=[8, 10, 12],
                        help="Dyck sizes to fold")
    parser.add_argument("--am-k", type=int, nargs="+", default=[6, 8, 10],
                        help="alternating Motzkin sizes to fold")
    args = parser.parse_args()

    if _foldcore is None:
        print("compiled core not built; timing the pure backend only")

    fast = _foldcore
    bench("Dyck count", lambda k: _fold_py.dyck_count(k),
          (lambda k: fast.dyck_count(k)) if fast else None, args.k)
    bench("Dyck statistics fold", lambda k: _fold_py.dyck_fold(k),
          (lambda k: fast.dyck_fold(k)) if fast else None, args.k)
    bench("Alternating Motzkin count", lambda k: _fold_py.alt_motzkin_count(k),
          (lambda k: fast.alt_motzkin_count(k)) if fast else None, args.am_k)
    bench("Alternating Motzkin statistics fold", lambda k: _fold_py.alt_motzkin_fold(k),
          (lambda k: fast.alt_motzkin_fold(k)) if fast else None, args.am_k)


if __name__ == "__main__":
    main()
