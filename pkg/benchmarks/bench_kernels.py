#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python reference.

Runs the two hot kernels (field-element multiplication batches and the
PSL2 enumeration loop) through both backends and prints a comparison
table.  Usage: python benchmarks/bench_kernels.py
"""

import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from gkspec import _fallback  # noqa: E402
from gkspec.gf import make_field  # noqa: E402

try:
    from gkspec import _speedups
except ImportError:
    _speedups = None


def timeit(fn, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_gf_mul(impl, field, pairs):
    mod, p = field.modulus, field.p

    def run():
        for a, b in pairs:
            impl.gf_mul(a, b, mod, p)

    return timeit(run)


def bench_geom_sum(impl, field, elems, m):
    mod, p = field.modulus, field.p

    def run():
        for a in elems:
            impl.gf_geom_sum(a, m, mod, p)

    return timeit(run)


def bench_psl2(impl, q):
    from gkspec.orderset import factorize

    ((p, k),) = factorize(q).pairs
    f = make_field(p, k)
    elems = [f.element_at(n) for n in range(q)]
    index = {e.coeffs: n for n, e in enumerate(elems)}
    mul = [index[(a * b).coeffs] for a in elems for b in elems]
    add = [index[(a + b).coeffs] for a in elems for b in elems]
    neg = [index[(-a).coeffs] for a in elems]
    one, zero = index[f.one.coeffs], index[f.zero.coeffs]

    def run():
        impl.psl2_order_counts(q, mul, add, neg, one, zero)

    return timeit(run)


def main():
    rng = random.Random(1)
    rows = []

    f316 = make_field(3, 16)
    pairs = [
        (
            tuple(rng.randrange(3) for _ in range(16)),
            tuple(rng.randrange(3) for _ in range(16)),
        )
        for _ in range(20000)
    ]
    name = "gf_mul GF(3^16) x20000"
    pure = bench_gf_mul(_fallback, f316, pairs)
    fast = bench_gf_mul(_speedups, f316, pairs) if _speedups else None
    rows.append((name, pure, fast))

    elems = [tuple(rng.randrange(3) for _ in range(16)) for _ in range(200)]
    name = "gf_geom_sum GF(3^16) m=85 x200"
    pure = bench_geom_sum(_fallback, f316, elems, 85)
    fast = bench_geom_sum(_speedups, f316, elems, 85) if _speedups else None
    rows.append((name, pure, fast))

    for q in (23, 43, 64):
        name = f"psl2_order_counts q={q}"
        pure = bench_psl2(_fallback, q)
        fast = bench_psl2(_speedups, q) if _speedups else None
        rows.append((name, pure, fast))

    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{width}}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}")
    for name, pure, fast in rows:
        if fast is None:
            print(f"{name:<{width}}  {pure*1e3:>8.1f}ms  {'-':>10}  {'-':>8}")
        else:
            print(
                f"{name:<{width}}  {pure*1e3:>8.1f}ms  {fast*1e3:>8.1f}ms  "
                f"{pure/fast:>7.1f}x"
            )
    if _speedups is None:
        print("\ncompiled extension not built; run: python setup.py build_ext --inplace")


if __name__ == "__main__":
    main()
