#!/usr/bin/env python3
"""Benchmark the compiled row-reduction kernel against the pure fallback.

Three workloads:
  * dense random integer matrices over Q (rank),
  * dense random matrices over F_5 (rank),
  * the real hot path: degree-3 boundary rank of a mid-size algebra
    (the even-parity block of the complex of osp(2|4) with Grassmann
    coefficients), using the exact integer columns the oracle produces.

Usage: python3 benchmarks/bench_linalg.py [--quick]
"""

import argparse
import random
import sys
import time

from osphom.linalg import _pure

try:
    from osphom.linalg import _speedups
except ImportError:
    _speedups = None


def timeit(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def bench_dense_q(impl, rows):
    span = impl.QSpan(len(rows[0]))
    for r in rows:
        span.insert(list(r))
    return span.rank


def bench_dense_fp(impl, rows, p=5):
    span = impl.FpSpan(p, len(rows[0]))
    for r in rows:
        span.insert([x % p for x in r])
    return span.rank


def ce_columns(quick):
    from osphom.cehomology import BoundaryMaps
    from osphom.osp import build_osp
    from osphom.superalg import preset_algebra
    from osphom.linalg import FieldSpec

    name = "grassmann_id" if not quick else "ground_field_id"
    mn = (2, 2)
    A = build_osp(*mn, preset_algebra(name, FieldSpec.Q()))
    bm = BoundaryMaps(A.osp)
    block = [t for t in range(bm.lam2.dim) if bm.lam2.parity[t] == 0]
    idxmap = {t: a for a, t in enumerate(block)}
    cols = []
    for u in range(bm.lam3.dim):
        if bm.lam3.parity[u] == 0:
            cols.append(bm._int_column(bm.d3[u], idxmap))
    return len(block), cols, f"osp(2|4,{name}) even block"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()

    impls = [("pure", _pure)]
    if _speedups is not None:
        impls.append(("compiled", _speedups))
    else:
        print("note: compiled backend not built; run `python3 setup.py build_ext --inplace`")

    rng = random.Random(0)
    size = 120 if not args.quick else 50
    rows = [[rng.randint(-30, 30) for _ in range(size)] for _ in range(size)]
    print(f"\ndense Q rank, {size}x{size} random integers")
    for name, impl in impls:
        r, dt = timeit(lambda impl=impl: bench_dense_q(impl, rows))
        print(f"  {name:9s} rank {r}   {dt:8.3f}s")

    print(f"\ndense F_5 rank, {size}x{size}")
    for name, impl in impls:
        r, dt = timeit(lambda impl=impl: bench_dense_fp(impl, rows))
        print(f"  {name:9s} rank {r}   {dt:8.3f}s")

    ncols, cols, label = ce_columns(args.quick)
    print(f"\nboundary rank: {label} ({len(cols)} columns of length {ncols})")
    for name, impl in impls:
        def run(impl=impl):
            span = impl.QSpan(ncols)
            for c in cols:
                span.insert(list(c))
            return span.rank

        r, dt = timeit(run)
        print(f"  {name:9s} rank {r}   {dt:8.3f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
