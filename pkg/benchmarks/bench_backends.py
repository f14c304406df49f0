#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python twins.

Times the two hot paths on both backends: local-complementation sequence
application and GF(2) reduced echelon form (the dominant cost of the
local-equivalence solver), plus the end-to-end solver on each backend.

Usage: python benchmarks/bench_backends.py [--quick]
"""

import argparse
import random
import time

from lckit import _core_py

try:
    from lckit import _core
except ImportError:
    _core = None


def random_rows(rng, n, p=0.5):
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return rows


def bench(label, fn, repeat=3):
    best = min(timed(fn) for _ in range(repeat))
    print(f"  {label:<34} {best * 1000:10.2f} ms")
    return best


def timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller instances")
    args = parser.parse_args()

    if _core is None:
        print("compiled extension not available; benchmarking pure Python only")
    backends = [("python", _core_py)] + ([("c", _core)] if _core else [])

    rng = random.Random(7)
    n = 256 if args.quick else 512
    k = 2_000 if args.quick else 10_000
    rows = random_rows(rng, n)
    seq = [rng.randrange(n) for _ in range(k)]

    print(f"\napply_sequence_rows: n={n}, {k} complementations")
    apply_times = {}
    for name, impl in backends:
        apply_times[name] = bench(name, lambda impl=impl: impl.apply_sequence_rows(rows, n, seq))

    m = 64 if args.quick else 128
    # the Bouchet linear system of a locally equivalent pair: m^2 x 4m
    from lckit import apply_sequence, build_graph, build_system, solve_lep

    g1 = build_graph(
        m, [(u, v) for u in range(m) for v in range(u + 1, m) if rng.random() < 0.5]
    )
    g2 = apply_sequence(g1, [rng.randrange(m) for _ in range(200)])
    coeffs = build_system(g1, g2).coeffs
    sys_rows = coeffs.row_bits()

    print(f"\ngf2_rref_rows: {coeffs.rows} x {coeffs.cols} (Bouchet system, n={m})")
    rref_times = {}
    for name, impl in backends:
        rref_times[name] = bench(name, lambda impl=impl: impl.gf2_rref_rows(sys_rows, coeffs.cols))

    print(f"\nsolve_lep end to end (n={m})")
    import lckit.backend as backend_mod

    lep_times = {}
    for name, impl in backends:
        backend_mod.apply_sequence_rows = impl.apply_sequence_rows
        backend_mod.gf2_rref_rows = impl.gf2_rref_rows
        lep_times[name] = bench(name, lambda: solve_lep(g1, g2))

    if _core is not None:
        print("\nspeedup (python / c):")
        print(f"  apply_sequence_rows  {apply_times['python'] / apply_times['c']:8.1f}x")
        print(f"  gf2_rref_rows        {rref_times['python'] / rref_times['c']:8.1f}x")
        print(f"  solve_lep            {lep_times['python'] / lep_times['c']:8.1f}x")


if __name__ == "__main__":
    main()
