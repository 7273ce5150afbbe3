#!/usr/bin/env python3
"""Benchmark the compiled kernel backend against the pure-Python fallback.

Times the scalar kernels on random encoded instances and the batch pairwise
matrix builders on the exhaustively enumerated block that the axiom lab scans
by default.  Run after ``pip install -e .``:

    python benchmarks/bench_kernels.py [--nx 4] [--pool 4] [--calls 20000]
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from softsets import _kernels_py as kpy
from softsets.lab import _block_arrays, _build_blocks, SearchBounds, random_t1, random_t2

try:
    from softsets import _kernels_c as kc
except ImportError:
    kc = None


def _time(fn, reps: int = 3) -> float:
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_scalar(nx: int, pool: int, calls: int) -> list[tuple[str, float, float]]:
    rng = random.Random(7)
    t1s = [random_t1(rng, nx, pool) for _ in range(200)]
    t2s = [random_t2(rng, nx, pool, pool) for _ in range(200)]
    pairs1 = [(rng.choice(t1s), rng.choice(t1s)) for _ in range(calls)]
    pairs2 = [(rng.choice(t2s), rng.choice(t2s)) for _ in range(calls)]
    rows = []

    def run_t1(mod, name):
        fn = getattr(mod, name)
        for a, b in pairs1:
            fn(a.amask, a.images, b.amask, b.images)

    def run_t2(mod, name):
        fn = getattr(mod, name)
        for a, b in pairs2:
            fn(a.amask, a.emasks, a.images, b.amask, b.emasks, b.images)

    for name, runner in (
        ("t1_dp", run_t1),
        ("t1_dm", run_t1),
        ("t1_q_parts", run_t1),
        ("t2_dp", run_t2),
        ("t2_dm", run_t2),
        ("t2_sm_parts", run_t2),
    ):
        t_py = _time(lambda: runner(kpy, name))
        t_c = _time(lambda: runner(kc, name)) if kc else float("nan")
        rows.append((name, t_py / calls * 1e6, t_c / calls * 1e6))
    return rows


def bench_batch() -> list[tuple[str, float, float]]:
    blocks = _build_blocks(SearchBounds(), True, [])
    block = blocks[-1]  # largest enumerated block (676 instances by default)
    n = len(block.encs)
    amasks, emasks, imgs = _block_arrays(block)
    rows = []
    for mode in ("Dp", "Dm"):
        out = np.zeros((n, n), dtype=np.int64)
        t_py = _time(lambda: kpy.t2_matrix(mode, amasks, emasks, imgs, out), reps=1)
        t_c = (
            _time(lambda: kc.t2_matrix(mode, amasks, emasks, imgs, out))
            if kc
            else float("nan")
        )
        rows.append((f"t2_matrix[{mode}] n={n}", t_py, t_c))
    return rows


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--nx", type=int, default=4)
    ap.add_argument("--pool", type=int, default=4)
    ap.add_argument("--calls", type=int, default=20_000)
    args = ap.parse_args()

    if kc is None:
        print("compiled backend not built; timing pure backend only\n")

    print(f"scalar kernels ({args.calls} calls, nx={args.nx}, pools={args.pool}):")
    print(f"{'kernel':<22}{'pure us/call':>14}{'compiled us/call':>18}{'speedup':>9}")
    for name, t_py, t_c in bench_scalar(args.nx, args.pool, args.calls):
        speed = f"{t_py / t_c:6.1f}x" if t_c == t_c else "    n/a"
        print(f"{name:<22}{t_py:>14.3f}{t_c:>18.3f}{speed:>9}")

    print("\nbatch pair matrices (whole default lab block, seconds):")
    print(f"{'kernel':<22}{'pure s':>14}{'compiled s':>18}{'speedup':>9}")
    for name, t_py, t_c in bench_batch():
        speed = f"{t_py / t_c:6.1f}x" if t_c == t_c else "    n/a"
        print(f"{name:<22}{t_py:>14.3f}{t_c:>18.3f}{speed:>9}")


if __name__ == "__main__":
    main()
