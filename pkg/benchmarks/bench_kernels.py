"""Timing comparison of the compiled lattice kernels against the fallback.

Runs each kernel on random monotone tables and reports the best-of-k wall
time per backend plus the speedup. The compiled extension is optional;
when it is missing only the fallback column is shown.

    python3 benchmarks/bench_kernels.py --sizes 12,16,18 --repeats 5
"""

from __future__ import annotations

import argparse
import time

import numpy as np

import monocert._kernels_py as pure

try:
    import monocert._kernels as compiled
except ImportError:
    compiled = None


def monotone_table(n: int, rng: np.random.Generator) -> np.ndarray:
    t = rng.integers(0, 2, size=1 << n, dtype=np.uint8)
    for i in range(n):
        t3 = t.reshape(-1, 2, 1 << i)
        np.maximum(t3[:, 1, :], t3[:, 0, :], out=t3[:, 1, :])
    return t


def best_of(repeats: int, fn, *args) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def cases(n: int, rng: np.random.Generator):
    table = monotone_table(n, rng)
    real = table.astype(np.float64) * rng.uniform(1, 2)
    real_n = min(n, 12)  # subset scan is quadratic in the table size
    real_small = monotone_table(real_n, rng).astype(np.float64)
    yield "certificate_sizes", (table, n), n
    yield "min_true_weight_below", (table, n), n
    yield "min_false_coweight_above", (table, n), n
    yield "first_monotone_violation", (real, n), n
    yield "certificate_sizes_real", (real_small, real_n), real_n


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="12,16,18",
                        help="comma-separated table dimensions")
    parser.add_argument("--repeats", type=int, default=5,
                        help="timing repetitions; the best is kept")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]

    header = f"{'kernel':28} {'n':>3} {'python':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for n in sizes:
        rng = np.random.default_rng(args.seed + n)
        for name, call_args, shown_n in cases(n, rng):
            t_py = best_of(args.repeats, getattr(pure, name), *call_args)
            if compiled is None:
                print(f"{name:28} {shown_n:>3} {t_py * 1e3:>8.2f}ms {'-':>10} {'-':>8}")
                continue
            t_c = best_of(args.repeats, getattr(compiled, name), *call_args)
            ratio = t_py / t_c if t_c > 0 else float("inf")
            print(f"{name:28} {shown_n:>3} {t_py * 1e3:>8.2f}ms "
                  f"{t_c * 1e3:>8.2f}ms {ratio:>7.1f}x")
    if compiled is None:
        print("\ncompiled extension not built; showing the fallback only")


if __name__ == "__main__":
    main()
