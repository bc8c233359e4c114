"""Compare the numba and numpy kernel backends.

Runs each kernel on Thue-Morse data with both implementations, checks the
outputs agree, and prints best-of-N wall times. The first numba call is
timed separately as JIT/cache warm-up.

    python3 benchmarks/bench_kernels.py --horizon 65536 --repeat 5
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from wordperm import kernels_numba, kernels_numpy
from wordperm.perms import shift_keys
from wordperm.words import Word


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def same(x, y):
    if isinstance(x, tuple):
        return all(same(a, b) for a, b in zip(x, y))
    return np.array_equal(np.asarray(x), np.asarray(y))


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--word", default="thue-morse")
    ap.add_argument("--horizon", type=int, default=2 ** 16)
    ap.add_argument("--len", type=int, default=24, help="subpermutation length")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    word = Word(args.word)
    n, H = args.len, args.horizon
    arr = np.ascontiguousarray(word.prefix(H + 64 * n))
    keys = shift_keys(word, H + n, n + 1)
    starts = np.arange(0, H, 7, dtype=np.int64)
    cap = 16 * n

    cases = {
        "first_mismatch": lambda m: (lambda: m.first_mismatch(arr, 0, 12, H)),
        "window_ranks": lambda m: (lambda: [m.window_ranks(arr, a, n, cap)
                                            for a in range(0, 2000)]),
        "refine_counts": lambda m: (lambda: m.refine_counts(keys, n, H)),
        "window_ranks_batch": lambda m: (lambda: m.window_ranks_batch(keys, starts, n)),
    }

    print(f"word={args.word} horizon={H} len={n} repeat={args.repeat}")
    print(f"{'kernel':<20}{'numpy s':>12}{'numba s':>12}{'warm-up s':>12}{'speedup':>10}  agree")
    for name, make in cases.items():
        t0 = time.perf_counter()
        make(kernels_numba)()
        warm = time.perf_counter() - t0
        t_np, out_np = best_of(make(kernels_numpy), args.repeat)
        t_nb, out_nb = best_of(make(kernels_numba), args.repeat)
        if name == "window_ranks":
            agree = all(same(a, b) for a, b in zip(out_np, out_nb))
        else:
            agree = same(out_np, out_nb)
        print(f"{name:<20}{t_np:>12.5f}{t_nb:>12.5f}{warm:>12.3f}{t_np / t_nb:>10.1f}  {agree}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
