#!/usr/bin/env python3
"""Compare the numba and numpy kernel backends on random words.

Times the arch scan (iota) and the circular index (zeta, with and without
early stopping) for growing word lengths, and checks both backends agree.

    python benchmarks/bench_kernels.py --sizes 1e5 1e6 1e7 --alphabet 26
"""

import argparse
import time

import numpy as np

from subwords import _kernels


def best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def zeta_with(impl, letters, nsym, stop_early):
    first = impl.first_occurrences(letters, nsym)
    if (first < 0).any():
        return 0
    starts = np.sort(first) + 1
    counts, _ = impl.scan_conjugates(letters, nsym, starts, stop_early)
    return int(counts.max())


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", nargs="+", type=float, default=[1e5, 1e6, 1e7])
    parser.add_argument("--alphabet", type=int, default=26)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    backends = dict(sorted(_kernels.BACKENDS.items()))
    rng = np.random.default_rng(args.seed)
    warm = rng.integers(0, args.alphabet, size=1000, dtype=np.uint8)
    for impl in backends.values():
        zeta_with(impl, warm, args.alphabet, True)
        impl.arch_ends(warm, args.alphabet)

    header = f"{'n':>10} {'backend':>8} {'iota s':>9} {'zeta s':>9} {'zeta-all s':>11}"
    print(f"|A| = {args.alphabet}, best of {args.repeat}")
    print(header)
    print("-" * len(header))
    for size in args.sizes:
        n = int(size)
        letters = rng.integers(0, args.alphabet, size=n, dtype=np.uint8)
        seen = {}
        for name, impl in backends.items():
            t_iota, ends = best_of(lambda: impl.arch_ends(letters, args.alphabet), args.repeat)
            t_zeta, z = best_of(lambda: zeta_with(impl, letters, args.alphabet, True), args.repeat)
            t_all, z_all = best_of(
                lambda: zeta_with(impl, letters, args.alphabet, False), args.repeat
            )
            seen[name] = (len(ends), z, z_all)
            print(f"{n:>10} {name:>8} {t_iota:>9.4f} {t_zeta:>9.4f} {t_all:>11.4f}")
        if len(set(seen.values())) != 1:
            raise SystemExit(f"backends disagree at n={n}: {seen}")
    print("backends agree on every size")


if __name__ == "__main__":
    main()
