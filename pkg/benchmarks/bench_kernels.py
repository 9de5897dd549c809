"""Compare the numba and numpy kernel backends.

Usage:
    python benchmarks/bench_kernels.py [--n 7] [--graphs 4096] [--repeat 3]

Times canonical forms and switch-iso keys on the same random batch with
both backends, after checking that they agree.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from switchgraphs import _kernels
from switchgraphs.classify import transversal_bits


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main() -> None:
    parser = argparse.ArgumentParser(description="numba vs numpy relabelling kernels")
    parser.add_argument("--n", type=int, default=7)
    parser.add_argument("--graphs", type=int, default=4096)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--transversal", action="store_true",
                        help="use the full n-vertex transversal instead of a random batch")
    args = parser.parse_args()

    n = args.n
    m = n * (n - 1) // 2
    if args.transversal:
        bits = transversal_bits(n)
    else:
        rng = np.random.default_rng(42)
        bits = rng.integers(0, 1 << m, size=args.graphs, dtype=np.uint64)

    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    for name in backends:
        # warm-up also triggers JIT compilation
        _kernels.canonical_batch(bits[:8], n, name)
        _kernels.switch_iso_batch(bits[:8], n, name)
    if len(backends) == 2:
        assert (_kernels.canonical_batch(bits, n, "numba") == _kernels.canonical_batch(bits, n, "numpy")).all()
        assert (_kernels.switch_iso_batch(bits, n, "numba") == _kernels.switch_iso_batch(bits, n, "numpy")).all()

    print(f"bench_kernels n={n} graphs={bits.size} repeat={args.repeat}")
    print(f"{'kernel':<16}{'backend':<8}{'seconds':>10}{'graphs/s':>14}")
    for kernel, fn in (("canonical", _kernels.canonical_batch), ("switch_iso", _kernels.switch_iso_batch)):
        for name in backends:
            sec = best_of(lambda: fn(bits, n, name), args.repeat)
            print(f"{kernel:<16}{name:<8}{sec:>10.4f}{bits.size / sec:>14.0f}")


if __name__ == "__main__":
    main()
