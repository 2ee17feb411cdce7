"""Compare the compiled and pure-Python radix-2 kernels.

Run ``python3 benchmarks/bench_fft.py``.  Two tables are printed: the raw
batched FFT, and a full forward+inverse graph transform on K(4,2).
Timings are the best of several repeats.
"""
import argparse
import time

import numpy as np

from qgfft import build_basis, complete_bipartite, fft_forward, fft_inverse
from qgfft.fft import available_backends, radix2_fft


def best_time(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernel(sizes, rows, repeats, backends):
    rng = np.random.default_rng(0)
    print(f"radix2_fft, {rows} rows (seconds)")
    print("N".ljust(8) + "".join(b.rjust(12) for b in backends) + "    numpy.fft")
    for n in sizes:
        data = rng.normal(size=(rows, n)) + 1j * rng.normal(size=(rows, n))
        cells = [best_time(lambda b=b: radix2_fft(data, backend=b), repeats) for b in backends]
        ref = best_time(lambda: np.fft.fft(data, axis=-1), repeats)
        print(str(n).ljust(8) + "".join(f"{t:12.5f}" for t in cells) + f"{ref:13.5f}")


def bench_transform(sizes, repeats, backends):
    graph = complete_bipartite(4, 2)
    rng = np.random.default_rng(1)
    print("\nforward+inverse on K(4,2) (seconds)")
    print("N".ljust(8) + "".join(b.rjust(12) for b in backends))
    for n in sizes:
        basis = build_basis(graph, n)
        f = rng.normal(size=graph.refined_size(n)) + 0j
        cells = [
            best_time(lambda b=b: fft_inverse(fft_forward(f, basis, b), basis, b), repeats)
            for b in backends
        ]
        print(str(n).ljust(8) + "".join(f"{t:12.5f}" for t in cells))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-log2", type=int, default=14)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--rows", type=int, default=64)
    args = parser.parse_args()
    backends = available_backends()
    sizes = [2 ** p for p in range(6, args.max_log2 + 1, 2)]
    bench_kernel(sizes, args.rows, args.repeats, backends)
    bench_transform([2 ** p for p in range(10, args.max_log2 + 1)], args.repeats, backends)


if __name__ == "__main__":
    main()
