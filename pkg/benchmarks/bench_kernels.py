"""Benchmark the compiled kernels against the pure-numpy twins.

Run from the repository root:

    python3 benchmarks/bench_kernels.py [--dims 4 8 16] [--products 200000]

Times the raw triple product and the RK4 translation flow, the two hot paths.
"""
import argparse
import time

import numpy as np

from spinfactor import _kernels_py

try:
    from spinfactor import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def time_products(kernels, dim, count, rng):
    a = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    b = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    c = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    fn = kernels.triple_product
    start = time.perf_counter()
    for _ in range(count):
        fn(a, b, c)
    return time.perf_counter() - start


def time_flow(kernels, dim, trajectories, rng):
    total = 0.0
    for _ in range(trajectories):
        a = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        z = np.zeros(dim, dtype=complex)
        start = time.perf_counter()
        kernels.rk4_flow(a, z, 2.0, 1e-3)
        total += time.perf_counter() - start
    return total


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dims", type=int, nargs="+", default=[4, 8, 16])
    parser.add_argument("--products", type=int, default=200_000)
    parser.add_argument("--trajectories", type=int, default=50)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    backends = [("python", _kernels_py)]
    if _kernels_c is not None:
        backends.append(("compiled", _kernels_c))
    else:
        print("compiled kernel not built; timing the pure backend only")

    print(f"{'kernel':<22}{'dim':>5}{'backend':>10}{'time [s]':>12}{'per call':>14}")
    for dim in args.dims:
        rows = {}
        for name, kernels in backends:
            rng = np.random.default_rng(args.seed)
            elapsed = time_products(kernels, dim, args.products, rng)
            rows[name] = elapsed
            print(f"{'triple_product x' + str(args.products):<22}{dim:>5}{name:>10}"
                  f"{elapsed:>12.3f}{elapsed / args.products * 1e9:>11.0f} ns")
        if len(rows) == 2:
            print(f"{'':<27}{'speedup':>10}{rows['python'] / rows['compiled']:>11.1f}x")
    for dim in args.dims:
        rows = {}
        for name, kernels in backends:
            rng = np.random.default_rng(args.seed)
            elapsed = time_flow(kernels, dim, args.trajectories, rng)
            rows[name] = elapsed
            per = elapsed / (args.trajectories * 2000 * 4)
            print(f"{'rk4_flow tau=2 x' + str(args.trajectories):<22}{dim:>5}{name:>10}"
                  f"{elapsed:>12.3f}{per * 1e9:>11.0f} ns")
        if len(rows) == 2:
            print(f"{'':<27}{'speedup':>10}{rows['python'] / rows['compiled']:>11.1f}x")


if __name__ == "__main__":
    main()
