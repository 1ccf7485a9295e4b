"""Benchmark the compiled kernel backend against the numpy reference.

Both implementations are imported directly (bypassing the env-var switch)
so a single run times them side by side and checks agreement.

Usage: python benchmarks/bench_kernels.py [--sizes 200,500,1000]
"""

import argparse
import time

import numpy as np

from kreinpert._kernels import BACKEND, _ref

try:
    from kreinpert._kernels import _fast
except ImportError:
    _fast = None


def timeit(fn, *args, repeats=5):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", default="200,500,1000")
    parser.add_argument("--grid", type=int, default=96, help="fd_residual grid edge")
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    print(f"active backend: {BACKEND}")
    if _fast is None:
        print("compiled backend unavailable; timing reference only")
    rng = np.random.default_rng(0)
    s = np.sqrt(2.0 + 1.0j)

    print(f"\n{'kernel':<18}{'size':>8}{'ref (ms)':>12}{'fast (ms)':>12}{'speedup':>9}{'max |diff|':>12}")
    for n in sizes:
        X = rng.uniform(-2, 2, (n, 3))
        Y = rng.uniform(-2, 2, (n, 3))
        c = rng.standard_normal(n) + 1j * rng.standard_normal(n)

        t_ref, m_ref = timeit(_ref.yukawa_matrix, s, X, Y)
        if _fast is not None:
            t_fast, m_fast = timeit(_fast.yukawa_matrix, s, X, Y)
            print(f"{'yukawa_matrix':<18}{n:>8}{1e3 * t_ref:>12.3f}{1e3 * t_fast:>12.3f}"
                  f"{t_ref / t_fast:>9.2f}{np.max(np.abs(m_ref - m_fast)):>12.2e}")
        else:
            print(f"{'yukawa_matrix':<18}{n:>8}{1e3 * t_ref:>12.3f}{'-':>12}{'-':>9}{'-':>12}")

        t_ref, v_ref = timeit(_ref.point_sum, s, Y[: min(n, 50)], c[: min(n, 50)], X)
        if _fast is not None:
            t_fast, v_fast = timeit(_fast.point_sum, s, Y[: min(n, 50)], c[: min(n, 50)], X)
            print(f"{'point_sum':<18}{n:>8}{1e3 * t_ref:>12.3f}{1e3 * t_fast:>12.3f}"
                  f"{t_ref / t_fast:>9.2f}{np.max(np.abs(v_ref - v_fast)):>12.2e}")

    g = args.grid
    psi = (rng.standard_normal((g, g, g)) + 1j * rng.standard_normal((g, g, g)))
    mask = np.ones((g, g, g), dtype=np.uint8)
    t_ref, r_ref = timeit(_ref.fd_residual_norms, psi, 0.01, 1.5 + 0.0j, mask, repeats=3)
    if _fast is not None:
        t_fast, r_fast = timeit(_fast.fd_residual_norms, psi, 0.01, 1.5 + 0.0j, mask, repeats=3)
        diff = max(abs(a - b) for a, b in zip(r_ref, r_fast))
        print(f"{'fd_residual_norms':<18}{g}^3{1e3 * t_ref:>11.3f}{1e3 * t_fast:>12.3f}"
              f"{t_ref / t_fast:>9.2f}{diff:>12.2e}")
    else:
        print(f"{'fd_residual_norms':<18}{g}^3{1e3 * t_ref:>11.3f}")


if __name__ == "__main__":
    main()
