#!/usr/bin/env python3
"""Head-to-head benchmark of the eigensolver kernels.

Times the compiled extension against the pure-Python/numpy twin on centered
adjacency samples and reports the speedup plus the spectrum agreement, so a
kernel change that silently diverges shows up here first.

Usage:
    python benchmarks/bench_eigen.py [--sizes 128,256,512,1024] [--repeat 3]
"""

import argparse
import time

import numpy as np

from graphenergy import eigen, graphs

PYTHON_SIZE_CAP = 1200  # the fallback QL is O(n^2) interpreted; keep runs short


def best_time(kernel, a, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = eigen.eigenvalues(a, kernel=kernel)
        best = min(best, time.perf_counter() - start)
    return best, result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=str, default="128,256,512,1024")
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    backends = eigen.available_backends()
    if "compiled" not in backends:
        print("compiled backend not built; showing the python kernel only")
    sizes = [int(token) for token in args.sizes.split(",")]

    header = f"{'n':>6} {'python (s)':>12} {'compiled (s)':>13} {'speedup':>8} {'max |dlam|':>11}"
    print(f"active backend: {eigen.BACKEND}")
    print(header)
    print("-" * len(header))
    for n in sizes:
        a = graphs.sample_er(n, 0.5, args.seed)
        a = graphs.center(a, 0.5, graphs.PartSizes.singletons(n))
        run_python = n <= PYTHON_SIZE_CAP
        t_py, lam_py = (
            best_time(backends["python"], a, args.repeat) if run_python else (None, None)
        )
        if "compiled" in backends:
            t_cy, lam_cy = best_time(backends["compiled"], a, args.repeat)
        else:
            t_cy, lam_cy = None, None
        speedup = f"{t_py / t_cy:8.1f}" if t_py and t_cy else f"{'-':>8}"
        if lam_py is not None and lam_cy is not None:
            agreement = f"{np.max(np.abs(lam_py - lam_cy)):11.2e}"
        else:
            agreement = f"{'-':>11}"
        py_col = f"{t_py:12.3f}" if t_py is not None else f"{'(skipped)':>12}"
        cy_col = f"{t_cy:13.3f}" if t_cy is not None else f"{'-':>13}"
        print(f"{n:6d} {py_col} {cy_col} {speedup} {agreement}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
