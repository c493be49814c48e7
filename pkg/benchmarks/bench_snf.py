"""Benchmark the pure vs compiled Smith normal form kernels.

Workloads: seeded random sparse matrices and the boundary matrices of real
smash-product models.  Both kernels must produce identical invariant factors;
the script asserts that along the way.

Run:  python3 benchmarks/bench_snf.py
"""

import random
import time

from polysmash import _snf_py
from polysmash.complexes import simplex_boundary
from polysmash.exactlin import _fix_divisibility
from polysmash.smashmodel import reduction_path_model

try:
    from polysmash import _snf_cy
except ImportError:
    _snf_cy = None


def random_entries(rng, rows, cols, density, lo=-9, hi=9):
    out = {}
    for i in range(rows):
        for j in range(cols):
            if rng.random() < density:
                v = rng.randint(lo, hi)
                if v:
                    out[(i, j)] = v
    return out


def boundary_workload():
    """Boundary matrices of the reduction-path model over the boundary of the
    4-simplex with J = (1, 1, 1, 1, 1): the doubled complex lives on 10
    vertices, so these are the matrices homology computations actually see."""
    K = simplex_boundary(4)
    cc = reduction_path_model(K, (1,) * 5)
    return [
        (f"boundary d={d} ({M.rows}x{M.cols})", dict(M.entries), M.rows, M.cols)
        for d, M in sorted(cc.boundaries.items())
    ]


def random_workload():
    # kept modest: entries grow super fast under fraction-free elimination,
    # and large dense-ish random matrices blow up in either kernel.  The
    # boundary matrices below are the realistic workload (entries +-1).
    rng = random.Random(42)
    cases = []
    for rows, cols, density, hi in [(30, 30, 0.1, 9), (60, 60, 0.06, 3),
                                    (100, 120, 0.03, 1)]:
        entries = random_entries(rng, rows, cols, density, -hi, hi)
        cases.append((f"random {rows}x{cols} density {density}", entries, rows, cols))
    return cases


def time_kernel(kernel, entries, rows, cols, repeats=3):
    best = None
    result = None
    for _ in range(repeats):
        work = dict(entries)
        t0 = time.perf_counter()
        result = kernel.snf_diagonal(work, rows, cols)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def main():
    cases = random_workload() + boundary_workload()
    print(f"{'case':44s} {'pure':>10s} {'compiled':>10s} {'speedup':>8s}")
    for name, entries, rows, cols in cases:
        t_py, d_py = time_kernel(_snf_py, entries, rows, cols)
        line = f"{name:44s} {t_py * 1e3:8.1f}ms"
        if _snf_cy is not None:
            t_cy, d_cy = time_kernel(_snf_cy, entries, rows, cols)
            assert _fix_divisibility(d_py) == _fix_divisibility(d_cy), name
            line += f" {t_cy * 1e3:8.1f}ms {t_py / t_cy:7.2f}x"
        else:
            line += "   (compiled kernel unavailable)"
        print(line)


if __name__ == "__main__":
    main()
