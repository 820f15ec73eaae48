#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the two hot paths on representative instances: lattice-point membership
counting (the Ehrhart oracle inner loop) and the exhaustive face sweep (the
shelling verifier). Run after `python setup.py build_ext --inplace` or an
editable install; if the extension is missing only the fallback is timed.
"""

import time

import numpy as np

from hypersimplex._kernels import _pykernels
from hypersimplex.ehrhart import _membership_forms
from hypersimplex.shelling import shelling_order, verify_shelling

try:
    from hypersimplex._kernels import _ckernels
except ImportError:
    _ckernels = None


def _time(fn, repeat=3):
    best = float("inf")
    value = None
    for _ in range(repeat):
        start = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - start)
    return value, best


def bench_count_points():
    print("lattice-point membership counting")
    print(f"{'instance':<22}{'python':>12}{'compiled':>12}{'speedup':>10}")
    for n, k, r, t in [(8, 2, 1, 6), (8, 2, 2, 7), (9, 2, 2, 6), (7, 3, 2, 5)]:
        _, forms = _membership_forms(n, k, r)
        total = t * k
        py_val, py_t = _time(lambda: _pykernels.count_points(forms, n, t, total))
        label = f"(n={n},k={k},r={r},t={t})"
        if _ckernels is None:
            print(f"{label:<22}{py_t:>11.3f}s{'-':>12}{'-':>10}")
            continue
        c_val, c_t = _time(lambda: _ckernels.count_points(forms, n, t, total))
        assert c_val == py_val, (label, c_val, py_val)
        print(f"{label:<22}{py_t:>11.3f}s{c_t:>11.3f}s{py_t / c_t:>9.1f}x")


def _sweep_workload(masks_sets, backend):
    total = 0
    for inters, r_mask, nv in masks_sets:
        total += backend.sweep_faces(inters, r_mask, nv)
    return total


def bench_sweep():
    print("\nexhaustive face sweep")
    rng = np.random.default_rng(11)
    workload = []
    for _ in range(4000):
        nv = 11
        m = int(rng.integers(4, 12))
        full = (1 << nv) - 1
        inters = [int(rng.integers(0, full)) for _ in range(m)]
        r_mask = 0
        for i in inters:
            r_mask |= full & ~i
        workload.append((inters, r_mask & int(rng.integers(0, full)), nv))
    py_val, py_t = _time(lambda: _sweep_workload(workload, _pykernels), repeat=1)
    print(f"{'4000 sweeps @ n=11':<22}{py_t:>11.3f}s", end="")
    if _ckernels is None:
        print(f"{'-':>12}{'-':>10}")
    else:
        c_val, c_t = _time(lambda: _sweep_workload(workload, _ckernels), repeat=1)
        assert c_val == py_val
        print(f"{c_t:>11.3f}s{py_t / c_t:>9.1f}x")


def bench_verifier_end_to_end():
    print("\nverifier end to end (order construction + exhaustive sweep)")
    for n, r in [(10, 1), (11, 1)]:
        cells = [s.simplex for s in shelling_order(n, r)]
        _, t = _time(lambda: verify_shelling(cells, exhaustive=True), repeat=1)
        print(f"(n={n},r={r}) {len(cells)} cells: {t:.3f}s "
              f"[active backend: {'compiled' if _ckernels else 'python'}]")


if __name__ == "__main__":
    bench_count_points()
    bench_sweep()
    bench_verifier_end_to_end()
