"""Parity between the compiled kernels and the pure-Python fallback."""

import numpy as np
import pytest

from hypersimplex import _kernels
from hypersimplex._kernels import _pykernels
from hypersimplex.ehrhart import _membership_forms

try:
    from hypersimplex._kernels import _ckernels
except ImportError:
    _ckernels = None

needs_compiled = pytest.mark.skipif(_ckernels is None,
                                    reason="compiled kernels not built")


def test_backend_reports():
    assert _kernels.backend() in ("compiled", "python")


def test_candidate_counts():
    assert _pykernels.count_candidates(3, 1, 2) == 3   # permutations of (1,1,0)
    assert _pykernels.count_candidates(4, 2, 4) == 19
    got = len(_pykernels._compositions_cached(4, 4, 2))
    assert got == _pykernels.count_candidates(4, 2, 4)


@needs_compiled
@pytest.mark.parametrize("n,k,r,t", [(5, 2, 1, 3), (6, 2, 2, 4), (7, 2, 3, 2),
                                     (7, 3, 2, 3), (8, 2, 2, 3)])
def test_count_points_backends_agree(n, k, r, t):
    _, forms = _membership_forms(n, k, r)
    a = _ckernels.count_points(forms, n, t, t * k)
    b = _pykernels.count_points(forms, n, t, t * k)
    assert a == b


@needs_compiled
def test_sweep_backends_agree_on_random_instances():
    rng = np.random.default_rng(7)
    for _ in range(200):
        nv = int(rng.integers(3, 11))
        m = int(rng.integers(0, 6))
        inters = [int(rng.integers(0, 1 << nv)) for _ in range(m)]
        r_mask = int(rng.integers(0, 1 << nv))
        a = _ckernels.sweep_faces(inters, r_mask, nv)
        b = _pykernels.sweep_faces(inters, r_mask, nv)
        assert a == b


def test_sweep_semantics_by_hand():
    # cell on 3 vertices, one earlier facet {0,1}: restriction face must be {2}
    inters = [0b011]
    assert _pykernels.sweep_faces(inters, 0b100, 3) == -1
    # wrong restriction face: the empty face is old but contains r_mask=0
    assert _pykernels.sweep_faces(inters, 0b000, 3) == 0b000
    # no earlier intersections and empty restriction face: every face is new
    assert _pykernels.sweep_faces([], 0b000, 3) == -1


def test_float_path_thresholds():
    # tiny instance exercising the exact-int fallback branch
    forms = np.array([[[1, 0], [0, 1]]], dtype=np.int64) * (1 << 60)
    count = _pykernels.count_points(forms, 2, 1, 1)
    assert count == 2  # (0,1) and (1,0) both satisfy the scaled nonnegativity
