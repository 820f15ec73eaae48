"""Pure-Python (numpy) implementations of the hot kernels.

Semantics match `_ckernels` exactly; every arithmetic step is exact. The
membership products use float64 BLAS only after proving the values stay below
2**53 (integers are represented exactly there), otherwise exact int64.
"""

from functools import lru_cache

import numpy as np

_FLOAT_EXACT_LIMIT = 1 << 52


@lru_cache(maxsize=None)
def _compositions_cached(parts: int, total: int, bound: int):
    """int64 array of all vectors in [0..bound]^parts summing to total."""
    if parts == 1:
        if 0 <= total <= bound:
            return np.array([[total]], dtype=np.int64)
        return np.empty((0, 1), dtype=np.int64)
    blocks = []
    for v in range(min(bound, total) + 1):
        sub = _compositions_cached(parts - 1, total - v, bound)
        if len(sub):
            first = np.full((len(sub), 1), v, dtype=np.int64)
            blocks.append(np.hstack([first, sub]))
    if not blocks:
        return np.empty((0, parts), dtype=np.int64)
    return np.vstack(blocks)


def count_candidates(n: int, t: int, total: int) -> int:
    """Exact count of candidate vectors, for budget checks (no enumeration)."""
    @lru_cache(maxsize=None)
    def rec(parts: int, rem: int) -> int:
        if parts == 0:
            return 1 if rem == 0 else 0
        return sum(rec(parts - 1, rem - v) for v in range(min(t, rem) + 1))
    return rec(n, total)


def count_points(adjs, n: int, t: int, total: int) -> int:
    """Number of vectors in [0..t]^n with coordinate sum `total` lying in the
    union of the simplices described by `adjs`.

    adjs: int64 array (m, n, n); a point p belongs to simplex s iff every entry
    of adjs[s] @ p is >= 0 (rows are sign-fixed scaled barycentric forms).
    """
    adjs = np.ascontiguousarray(adjs, dtype=np.int64)
    pts = _compositions_cached(n, total, t)
    if len(pts) == 0:
        return 0
    max_abs = int(np.abs(adjs).max()) if adjs.size else 0
    exact_as_float = n * max_abs * max(t, 1) < _FLOAT_EXACT_LIMIT
    if exact_as_float:
        pts_f = pts.astype(np.float64)
        mats = adjs.astype(np.float64)
    remaining = np.arange(len(pts))
    count = 0
    for s in range(len(adjs)):
        if len(remaining) == 0:
            break
        if exact_as_float:
            prod = pts_f[remaining] @ mats[s].T
            inside = (prod >= 0).all(axis=1)
        else:
            prod = pts[remaining] @ adjs[s].T
            inside = (prod >= 0).all(axis=1)
        count += int(inside.sum())
        remaining = remaining[~inside]
    return count


def sweep_faces(intersection_masks, r_mask: int, nverts: int) -> int:
    """Sweep all 2^nverts faces: old(F) must equal (F does not contain r_mask).

    Returns -1 when the interval property holds, else the first failing face
    as a local bitmask.
    """
    faces = np.arange(1 << nverts, dtype=np.int64)
    if intersection_masks:
        inters = np.asarray(list(intersection_masks), dtype=np.int64)
        old = ((faces[:, None] & ~inters[None, :]) == 0).any(axis=1)
    else:
        old = np.zeros(len(faces), dtype=bool)
    in_interval = (faces & r_mask) == r_mask
    mismatch = old == in_interval
    if mismatch.any():
        return int(faces[mismatch][0])
    return -1
