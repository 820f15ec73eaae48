# cython: language_level=3
"""Compiled hot kernels: lattice-point membership counting and the face sweep.

Same contracts as `_pykernels`; all arithmetic on 64-bit integers, magnitudes
are bounded by the callers well below overflow.
"""

from libc.stdlib cimport free, malloc


def count_points(adjs, int n, int t, long long total):
    """Count vectors in [0..t]^n with coordinate sum `total` inside the union
    of simplices; adjs is an int64 (m, n, n) array of sign-fixed barycentric forms."""
    cdef long long[:, :, ::1] a = adjs
    cdef int m = a.shape[0]
    cdef long long* x = <long long*> malloc(n * sizeof(long long))
    if x == NULL:
        raise MemoryError()
    cdef long long count = 0
    try:
        count = _walk(a, m, n, t, total, x, 0)
    finally:
        free(x)
    return count


cdef long long _walk(long long[:, :, ::1] a, int m, int n, int t,
                     long long rem, long long* x, int pos):
    cdef long long count = 0
    cdef long long v, lo, hi
    if pos == n - 1:
        if 0 <= rem <= t:
            x[pos] = rem
            if _member(a, m, n, x):
                return 1
        return 0
    lo = rem - <long long> t * (n - 1 - pos)
    if lo < 0:
        lo = 0
    hi = rem if rem < t else t
    for v in range(lo, hi + 1):
        x[pos] = v
        count += _walk(a, m, n, t, rem - v, x, pos + 1)
    return count


cdef bint _member(long long[:, :, ::1] a, int m, int n, long long* x):
    cdef int s, i, j
    cdef long long acc
    cdef bint ok
    for s in range(m):
        ok = True
        for i in range(n):
            acc = 0
            for j in range(n):
                acc += a[s, i, j] * x[j]
            if acc < 0:
                ok = False
                break
        if ok:
            return True
    return False


def sweep_faces(intersection_masks, long long r_mask, int nverts):
    """Sweep all 2^nverts faces against the earlier-intersection masks.

    Returns -1 when old(F) == (F does not contain r_mask) for every face F,
    else the first failing face as a local bitmask.
    """
    cdef int m = len(intersection_masks)
    cdef long long* inters = NULL
    cdef long long F, limit = 1LL << nverts
    cdef int i
    cdef bint old, interval
    if m:
        inters = <long long*> malloc(m * sizeof(long long))
        if inters == NULL:
            raise MemoryError()
        for i in range(m):
            inters[i] = intersection_masks[i]
    try:
        for F in range(limit):
            old = False
            for i in range(m):
                if F & ~inters[i] == 0:
                    old = True
                    break
            interval = (F & r_mask) == r_mask
            if old == interval:
                return F
    finally:
        if inters != NULL:
            free(inters)
    return -1
