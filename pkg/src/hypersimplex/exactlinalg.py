"""Exact integer linear algebra: fraction-free determinants, rank, adjugates.

Everything here works on lists of Python ints (arbitrary precision) so results
are exact by construction; no floating point anywhere.
"""

from fractions import Fraction


def bareiss_determinant(matrix: list[list[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination.

    Intermediate entries stay integral (Bareiss), so no rationals are needed.
    """
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for col in range(n - 1):
        pivot_row = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            sign = -sign
        pivot = m[col][col]
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                m[r][c] = (pivot * m[r][c] - m[r][col] * m[col][c]) // prev
            m[r][col] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def integer_rank(matrix: list[list[int]]) -> int:
    """Rank over Q of an integer matrix, via exact rational elimination."""
    m = [[Fraction(x) for x in row] for row in matrix]
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    rank = 0
    for col in range(cols):
        pivot_row = next((r for r in range(rank, rows) if m[r][col] != 0), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][col]
        for r in range(rank + 1, rows):
            if m[r][col] != 0:
                factor = m[r][col] / pivot
                for c in range(col, cols):
                    m[r][c] -= factor * m[rank][c]
        rank += 1
        if rank == rows:
            break
    return rank


def integer_adjugate(matrix: list[list[int]]) -> tuple[list[list[int]], int]:
    """Return (adj(A), det(A)) with adj(A) integral and adj(A) @ A = det(A) * I.

    Computed by exact rational inversion scaled back by the determinant; the
    scaled entries are asserted integral.
    """
    n = len(matrix)
    det = bareiss_determinant(matrix)
    if det == 0:
        raise ValueError("matrix is singular")
    aug = [[Fraction(matrix[r][c]) for c in range(n)] + [Fraction(int(r == c)) for c in range(n)]
           for r in range(n)]
    for col in range(n):
        pivot_row = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        for c in range(col, 2 * n):
            aug[col][c] /= pivot
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                for c in range(col, 2 * n):
                    aug[r][c] -= factor * aug[col][c]
    adj = []
    for r in range(n):
        row = []
        for c in range(n):
            val = aug[r][n + c] * det
            if val.denominator != 1:
                raise AssertionError("adjugate entry not integral")
            row.append(int(val))
        adj.append(row)
    return adj, det
