"""Independent lattice-point oracle for the stable subpolytopes.

Counts integer points of dilates by exact barycentric membership against the
triangulation (never via the shelling, so the two h* routes stay independent),
then solves for the h*-vector in the binomial basis, where the system is unit
lower triangular and stays in exact integers.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from .errors import InternalInconsistencyError, ParameterError, ResourceBudgetError
from .exactlinalg import integer_adjugate
from .polynomials import IntPolynomial
from .triangulation import enumerate_triangulation, require_full_dimensional
from . import _kernels
from ._kernels import _pykernels

DEFAULT_CANDIDATE_BUDGET = 50_000_000


@dataclass(frozen=True)
class EhrhartData:
    n: int
    k: int
    r: int
    counts: tuple[int, ...]
    ehrhart: tuple[Fraction, ...]  # monomial-basis coefficients, exact
    hstar: IntPolynomial

    def to_json(self) -> dict:
        return {
            "n": self.n, "k": self.k, "r": self.r,
            "counts": list(self.counts),
            "ehrhart_rational": [[str(c.numerator), str(c.denominator)]
                                 for c in self.ehrhart],
            "hstar": [self.hstar[i] for i in range(self.n)],
        }


@lru_cache(maxsize=None)
def _membership_forms(n: int, k: int, r: int):
    """Sign-fixed integer barycentric forms, one (n x n) block per simplex.

    For vertices v_1..v_n (columns of V), the barycentric coordinates of p are
    adj(V) p / det(V); unimodularity makes them integral on lattice points, so
    membership is sign(det) * adj(V) p >= 0 componentwise.
    """
    tri = enumerate_triangulation(n, k, r)
    blocks = []
    for s in tri.simplices:
        cols = [[s.vertices[c][row] for c in range(n)] for row in range(n)]
        adj, det = integer_adjugate(cols)
        if abs(det) != k:
            raise InternalInconsistencyError(
                f"simplex determinant {det} is not +-{k}; not unimodular?")
        sign = 1 if det > 0 else -1
        blocks.append([[sign * x for x in row] for row in adj])
    arr = np.array(blocks, dtype=np.int64)
    return tri, arr


def count_lattice_points(n: int, k: int, r: int, t: int,
                         max_candidates: int = DEFAULT_CANDIDATE_BUDGET) -> int:
    """Exact number of integer points in the t-th dilate of the stable subpolytope."""
    require_full_dimensional(n, k, r)
    if t < 0:
        raise ParameterError(f"dilation factor t={t} must be nonnegative")
    if t == 0:
        return 1
    n_candidates = _pykernels.count_candidates(n, t, t * k)
    if n_candidates > max_candidates:
        raise ResourceBudgetError(
            f"{n_candidates} candidate points exceed the budget {max_candidates}; "
            f"try a smaller t")
    _, forms = _membership_forms(n, k, r)
    return int(_kernels.count_points(forms, n, t, t * k))


def _binomial_basis_solve(counts: list[int], d: int) -> IntPolynomial:
    """Solve counts[t] = sum_i h_i * C(t + d - i, d); unit triangular, exact."""
    h = []
    for t_val, target in enumerate(counts):
        acc = sum(h[i] * comb(t_val + d - i, d) for i in range(len(h)))
        h.append(target - acc)
    if any(c < 0 for c in h):
        raise InternalInconsistencyError(
            f"negative h* coefficient in {h}; triangulation or membership bug")
    return IntPolynomial(h)


def _monomial_coefficients(h: IntPolynomial, d: int) -> tuple[Fraction, ...]:
    """Exact monomial-basis coefficients of t -> sum_i h_i C(t + d - i, d)."""
    coeffs = [Fraction(0)] * (d + 1)
    fact = Fraction(1)
    for j in range(2, d + 1):
        fact *= j
    for i, hi in enumerate(h.coeffs):
        if hi == 0:
            continue
        # C(t + d - i, d) = prod_{j=1..d} (t + d - i - j + 1) / d!
        poly = [Fraction(1)]
        for j in range(1, d + 1):
            poly = _poly_mul_linear(poly, Fraction(d - i - j + 1))
        for deg, c in enumerate(poly):
            coeffs[deg] += hi * c / fact
    return tuple(coeffs)


def _poly_mul_linear(poly: list[Fraction], const: Fraction) -> list[Fraction]:
    """poly(t) * (t + const), coefficients little-endian."""
    out = [Fraction(0)] * (len(poly) + 1)
    for i, c in enumerate(poly):
        out[i] += const * c
        out[i + 1] += c
    return out


def ehrhart_hstar(n: int, k: int, r: int,
                  max_candidates: int = DEFAULT_CANDIDATE_BUDGET) -> EhrhartData:
    """Counts for t = 0..n-1, the exact Ehrhart polynomial, and the h*-vector."""
    require_full_dimensional(n, k, r)
    d = n - 1
    counts = [count_lattice_points(n, k, r, t, max_candidates) for t in range(n)]
    h = _binomial_basis_solve(counts, d)
    ehr = _monomial_coefficients(h, d)
    for t_val, target in enumerate(counts):  # the basis change must reproduce counts
        value = sum(c * t_val ** i for i, c in enumerate(ehr))
        if value != target:
            raise InternalInconsistencyError(
                f"Ehrhart polynomial does not reproduce count at t={t_val}")
    return EhrhartData(n, k, r, tuple(counts), ehr, h)
