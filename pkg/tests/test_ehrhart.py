"""Lattice-point oracle: counts, h* solve, and the differential test."""

from fractions import Fraction
from itertools import product
from math import comb

import pytest

from hypersimplex import _kernels
from hypersimplex.core import enumerate_r_stable
from hypersimplex.ehrhart import count_lattice_points, ehrhart_hstar
from hypersimplex.errors import ResourceBudgetError, UnsupportedParametersError
from hypersimplex.hstar import hstar_via_shelling
from hypersimplex.triangulation import enumerate_triangulation


def brute_force_count(n, k, r, t):
    """Membership by exact rational barycentric solve per simplex; test oracle."""
    tri = enumerate_triangulation(n, k, r)
    simplex_vertices = [[list(v) for v in s.vertices] for s in tri.simplices]
    count = 0
    for point in product(range(t + 1), repeat=n):
        if sum(point) != t * k:
            continue
        if any(_in_simplex(vs, point, t) for vs in simplex_vertices):
            count += 1
    return count


def _in_simplex(vertices, point, t):
    n = len(point)
    aug = [[Fraction(vertices[c][row]) for c in range(n)] + [Fraction(point[row])]
           for row in range(n)]
    # plain rational elimination
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return False
        aug[col], aug[piv] = aug[piv], aug[col]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col] / aug[col][col]
                for c in range(col, n + 1):
                    aug[r][c] -= f * aug[col][c]
    lam = [aug[r][n] / aug[r][r] for r in range(n)]
    return all(x >= 0 for x in lam) and sum(lam) == t


def test_counts_against_rational_brute_force():
    for n, k, r, t in [(5, 2, 1, 2), (5, 2, 2, 3), (6, 2, 2, 2), (7, 3, 2, 2)]:
        assert count_lattice_points(n, k, r, t) == brute_force_count(n, k, r, t)


def test_unimodular_simplex_dilates():
    for t in range(6):
        assert count_lattice_points(5, 2, 2, t) == comb(t + 4, 4)


def test_single_dilate_examples():
    assert count_lattice_points(5, 2, 1, 1) == 10
    # every 0/1 point of the two-stable subpolytope is one of its 14 vertices
    assert count_lattice_points(7, 2, 2, 1) == 14
    assert count_lattice_points(7, 2, 2, 1) == len(enumerate_r_stable(7, 2, 2).members)


def test_count_at_one_equals_stable_family_size():
    for n, k, r in [(6, 2, 2), (7, 2, 3), (8, 3, 2), (9, 2, 3)]:
        assert count_lattice_points(n, k, r, 1) == len(enumerate_r_stable(n, k, r).members)


def test_hstar_examples():
    assert list(ehrhart_hstar(5, 2, 1).hstar.coeffs) == [1, 5, 5]
    assert list(ehrhart_hstar(5, 2, 2).hstar.coeffs) == [1]
    assert list(ehrhart_hstar(7, 2, 2).hstar.coeffs) == [1, 7, 14, 7]


def test_counts_fields():
    data = ehrhart_hstar(6, 2, 2)
    assert data.counts[0] == 1
    assert data.counts[1] == len(enumerate_r_stable(6, 2, 2).members)
    # the rational polynomial reproduces every stored count
    for t, c in enumerate(data.counts):
        assert sum(coef * t ** i for i, coef in enumerate(data.ehrhart)) == c


@pytest.mark.parametrize("n,r", [(4, 1), (5, 1), (5, 2), (6, 1), (6, 2),
                                 (7, 1), (7, 2), (7, 3), (8, 1), (8, 2), (8, 3)])
def test_oracle_equals_shelling(n, r):
    assert ehrhart_hstar(n, 2, r).hstar == hstar_via_shelling(n, r).poly


def test_oracle_runs_for_triple_subsets():
    data = ehrhart_hstar(7, 3, 2)
    assert data.hstar(1) == len(enumerate_triangulation(7, 3, 2).simplices)
    assert data.hstar.coeffs[0] == 1


@pytest.mark.skipif(_kernels.backend() != "compiled",
                    reason="pure-python fallback is too slow for this size")
def test_oracle_runs_for_nine_three_two():
    data = ehrhart_hstar(9, 3, 2)
    assert data.hstar(1) == len(enumerate_triangulation(9, 3, 2).simplices)
    assert all(c >= 0 for c in data.hstar.coeffs)


def test_membership_is_order_independent():
    import numpy as np
    from hypersimplex.ehrhart import _membership_forms
    tri, forms = _membership_forms(6, 2, 2)
    a = _kernels.count_points(forms, 6, 2, 4)
    b = _kernels.count_points(np.ascontiguousarray(forms[::-1]), 6, 2, 4)
    assert a == b == count_lattice_points(6, 2, 2, 2)


def test_budget_refusal():
    with pytest.raises(ResourceBudgetError):
        count_lattice_points(9, 2, 1, 8, max_candidates=1000)


def test_dimension_gate():
    with pytest.raises(UnsupportedParametersError):
        ehrhart_hstar(9, 3, 3)


def test_json_shape():
    blob = ehrhart_hstar(5, 2, 2).to_json()
    assert blob["hstar"] == [1, 0, 0, 0, 0]
    assert blob["counts"] == [1, 5, 15, 35, 70]
    assert blob["ehrhart_rational"][0] == ["1", "1"]
