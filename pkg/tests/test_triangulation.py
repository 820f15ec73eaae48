"""Circuit cells, enumeration counts, and unimodularity."""

from itertools import permutations

import pytest

from hypersimplex.core import charvec_support
from hypersimplex.errors import ParameterError, UnsupportedParametersError
from hypersimplex.triangulation import (Simplex, circuit_vertices,
                                        descent_count, enumerate_triangulation,
                                        eulerian_number,
                                        is_full_dimensional,
                                        permutation_is_circuit,
                                        _perms_with_descents,
                                        simplex_from_omega,
                                        simplex_is_unimodular)
from hypersimplex.core import sort_pair


def test_permutation_is_circuit_examples():
    assert permutation_is_circuit(5, 2, (3, 1, 4, 2, 5))
    assert not permutation_is_circuit(5, 2, (1, 2, 3, 4, 5))
    assert permutation_is_circuit(9, 2, (4, 5, 6, 1, 2, 3, 7, 8, 9))


def test_permutation_is_circuit_rejects_non_permutation():
    with pytest.raises(ParameterError):
        permutation_is_circuit(5, 2, (1, 1, 2, 3, 4))


def test_circuit_vertices_worked_example():
    verts = circuit_vertices(5, 2, (3, 1, 4, 2, 5))
    assert verts == ((1, 0, 1, 0, 0), (1, 0, 0, 1, 0), (0, 1, 0, 1, 0),
                     (0, 1, 0, 0, 1), (0, 0, 1, 0, 1))


def test_circuit_vertices_supports_for_large_example():
    verts = circuit_vertices(9, 2, (4, 5, 6, 1, 2, 3, 7, 8, 9))
    supports = {charvec_support(v) for v in verts}
    assert {(1, 7), (4, 7), (1, 4)} <= supports


def test_circuit_closes_and_starts_lex_max():
    for omega in [(3, 1, 4, 2, 5), (4, 5, 6, 1, 2, 3, 7, 8, 9)]:
        verts = circuit_vertices(len(omega), 2, omega)
        assert verts[0] == max(verts)
        assert len(set(verts)) == len(omega)


def test_descent_generation_matches_filtering():
    # the generator must agree with brute-force filtering of the whole group
    for m in range(1, 7):
        for d in range(m):
            expected = sorted(p for p in permutations(range(1, m + 1))
                              if descent_count(p) == d)
            got = sorted(_perms_with_descents(m, d))
            assert got == expected


@pytest.mark.parametrize("n", range(4, 10))
def test_triangulation_count_is_eulerian(n):
    for k in range(1, n):
        if k == 1 or k == n - 1:
            continue  # simplices themselves; still fine but trivial
        tri = enumerate_triangulation(n, k, 1)
        assert len(tri.simplices) == eulerian_number(n - 1, k - 1)


def test_triangulation_counts_examples():
    assert len(enumerate_triangulation(5, 2, 1).simplices) == 11
    assert len(enumerate_triangulation(5, 2, 2).simplices) == 1
    assert len(enumerate_triangulation(6, 2, 2).simplices) == 8


def test_triangulation_is_sorted_on_omega_and_stable():
    tri = enumerate_triangulation(7, 2, 2)
    omegas = [s.omega for s in tri.simplices]
    assert omegas == sorted(omegas)
    assert all(s.stability_level() >= 2 for s in tri.simplices)


def test_nesting_of_levels():
    for n, k in [(7, 2), (8, 2), (9, 3)]:
        for r in range(1, n // k):
            if not (is_full_dimensional(n, k, r) and is_full_dimensional(n, k, r + 1)):
                continue
            outer = {s.omega for s in enumerate_triangulation(n, k, r).simplices}
            inner = {s.omega for s in enumerate_triangulation(n, k, r + 1).simplices}
            assert inner <= outer


def test_every_enumerated_simplex_is_unimodular():
    for n in range(4, 9):
        for k in range(2, n - 1):
            for s in enumerate_triangulation(n, k, 1).simplices:
                assert simplex_is_unimodular(s)


def test_unimodular_examples():
    assert simplex_is_unimodular(simplex_from_omega(5, 2, (3, 1, 4, 2, 5)))
    deep = enumerate_triangulation(9, 2, 4).simplices
    assert len(deep) == 1 and simplex_is_unimodular(deep[0])


def test_degenerate_vertex_set_is_not_unimodular():
    s = simplex_from_omega(5, 2, (3, 1, 4, 2, 5))
    degenerate = Simplex(5, 2, s.omega, (s.vertices[0],) * 5)
    assert not simplex_is_unimodular(degenerate)


def test_vertices_form_a_sorted_collection():
    for n, k, r in [(6, 2, 1), (7, 3, 1), (8, 3, 2)]:
        for s in enumerate_triangulation(n, k, r).simplices:
            sup = [charvec_support(v) for v in s.vertices]
            for i in range(len(sup)):
                for j in range(i + 1, len(sup)):
                    u, v, _ = sort_pair(sup[i], sup[j], n)
                    assert {u, v} == {sup[i], sup[j]}


def test_dimension_gate():
    assert is_full_dimensional(9, 2, 4)
    assert not is_full_dimensional(8, 2, 4)
    assert is_full_dimensional(8, 3, 2)
    assert is_full_dimensional(9, 3, 2)
    assert not is_full_dimensional(9, 3, 3)
    with pytest.raises(UnsupportedParametersError):
        enumerate_triangulation(9, 3, 3)
    with pytest.raises(UnsupportedParametersError):
        enumerate_triangulation(8, 2, 4)


def test_simplex_json():
    s = simplex_from_omega(5, 2, (3, 1, 4, 2, 5))
    blob = s.to_json()
    assert blob["omega"] == [3, 1, 4, 2, 5]
    assert blob["vertices"][0] == [1, 0, 1, 0, 0]
    tri = enumerate_triangulation(5, 2, 2)
    assert tri.to_json()["count"] == 1


def test_volume_identity_with_hstar():
    from hypersimplex.hstar import hstar_via_shelling
    for n, r in [(6, 1), (7, 1), (7, 2), (8, 2), (9, 3)]:
        tri = enumerate_triangulation(n, 2, r)
        assert len(tri.simplices) == hstar_via_shelling(n, r).poly(1)


def test_full_hypersimplex_volume_closed_form():
    for n in range(5, 10):
        assert len(enumerate_triangulation(n, 2, 1).simplices) == 2 ** (n - 1) - n
