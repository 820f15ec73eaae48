"""Exact toolkit for stable hypersimplices.

Circuit triangulations of the (n, k)-hypersimplex and its r-stable
subpolytopes, explicit shelling orders for k = 2 with closed-form restriction
faces, h*-polynomials by four independent routes, and a harness for the
conjectured shelling order at k > 2.
"""

from .core import (StableFamily, circular_distance, enumerate_r_stable,
                   is_r_stable, is_sort_closed, sort_pair)
from .ehrhart import EhrhartData, count_lattice_points, ehrhart_hstar
from .hstar import (HStarResult, InhibitionDiagram, hstar_closed_form,
                    hstar_interior, hstar_via_shelling, inhibition_diagram,
                    stab3_discrepancy)
from .orders import (CircuitTuple, ConjectureReport, check_general_conjecture,
                     circuit_tuple, extended_descents, general_compare,
                     r_adjacent_descents)
from .polynomials import (BivariatePoly, IntPolynomial, SimpleGraph, dangelo_p,
                          fibonacci_poly, independence_poly, interior_hstar,
                          lucas_poly, shape_predicates)
from .shelling import (Composition, LatticePath, ShellingStep, SimplexLabel,
                       VerifyResult, label_simplex, lattice_path,
                       minimal_new_face, restriction_face, shelling_order,
                       simplex_from_composition, verify_shelling)
from .triangulation import (Simplex, Triangulation, circuit_vertices,
                            enumerate_triangulation, eulerian_number,
                            permutation_is_circuit, simplex_is_unimodular)
from ._kernels import backend as kernel_backend

__version__ = "0.1.0"
