"""h*-polynomials of the pair-subset stable subpolytopes, by several routes.

Routes: the shelling (step counts), closed forms (binomial, Lucas, binomial
power), and the independence-polynomial sum over inhibition diagrams. Closed
forms printed with known internal discrepancies are kept verbatim, marked
advisory, and surfaced by the report machinery rather than silently repaired.
"""

from dataclasses import dataclass
from math import comb

from .core import charvec_support, residue
from .errors import ParameterError, StructuralError, UnsupportedParametersError
from .polynomials import (IntPolynomial, ONE, SimpleGraph, binomial_power,
                          fibonacci_poly, independence_poly, interior_hstar,
                          lucas_poly, shape_predicates)
from .shelling import (_ordered_layer, adjacent_support, layer_simplices,
                       minimal_new_face, shelling_order)
from .triangulation import is_full_dimensional

METHODS = ("shelling", "katzman", "lucas_case", "even_gorenstein",
           "independence_formula", "stab2_closed", "stab3_closed")

ADVISORY_METHODS = ("stab3_closed",)


@dataclass(frozen=True)
class HStarResult:
    n: int
    k: int
    r: int
    method: str
    poly: IntPolynomial

    def to_json(self) -> dict:
        preds = shape_predicates(self.poly)
        padded = [self.poly[i] for i in range(self.n)]  # degree <= n-1 by contract
        return {
            "n": self.n, "k": self.k, "r": self.r, "method": self.method,
            "coeffs": padded,
            "unimodal": preds["unimodal"],
            "log_concave": preds["log_concave"],
            "volume_normalized": self.poly(1),
        }


def hstar_via_shelling(n: int, r: int) -> HStarResult:
    """Sum x^(shelling number) over the shelling; the reference route."""
    steps = shelling_order(n, r)
    coeffs = [0] * n
    for step in steps:
        coeffs[step.shelling_number] += 1
    return HStarResult(n, 2, r, "shelling", IntPolynomial(coeffs))


def katzman_poly(n: int) -> IntPolynomial:
    coeffs = [comb(n, 2 * i) for i in range(n // 2 + 1)]
    coeffs[1] = comb(n, 2) - n
    return IntPolynomial(coeffs)


def stab2_poly(n: int) -> IntPolynomial:
    coeffs = [comb(n, 2 * i) for i in range(n // 2 + 1)]
    coeffs[1] = comb(n, 2) - 2 * n
    coeffs[2] = comb(n, 4) - n * (n - 4)
    return IntPolynomial(coeffs)


def stab3_poly(n: int) -> IntPolynomial:
    """Closed form as printed; advisory (h2, h3 disagree with worked values)."""
    coeffs = [comb(n, 2 * i) for i in range(n // 2 + 1)]
    coeffs[1] = comb(n, 2) - 3 * n
    num2 = n * (7 * n - 55) + 94
    num3 = n ** 3 - 13 * n ** 2 + 40 * n + 16
    if num2 % 2 or num3 % 2:
        raise ParameterError(f"closed form is not integral at n={n}")
    coeffs[2] = comb(n, 4) - num2 // 2
    coeffs[3] = comb(n, 6) - num3 // 2
    return IntPolynomial(coeffs)


def lucas_expanded_sum(n: int) -> IntPolynomial:
    """The binomial/Fibonacci expansion of the narrow-ladder layer sum."""
    if n % 2 == 0 or n < 5:
        raise ParameterError(f"expansion needs odd n >= 5, got {n}")
    r = (n - 1) // 2 - 1
    total = IntPolynomial()
    for i in range(r):
        total = total + binomial_power(i)
    total = total + binomial_power(r).scale(3)
    for i in range(r - 1):
        total = total + binomial_power(i) * fibonacci_poly(2 * r - 2 * i)
    total = total + fibonacci_poly(2 * r + 1)
    return ONE + total.shift(1)


def hstar_closed_form(n: int, r: int, method: str) -> HStarResult:
    """Closed or graph-theoretic formulas; each validates its own preconditions."""
    if method == "katzman":
        if r != 1:
            raise ParameterError(f"katzman needs r=1, got r={r}")
        poly = katzman_poly(n)
    elif method == "lucas_case":
        if n % 2 == 0 or r != n // 2 - 1:
            raise ParameterError(
                f"lucas_case needs odd n and r=floor(n/2)-1, got (n={n}, r={r})")
        poly = lucas_poly(n)
    elif method == "even_gorenstein":
        if n % 2 or n != 2 * r + 2:
            raise ParameterError(f"even_gorenstein needs n=2r+2, got (n={n}, r={r})")
        poly = binomial_power(r + 1)
    elif method == "stab2_closed":
        if r != 2 or n % 2 == 0:
            raise ParameterError(f"stab2_closed needs odd n and r=2, got (n={n}, r={r})")
        poly = stab2_poly(n)
    elif method == "stab3_closed":
        if r != 3 or n % 2 == 0:
            raise ParameterError(f"stab3_closed needs odd n and r=3, got (n={n}, r={r})")
        poly = stab3_poly(n)
    elif method == "independence_formula":
        if not is_full_dimensional(n, 2, r):
            raise UnsupportedParametersError(
                f"(n={n}, k=2, r={r}) is not full-dimensional")
        poly = _independence_formula(n, r)
    else:
        raise ParameterError(f"unknown method {method!r}; choose from {METHODS}")
    return HStarResult(n, 2, r, method, poly)


# ---------------------------------------------------------------------------
# Inhibition diagrams
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InhibitionDiagram:
    """Graph whose independent sets, plus the anchored vertex, are the minimal
    new faces of the layer cells with that maximal anchor."""

    n: int
    r: int
    ell: int
    graph: SimpleGraph

    def independence(self) -> IntPolynomial:
        return independence_poly(self.graph)


def _closed_form_diagram(n: int, j: int, ell: int) -> InhibitionDiagram:
    """Narrow odd ladder (n = 2j+3): induced subpath of the 2j-spot line."""
    # line spots in order: u_1, d_0, u_2, d_1, ..., u_j, d_{j-1}
    spots = []
    for t in range(1, j + 1):
        spots.append(("u", t))
        spots.append(("d", t - 1))
    accessible = set()
    # lower spots d_s carry anchors ell-j+s and activate top-down with ell:
    # d_{j-1},...,d_{j-ell+1} for ell <= j, all of them for ell > j
    for s in range(j):
        if s >= j - ell + 1:
            accessible.add(("d", s))
    if ell >= j + 4:
        t_top = ell - (j + 3)
        for t in range(j - t_top + 1, j + 1):
            accessible.add(("u", t))
    index = {}
    labels = []
    for spot in spots:
        if spot in accessible:
            index[spot] = len(index)
            kind, t = spot
            anchor = residue(n, ell + t) if kind == "u" else residue(n, ell - j + t)
            labels.append(adjacent_support(n, j, anchor))
    edges = []
    for a, b in zip(spots, spots[1:]):
        if a in accessible and b in accessible:
            edges.append((index[a], index[b]))
    graph = SimpleGraph.from_edge_list(len(index), edges, labels)
    return InhibitionDiagram(n, j, ell, graph)


def _recovered_diagram(n: int, j: int, ell: int) -> InhibitionDiagram | None:
    """Generic case: recover the graph from the enumerated minimal new faces."""
    first_label = None
    if n == 2 * j + 2:
        # narrow even layer is the base of its shelling: its first cell has an
        # empty restriction face and belongs to no diagram
        layer = _ordered_layer(n, j, even_base=True)
        first_label = layer[0][0]
    anchor_vec = None
    families = []
    for label, s in layer_simplices(n, j):
        if label.ell != ell:
            continue
        if first_label is not None and label == first_label:
            continue
        face = minimal_new_face(n, j, label)
        supports = {charvec_support(v) for v in face}
        anchor = adjacent_support(n, j, ell)
        if anchor not in supports:
            raise StructuralError(
                f"minimal new face {sorted(supports)} misses its anchor {anchor}")
        anchor_vec = anchor
        families.append(frozenset(supports - {anchor}))
    if anchor_vec is None:
        return None
    family = set(families)
    if len(family) != len(families):
        raise StructuralError(f"duplicate minimal new faces at (n={n}, j={j}, ell={ell})")
    nodes = sorted(set().union(*family)) if family else []
    index = {v: i for i, v in enumerate(nodes)}
    co_occur = set()
    for f in family:
        for a in f:
            for b in f:
                if a < b:
                    co_occur.add((a, b))
    edges = [(index[a], index[b])
             for i, a in enumerate(nodes) for b in nodes[i + 1:]
             if (a, b) not in co_occur]
    graph = SimpleGraph.from_edge_list(len(nodes), edges, nodes)
    # the recovered family must be exactly the independent-set complex
    indep = independence_poly(graph)
    by_size = [0] * (indep.degree + 1)
    for f in family:
        if len(f) > indep.degree:
            raise StructuralError("face family is not the independence complex")
        by_size[len(f)] += 1
    if tuple(by_size) != indep.coeffs:
        raise StructuralError(
            f"face family at (n={n}, j={j}, ell={ell}) is not a flag complex: "
            f"sizes {by_size} vs independence {list(indep.coeffs)}")
    nbr = graph.neighbor_masks()
    for f in family:  # every face must itself be independent
        mask = 0
        for v in f:
            mask |= 1 << index[v]
        for v in f:
            if nbr[index[v]] & mask:
                raise StructuralError("a minimal new face contains an inhibiting pair")
    return InhibitionDiagram(n, j, ell, graph)


def inhibition_diagram(n: int, j: int, ell: int) -> InhibitionDiagram | None:
    """Diagram for one anchor in one layer; None when no cell has that maximal
    anchor (the narrow even layer below its first populated anchor)."""
    if not 1 <= j <= n // 2 - 1:
        raise ParameterError(f"layer j={j} outside 1..floor(n/2)-1 for n={n}")
    if not 1 <= ell <= n:
        raise ParameterError(f"anchor ell={ell} outside 1..{n}")
    if n % 2 == 1 and j == n // 2 - 1:
        return _closed_form_diagram(n, j, ell)
    return _recovered_diagram(n, j, ell)


def _independence_formula(n: int, r: int) -> IntPolynomial:
    total = IntPolynomial()
    for j in range(r, n // 2):
        if not is_full_dimensional(n, 2, j):
            continue
        for ell in range(1, n + 1):
            diagram = inhibition_diagram(n, j, ell)
            if diagram is not None:
                total = total + diagram.independence()
    return ONE + total.shift(1)


def hstar_interior(n: int, r: int) -> IntPolynomial:
    """h*-polynomial of the relative interior, by coefficient reversal."""
    return interior_hstar(hstar_via_shelling(n, r).poly, n - 1)


def stab3_discrepancy(n: int) -> dict | None:
    """Compare the printed three-stable closed form with the shelling value.

    Returns a flag payload when they disagree (they do at n = 9 and 11);
    None when they agree. Shelling is treated as ground truth.
    """
    if n % 2 == 0 or not is_full_dimensional(n, 2, 3):
        raise ParameterError(f"three-stable comparison needs odd n >= 9, got {n}")
    printed = stab3_poly(n)
    reference = hstar_via_shelling(n, 3).poly
    if printed == reference:
        return None
    first = next(i for i in range(max(printed.degree, reference.degree) + 1)
                 if printed[i] != reference[i])
    return {
        "n": n, "r": 3, "method": "stab3_closed",
        "formula_coeffs": list(printed.coeffs),
        "shelling_coeffs": list(reference.coeffs),
        "first_mismatch_index": first,
        "formula_value": printed[first],
        "shelling_value": reference[first],
        "note": "printed closed form kept verbatim; shelling/oracle are ground truth",
    }
