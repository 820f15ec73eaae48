"""Exact integer polynomial algebra and the specific families the toolkit needs.

Coefficients are Python ints (little-endian, index = degree), so arithmetic is
exact at any size. Includes Fibonacci/Lucas recurrences (convention F0=F1=1,
L0=2, L1=1), independence polynomials of simple graphs, the D'Angelo norm
polynomials, the interior-series coefficient reversal, and exact shape
predicates (unimodal / log-concave / real-rooted via Sturm sequences).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ParameterError, ResourceBudgetError


class IntPolynomial:
    """Dense exact-integer polynomial; trailing zeros trimmed, zero poly is ()."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        m = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial([self[i] + other[i] for i in range(m)])

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        m = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial([self[i] - other[i] for i in range(m)])

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def scale(self, c: int) -> "IntPolynomial":
        return IntPolynomial([c * a for a in self.coeffs])

    def shift(self, p: int) -> "IntPolynomial":
        """Multiply by x**p."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * p + self.coeffs)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs)}


ONE = IntPolynomial([1])
X = IntPolynomial([0, 1])


def binomial_power(m: int) -> IntPolynomial:
    """(1 + x)**m."""
    out = ONE
    for _ in range(m):
        out = out * IntPolynomial([1, 1])
    return out


@lru_cache(maxsize=None)
def fibonacci_poly(m: int) -> IntPolynomial:
    """F_m under the convention F_0 = F_1 = 1, F_m = F_{m-1} + x F_{m-2}."""
    if m < 0:
        raise ParameterError(f"index m={m} must be nonnegative")
    if m <= 1:
        return ONE
    return fibonacci_poly(m - 1) + fibonacci_poly(m - 2).shift(1)


@lru_cache(maxsize=None)
def lucas_poly(m: int) -> IntPolynomial:
    """L_m under the convention L_0 = 2, L_1 = 1, L_m = L_{m-1} + x L_{m-2}."""
    if m < 0:
        raise ParameterError(f"index m={m} must be nonnegative")
    if m == 0:
        return IntPolynomial([2])
    if m == 1:
        return ONE
    return lucas_poly(m - 1) + lucas_poly(m - 2).shift(1)


# ---------------------------------------------------------------------------
# Simple graphs and independence polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph on vertices 0..num_vertices-1; no loops or parallel edges."""

    num_vertices: int
    edges: frozenset = frozenset()
    labels: tuple = ()

    def __post_init__(self):
        for e in self.edges:
            if len(e) != 2:
                raise ParameterError(f"edge {set(e)} is not a two-element set (loop?)")
            a, b = tuple(e)
            if not (0 <= a < self.num_vertices and 0 <= b < self.num_vertices):
                raise ParameterError(f"edge {set(e)} outside vertex range")

    @staticmethod
    def from_edge_list(num_vertices: int, edges, labels=()) -> "SimpleGraph":
        return SimpleGraph(num_vertices, frozenset(frozenset(e) for e in edges), tuple(labels))

    def neighbor_masks(self) -> list[int]:
        nbr = [0] * self.num_vertices
        for e in self.edges:
            a, b = tuple(e)
            nbr[a] |= 1 << b
            nbr[b] |= 1 << a
        return nbr


def path_graph(m: int) -> SimpleGraph:
    return SimpleGraph.from_edge_list(m, [(i, i + 1) for i in range(m - 1)])


def cycle_graph(m: int) -> SimpleGraph:
    if m < 3:
        raise ParameterError(f"cycle needs at least 3 vertices, got {m}")
    return SimpleGraph.from_edge_list(m, [(i, (i + 1) % m) for i in range(m)])


def independence_poly(g: SimpleGraph, max_vertices: int = 64) -> IntPolynomial:
    """Independent-set counting polynomial, coefficient of x^i = #independent i-sets.

    Memoized vertex-deletion recursion I(G) = I(G - v) + x I(G - N[v]) on
    induced-subgraph bitmasks, branching on a maximum-degree vertex.
    """
    if g.num_vertices > max_vertices:
        raise ResourceBudgetError(
            f"graph has {g.num_vertices} vertices, budget is {max_vertices}")
    nbr = g.neighbor_masks()
    memo: dict[int, IntPolynomial] = {}

    def rec(mask: int) -> IntPolynomial:
        if mask == 0:
            return ONE
        cached = memo.get(mask)
        if cached is not None:
            return cached
        best, best_deg = -1, -1
        mm = mask
        while mm:
            v = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            deg = (nbr[v] & mask).bit_count()
            if deg > best_deg:
                best, best_deg = v, deg
        if best_deg == 0:
            out = binomial_power(mask.bit_count())  # all remaining vertices isolated
        else:
            v = best
            out = rec(mask & ~(1 << v)) + rec(mask & ~((1 << v) | nbr[v])).shift(1)
        memo[mask] = out
        return out

    return rec((1 << g.num_vertices) - 1)


# ---------------------------------------------------------------------------
# Bivariate polynomials and the D'Angelo family
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BivariatePoly:
    """Sparse exact bivariate polynomial: {(a, b): c} meaning c * x^a * y^b."""

    terms: tuple = ()  # sorted tuple of ((a, b), c) with c != 0

    @staticmethod
    def from_dict(d: dict) -> "BivariatePoly":
        return BivariatePoly(tuple(sorted((k, v) for k, v in d.items() if v != 0)))

    def as_dict(self) -> dict:
        return dict(self.terms)

    def __add__(self, other: "BivariatePoly") -> "BivariatePoly":
        d = dict(self.terms)
        for key, c in other.terms:
            d[key] = d.get(key, 0) + c
        return BivariatePoly.from_dict(d)

    def __mul__(self, other: "BivariatePoly") -> "BivariatePoly":
        d: dict = {}
        for (a1, b1), c1 in self.terms:
            for (a2, b2), c2 in other.terms:
                key = (a1 + a2, b1 + b2)
                d[key] = d.get(key, 0) + c1 * c2
        return BivariatePoly.from_dict(d)

    def __sub__(self, other: "BivariatePoly") -> "BivariatePoly":
        return self + other.scale(-1)

    def scale(self, c: int) -> "BivariatePoly":
        return BivariatePoly.from_dict({k: c * v for k, v in self.terms})

    def substitute_y_equals_x(self) -> IntPolynomial:
        out: dict[int, int] = {}
        for (a, b), c in self.terms:
            out[a + b] = out.get(a + b, 0) + c
        if not out:
            return IntPolynomial()
        coeffs = [0] * (max(out) + 1)
        for d, c in out.items():
            coeffs[d] = c
        return IntPolynomial(coeffs)

    def to_json(self) -> list:
        return [{"x": a, "y": b, "c": c} for (a, b), c in self.terms]


BIV_X = BivariatePoly.from_dict({(1, 0): 1})
BIV_Y = BivariatePoly.from_dict({(0, 1): 1})


def _monomial(a: int, b: int, c: int = 1) -> BivariatePoly:
    return BivariatePoly.from_dict({(a, b): c})


@lru_cache(maxsize=None)
def dangelo_g(m: int) -> BivariatePoly:
    """g_m: g_0 = x, g_1 = x^3 + 3xy, g_m = (x^2 + 2y) g_{m-1} - y^2 g_{m-2}."""
    if m < 0:
        raise ParameterError(f"index m={m} must be nonnegative")
    if m == 0:
        return BIV_X
    if m == 1:
        return BivariatePoly.from_dict({(3, 0): 1, (1, 1): 3})
    mult = BivariatePoly.from_dict({(2, 0): 1, (0, 1): 2})
    return mult * dangelo_g(m - 1) - _monomial(0, 2) * dangelo_g(m - 2)


def dangelo_p(m: int) -> BivariatePoly:
    """p_m = g_m + y^(2m+1), the squared-norm polynomial of the degree-m sphere map."""
    return dangelo_g(m) + _monomial(0, 2 * m + 1)


@lru_cache(maxsize=None)
def bivariate_lucas(m: int) -> BivariatePoly:
    """Two-variable Lucas sequence: 2, x, then x*prev + y*prevprev."""
    if m < 0:
        raise ParameterError(f"index m={m} must be nonnegative")
    if m == 0:
        return BivariatePoly.from_dict({(0, 0): 2})
    if m == 1:
        return BIV_X
    return BIV_X * bivariate_lucas(m - 1) + BIV_Y * bivariate_lucas(m - 2)


# ---------------------------------------------------------------------------
# Interior series reversal and shape predicates
# ---------------------------------------------------------------------------

def interior_hstar(h: IntPolynomial, d: int) -> IntPolynomial:
    """Numerator of the interior Ehrhart series: x^(d+1) * h(1/x).

    Coefficient reversal within degree d+1; requires deg h <= d and h(0) = 1.
    """
    if h.degree > d:
        raise ParameterError(f"degree {h.degree} exceeds dimension {d}")
    if h[0] != 1:
        raise ParameterError("constant term must be 1")
    out = [0] * (d + 2)
    for i, c in enumerate(h.coeffs):
        out[d + 1 - i] = c
    return IntPolynomial(out)


def _is_unimodal(seq: tuple[int, ...]) -> bool:
    rising = True
    for prev, cur in zip(seq, seq[1:]):
        if rising:
            if cur < prev:
                rising = False
        elif cur > prev:
            return False
    return True


def _is_log_concave(seq: tuple[int, ...]) -> bool:
    # Trailing zeros are already trimmed by IntPolynomial; internal zeros
    # flanked by nonzeros fail.
    if len(seq) <= 2:
        return all(c >= 0 for c in seq)
    for i in range(1, len(seq) - 1):
        if seq[i] == 0 and seq[i - 1] != 0 and seq[i + 1] != 0:
            return False
        if seq[i] * seq[i] < seq[i - 1] * seq[i + 1]:
            return False
    return True


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    rem = list(a)
    deg_b = len(b) - 1
    lead = b[-1]
    while len(rem) - 1 >= deg_b and any(c != 0 for c in rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < deg_b:
            break
        shift = len(rem) - 1 - deg_b
        factor = rem[-1] / lead
        for i in range(deg_b + 1):
            rem[shift + i] -= factor * b[i]
        rem.pop()
    while rem and rem[-1] == 0:
        rem.pop()
    return [], rem


def _poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = list(a), list(b)
    while b and any(c != 0 for c in b):
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if not a:
        return a
    lead = a[-1]
    return [c / lead for c in a]


def _derivative(p: list[Fraction]) -> list[Fraction]:
    return [Fraction(i) * c for i, c in enumerate(p)][1:]


def _sign_at_infinity(p: list[Fraction], positive: bool) -> int:
    if not p:
        return 0
    lead = p[-1]
    deg = len(p) - 1
    s = 1 if lead > 0 else -1
    if not positive and deg % 2 == 1:
        s = -s
    return s


def _sturm_distinct_real_roots(p: list[Fraction]) -> int:
    chain = [p, _derivative(p)]
    while chain[-1] and any(c != 0 for c in chain[-1]):
        _, r = _poly_divmod(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    chain = [c for c in chain if c]

    def variations(positive: bool) -> int:
        signs = [s for s in (_sign_at_infinity(q, positive) for q in chain) if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    return variations(False) - variations(True)


def _is_real_rooted(seq: tuple[int, ...]) -> bool:
    coeffs = [Fraction(c) for c in seq]
    # strip zero roots (factors of x): they are real
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if len(coeffs) <= 2:
        return True  # constants and linears are vacuously real-rooted
    g = _poly_gcd(coeffs, _derivative(coeffs))
    if len(g) - 1 > 0:
        square_free, _ = _exact_divide(coeffs, g)
    else:
        square_free = coeffs
    deg = len(square_free) - 1
    return _sturm_distinct_real_roots(square_free) == deg


def _exact_divide(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    quo = [Fraction(0)] * (len(a) - len(b) + 1)
    rem = list(a)
    deg_b = len(b) - 1
    lead = b[-1]
    for shift in range(len(a) - len(b), -1, -1):
        factor = rem[shift + deg_b] / lead
        quo[shift] = factor
        for i in range(deg_b + 1):
            rem[shift + i] -= factor * b[i]
    while rem and rem[-1] == 0:
        rem.pop()
    return quo, rem


def shape_predicates(h: IntPolynomial) -> dict:
    """Exact unimodality / log-concavity / real-rootedness of the coefficient vector."""
    seq = h.coeffs
    return {
        "unimodal": _is_unimodal(seq) if seq else True,
        "log_concave": _is_log_concave(seq) if seq else True,
        "real_rooted": _is_real_rooted(seq) if seq else True,
    }
