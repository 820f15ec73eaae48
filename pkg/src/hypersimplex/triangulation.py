"""Maximal cells of the circuit triangulation and its restriction to stable levels.

A maximal cell is encoded by a permutation omega with omega[n] = n: reading the
circuit from its lexicographically maximal vertex, omega lists which coordinate
position fires at each step (a 1 moves one place right, cyclically). The cell's
n vertices are the characteristic vectors visited by the circuit.
"""

from dataclasses import dataclass
from functools import lru_cache

from .core import (CharVec, Subset, charvec_support, enumerate_r_stable,
                   min_pairwise_distance, residue, subset_to_charvec)
from .errors import ParameterError, UnsupportedParametersError
from .exactlinalg import bareiss_determinant, integer_rank

Perm = tuple[int, ...]


def inverse_permutation(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v - 1] = i + 1
    return tuple(inv)


def is_permutation(p: Perm, n: int) -> bool:
    return len(p) == n and sorted(p) == list(range(1, n + 1))


def descent_count(p: Perm) -> int:
    return sum(1 for a, b in zip(p, p[1:]) if a > b)


@lru_cache(maxsize=None)
def eulerian_number(m: int, d: int) -> int:
    """Number of permutations of 1..m with exactly d descents."""
    if d < 0 or d >= max(m, 1):
        return 0 if m > 0 else (1 if d == 0 else 0)
    if m <= 1:
        return 1 if d == 0 else 0
    return (d + 1) * eulerian_number(m - 1, d) + (m - d) * eulerian_number(m - 1, d - 1)


@lru_cache(maxsize=None)
def _perms_with_descents(m: int, d: int) -> tuple[Perm, ...]:
    """All permutations of 1..m with exactly d descents, by insertion recursion."""
    if m == 1:
        return ((1,),) if d == 0 else ()
    out = []
    # inserting m at the end or into an existing descent keeps the count
    for p in _perms_with_descents(m - 1, d):
        out.append(p + (m,))
        for i in range(m - 2):
            if p[i] > p[i + 1]:
                out.append(p[: i + 1] + (m,) + p[i + 1:])
    # inserting at the front or into an ascent adds one descent
    if d >= 1:
        for p in _perms_with_descents(m - 1, d - 1):
            out.append((m,) + p)
            for i in range(m - 2):
                if p[i] < p[i + 1]:
                    out.append(p[: i + 1] + (m,) + p[i + 1:])
    return tuple(out)


def permutation_is_circuit(n: int, k: int, omega: Perm) -> bool:
    """True iff omega encodes a maximal cell: omega[n] = n and the inverse has k-1 descents."""
    if not is_permutation(omega, n):
        raise ParameterError(f"{omega} is not a permutation of 1..{n}")
    if omega[-1] != n:
        return False
    return descent_count(inverse_permutation(omega)) == k - 1


@dataclass(frozen=True)
class Simplex:
    """One maximal cell: representative permutation plus its vertex cycle.

    vertices[0] is the lexicographically maximal vertex; applying the move at
    position omega[i] to vertices[i] yields vertices[i+1] (cyclically).
    """

    n: int
    k: int
    omega: Perm
    vertices: tuple[CharVec, ...]

    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def supports(self) -> tuple[Subset, ...]:
        return tuple(charvec_support(v) for v in self.vertices)

    def stability_level(self) -> int:
        """Largest r such that every vertex is r-stable."""
        return min(min_pairwise_distance(self.n, charvec_support(v)) for v in self.vertices)

    def to_json(self) -> dict:
        return {"omega": list(self.omega), "vertices": [list(v) for v in self.vertices]}


def _apply_move(n: int, support: frozenset, pos: int) -> frozenset:
    """Move the 1 at coordinate pos one place right (cyclically)."""
    nxt = residue(n, pos + 1)
    if pos not in support or nxt in support:
        raise ParameterError(f"no legal move at position {pos} from {sorted(support)}")
    return (support - {pos}) | {nxt}


def circuit_vertices(n: int, k: int, omega: Perm) -> tuple[CharVec, ...]:
    """Vertex cycle of the circuit encoded by omega, starting at the lex-max vertex."""
    if not permutation_is_circuit(n, k, omega):
        raise ParameterError(f"{omega} does not encode a circuit for k={k}")
    u = inverse_permutation(omega)
    # extended descents of the inverse mark the coordinates after which a 1 sits
    des = {i + 1 for i in range(n - 1) if u[i] > u[i + 1]}
    if u[-1] > u[0]:
        des.add(n)
    support = frozenset(residue(n, i + 1) for i in des)
    verts = []
    cur = support
    for i in range(n):
        verts.append(subset_to_charvec(n, tuple(sorted(cur))))
        cur = _apply_move(n, cur, omega[i])
    if set(charvec_support(verts[0])) != set(cur):
        raise ParameterError(f"circuit for {omega} does not close")
    if max(verts) != verts[0]:
        raise ParameterError(f"circuit for {omega} does not start at its lex-max vertex")
    return tuple(verts)


def simplex_from_omega(n: int, k: int, omega: Perm) -> Simplex:
    return Simplex(n, k, tuple(omega), circuit_vertices(n, k, tuple(omega)))


def simplex_from_vertex_cycle(n: int, k: int, supports: list[frozenset],
                              labels: list[int]) -> Simplex:
    """Canonicalize a vertex/label cycle: rotate so the move labeled n comes last."""
    idx = labels.index(n)
    rot = idx + 1  # vertex after the move labeled n starts the canonical reading
    omega = tuple(labels[(rot + i) % n] for i in range(n))
    verts = tuple(subset_to_charvec(n, tuple(sorted(supports[(rot + i) % n])))
                  for i in range(n))
    if verts[0] != max(verts):
        raise ParameterError("canonical rotation does not start at the lex-max vertex")
    return Simplex(n, k, omega, verts)


# ---------------------------------------------------------------------------
# Full-dimensionality of the stable subpolytope
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def is_full_dimensional(n: int, k: int, r: int) -> bool:
    """Whether the r-stable subpolytope has the ambient dimension n-1.

    Closed rules for k = 2; otherwise an exact rank computation on the stable
    characteristic vectors.
    """
    if not 0 < k < n:
        raise ParameterError(f"need 0 < k < n, got k={k}, n={n}")
    if not 1 <= r <= n // k:
        return False
    if k == 2:
        return r <= (n - 1) // 2 if n % 2 == 1 else r <= n // 2 - 1
    members = enumerate_r_stable(n, k, r).members
    if len(members) < n:
        return False
    base = subset_to_charvec(n, members[0])
    rows = [[v - b for v, b in zip(subset_to_charvec(n, m), base)] for m in members[1:]]
    return integer_rank(rows) == n - 1


def require_full_dimensional(n: int, k: int, r: int) -> None:
    if not 1 <= r <= n // k:
        raise UnsupportedParametersError(
            f"stability level r={r} outside 1..floor({n}/{k})={n // k}")
    if not is_full_dimensional(n, k, r):
        raise UnsupportedParametersError(
            f"the r-stable subpolytope for (n={n}, k={k}, r={r}) is not {n - 1}-dimensional")


# ---------------------------------------------------------------------------
# Enumeration and unimodularity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Triangulation:
    n: int
    k: int
    r: int
    simplices: tuple[Simplex, ...]

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "r": self.r, "count": len(self.simplices),
                "simplices": [s.to_json() for s in self.simplices]}


def enumerate_triangulation(n: int, k: int, r: int) -> Triangulation:
    """All maximal cells whose vertices are r-stable, in lex order on omega.

    Candidate permutations come from generating the inverses directly: they fix
    n and restrict to a permutation of 1..n-1 with exactly k-1 descents.
    """
    require_full_dimensional(n, k, r)
    simplices = []
    for u_head in _perms_with_descents(n - 1, k - 1):
        omega = inverse_permutation(u_head + (n,))
        s = simplex_from_omega(n, k, omega)
        if r == 1 or s.stability_level() >= r:
            simplices.append(s)
    simplices.sort(key=lambda s: s.omega)
    return Triangulation(n, k, r, tuple(simplices))


def simplex_is_unimodular(s: Simplex) -> bool:
    """Exact determinant test: vertex differences span the sum-zero lattice.

    Projects the n-1 difference vectors onto their first n-1 coordinates
    (a lattice isomorphism on the sum-zero hyperplane) and checks |det| = 1.
    """
    v0 = s.vertices[0]
    rows = [[s.vertices[i][j] - v0[j] for j in range(s.n - 1)] for i in range(1, s.n)]
    return abs(bareiss_determinant(rows)) == 1
