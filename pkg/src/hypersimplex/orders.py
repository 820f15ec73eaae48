"""Permutation-tuple encodings of circuits and the conjectured order for k > 2.

A circuit is encoded by the n-tuple of inverse permutations of its rotations.
The comparison sorts one layer of cells: by total count of r-adjacent descent
pairs, then by the maximal r-adjacent vertex, then colexicographically on the
descent-delimited subwords of the rotation starting at that vertex, then on the
residual pair-count vector; a final logged fallback on the canonical
permutation keeps the order total. For pair subsets this reproduces the proven
shelling order on each layer.
"""

import time
from dataclasses import dataclass

from .core import charvec_support, residue
from .errors import ParameterError, ResourceBudgetError
from .shelling import verify_shelling
from .triangulation import (Perm, Simplex, enumerate_triangulation,
                            inverse_permutation, is_permutation,
                            require_full_dimensional, simplex_from_omega)


def extended_descents(p: Perm) -> frozenset:
    """Positions i with p_i > p_{i+1}, including the wraparound i = n."""
    n = len(p)
    if not is_permutation(p, n):
        raise ParameterError(f"{p} is not a permutation")
    des = {i + 1 for i in range(n - 1) if p[i] > p[i + 1]}
    if p[-1] > p[0]:
        des.add(n)
    return frozenset(des)


def r_adjacent_descents(p: Perm, r: int) -> frozenset:
    """Ordered pairs (i, i+r) of extended descents at cyclic distance r."""
    if r < 1:
        raise ParameterError(f"r={r} must be positive")
    n = len(p)
    des = extended_descents(p)
    return frozenset((i, residue(n, i + r)) for i in des if residue(n, i + r) in des)


@dataclass(frozen=True)
class CircuitTuple:
    """All n rotations of one circuit, as inverse permutations.

    perms[i-1] is the inverse of the representative whose move labeled n is the
    i-th move of the circuit; perms[n-1] is the canonical encoding.
    """

    n: int
    k: int
    perms: tuple[Perm, ...]


def circuit_tuple(s: Simplex) -> CircuitTuple:
    n = s.n
    perms = []
    for i in range(1, n + 1):
        j = (n - i) % n  # rotation starting at vertex j puts move n in slot i
        rotated = s.omega[j:] + s.omega[:j]
        perms.append(inverse_permutation(rotated))
    return CircuitTuple(n, s.k, tuple(perms))


def _rotation_inverse(s: Simplex, start: int) -> Perm:
    rotated = s.omega[start:] + s.omega[:start]
    return inverse_permutation(rotated)


def _vertex_pairs(n: int, r: int, support: tuple[int, ...]) -> tuple[int, ...]:
    """Anchors witnessing r-adjacency of a vertex: a with both a, a+r in support."""
    sup = set(support)
    return tuple(sorted(a for a in support if residue(n, a + r) in sup))


def _cyclic_slice(p: Perm, start: int, stop: int) -> tuple[int, ...]:
    """Entries of p at positions start+1..stop walking cyclically, 1-based."""
    n = len(p)
    out = []
    pos = start
    while True:
        pos = residue(n, pos + 1)
        out.append(p[pos - 1])
        if pos == stop:
            return tuple(out)


def order_key(s: Simplex, r: int) -> tuple:
    """Sort key realizing the layer comparison (smaller key shells earlier)."""
    n = s.n
    supports = s.supports()
    phi = [0] * n  # residual pair counts indexed by anchor
    adjacent = []  # (vertex order key, circuit position)
    grade = 0
    for idx, sup in enumerate(supports):
        pairs = _vertex_pairs(n, r, sup)
        grade += len(pairs)
        for a in pairs:
            phi[a - 1] += 1
        if pairs:
            adjacent.append(((max(pairs), pairs, sup), idx))
    if not adjacent:
        raise ParameterError(
            f"cell {s.omega} uses no {r}-adjacent vertex; not in this layer")
    (max_key, start) = max(adjacent)
    p = _rotation_inverse(s, start)
    des = sorted(extended_descents(p))
    pair_starts = sorted(i for (i, _) in r_adjacent_descents(p, r))
    pair_words = tuple(tuple(reversed(_cyclic_slice(p, i, residue(n, i + r))))
                       for i in reversed(pair_starts))
    plain = [i for i in des if i not in set(pair_starts)]
    des_cycle = des  # sorted; successor of the largest wraps to the smallest
    def successor(i: int) -> int:
        pos = des_cycle.index(i)
        return des_cycle[(pos + 1) % len(des_cycle)]
    plain_words = tuple(tuple(reversed(_cyclic_slice(p, i, successor(i))))
                        for i in reversed(plain))
    return (grade, max_key, pair_words, plain_words,
            tuple(reversed(phi)), s.omega)


def general_compare(a: CircuitTuple, b: CircuitTuple, r: int) -> str:
    """Total-order comparison of two same-layer circuits: less/equal/greater."""
    if (a.n, a.k) != (b.n, b.k):
        raise ParameterError(
            f"cannot compare circuits with ({a.n},{a.k}) vs ({b.n},{b.k})")
    sa = _simplex_of(a)
    sb = _simplex_of(b)
    ka, kb = order_key(sa, r), order_key(sb, r)
    return "less" if ka < kb else ("equal" if ka == kb else "greater")


def _simplex_of(t: CircuitTuple) -> Simplex:
    omega = inverse_permutation(t.perms[-1])
    return simplex_from_omega(t.n, t.k, omega)


@dataclass(frozen=True)
class ConjectureReport:
    n: int
    k: int
    r: int
    simplices: int
    shelling_ok: bool
    violation: dict | None
    tiebreak_fallbacks: int
    partial: bool = False
    verified_prefix: int | None = None

    def to_json(self) -> dict:
        return {
            "n": self.n, "k": self.k, "r": self.r,
            "simplices": self.simplices,
            "shelling_ok": self.shelling_ok,
            "violation": self.violation,
            "tiebreak_fallbacks": self.tiebreak_fallbacks,
            "partial": self.partial,
            "verified_prefix": self.verified_prefix,
        }


def conjectured_order(n: int, k: int, r: int) -> tuple[list[Simplex], int]:
    """Layer the level-r triangulation deepest-first, each layer sorted by the
    general comparison; returns the order and the count of logged fallbacks."""
    require_full_dimensional(n, k, r)
    tri = enumerate_triangulation(n, k, r)
    layers: dict[int, list[Simplex]] = {}
    for s in tri.simplices:
        layers.setdefault(min(s.stability_level(), n // k), []).append(s)
    ordered: list[Simplex] = []
    fallbacks = 0
    for level in sorted(layers, reverse=True):
        keyed = sorted((order_key(s, level), s) for s in layers[level])
        for (ka, _), (kb, _) in zip(keyed, keyed[1:]):
            if ka[:-1] == kb[:-1]:  # decided only by the raw-permutation fallback
                fallbacks += 1
        ordered.extend(s for _, s in keyed)
    return ordered, fallbacks


def check_general_conjecture(n: int, k: int, r: int,
                             budget_seconds: float | None = None) -> ConjectureReport:
    """Order the level-r cells by the conjectured comparison and verify shelling.

    The verdict is reported, never asserted. On budget exhaustion a partial
    report records the verified prefix.
    """
    deadline = None if budget_seconds is None else time.monotonic() + budget_seconds
    ordered, fallbacks = conjectured_order(n, k, r)
    try:
        res = verify_shelling(ordered, deadline=deadline)
    except ResourceBudgetError as err:
        return ConjectureReport(n, k, r, len(ordered), False, None, fallbacks,
                                partial=True,
                                verified_prefix=getattr(err, "verified_prefix", 0))
    if res.ok:
        return ConjectureReport(n, k, r, len(ordered), True, None, fallbacks)
    witness = sorted(charvec_support(v) for v in res.witness_face)
    violation = {"index": res.violation_index,
                 "witness_face": [list(w) for w in witness]}
    return ConjectureReport(n, k, r, len(ordered), False, violation, fallbacks)
