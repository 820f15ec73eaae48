"""Shelling orders for the pair-subset (k = 2) stable triangulations.

Each maximal cell in the layer between stability levels r and r+1 is labeled by
the anchor of its largest r-adjacent vertex together with a bounded composition
recording how the circuit interleaves moves of its two 1s. Compositions map to
monotone lattice paths in a ladder region, and the closed-form minimal new face
of each cell is read off the path. A generic, order-agnostic verifier provides
the independent ground truth.
"""

import time
from dataclasses import dataclass

from .core import CharVec, circular_distance, residue, subset_to_charvec
from .errors import (InternalInconsistencyError, InvalidCompositionError,
                     NotLabelableError, ParameterError, ResourceBudgetError,
                     UnsupportedParametersError)
from .triangulation import Simplex, is_full_dimensional, simplex_from_vertex_cycle
from . import _kernels


@dataclass(frozen=True)
class Composition:
    """Weight-r composition into n-r-1 parts, bounded so the circuit stays stable.

    The i-th prefix sum (1-based) must lie in [i+1+2r-n, i].
    """

    r: int
    parts: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.parts) + self.r + 1

    def __post_init__(self):
        if sum(self.parts) != self.r or any(p < 0 for p in self.parts):
            raise InvalidCompositionError(
                f"parts {self.parts} do not form a composition of {self.r}")
        n = self.n
        prefix = 0
        for i, p in enumerate(self.parts, start=1):
            prefix += p
            if not (i + 1 + 2 * self.r - n <= prefix <= i):
                raise InvalidCompositionError(
                    f"prefix sum {prefix} at index {i} outside "
                    f"[{i + 1 + 2 * self.r - n}, {i}] for {self.parts}")


def lambda_star(n: int, r: int) -> Composition:
    """The first composition to use a given anchor: one initial 0, then r 1s."""
    parts = (0,) + (1,) * r + (0,) * (n - 2 * r - 2)
    return Composition(r, parts)


@dataclass(frozen=True)
class SimplexLabel:
    """Anchor of the maximal r-adjacent vertex, composition, and adjacency count."""

    ell: int
    lam: Composition
    s: int

    def to_json(self) -> dict:
        return {"ell": self.ell, "lambda": list(self.lam.parts), "s": self.s}


@dataclass(frozen=True)
class LatticePath:
    """Monotone word over {E, N} from (0,0) to (n-r, r) in the ladder region."""

    steps: tuple[str, ...]

    def points(self) -> tuple[tuple[int, int], ...]:
        pts = [(0, 0)]
        x = y = 0
        for s in self.steps:
            if s == "E":
                x += 1
            else:
                y += 1
            pts.append((x, y))
        return tuple(pts)


def lattice_path(n: int, r: int, lam: Composition) -> LatticePath:
    if lam.n != n or lam.r != r:
        raise ParameterError(f"composition shape {lam.parts} does not match (n={n}, r={r})")
    steps = ["E"]
    for p in lam.parts:
        steps.extend(["N"] * p)
        steps.append("E")
    return LatticePath(tuple(steps))


def adjacent_support(n: int, r: int, ell: int) -> tuple[int, ...]:
    """Support of the r-adjacent vertex anchored at ell."""
    return tuple(sorted((residue(n, ell), residue(n, ell + r))))


def anchor_of(n: int, r: int, support: tuple[int, ...]) -> int | None:
    """Anchor if the 2-element support is r-adjacent, else None."""
    a, b = support
    if circular_distance(n, a, b) != r:
        return None
    return a if residue(n, a + r) == b else b


def enumerate_compositions(n: int, r: int):
    """All bounded compositions of r into n-r-1 parts, lexicographically."""
    length = n - r - 1
    parts: list[int] = []

    def rec(i: int, prefix: int):
        if i == length:
            if prefix == r:
                yield Composition(r, tuple(parts))
            return
        lo = max(0, (i + 1) + 1 + 2 * r - n - prefix)
        hi = min(r - prefix, (i + 1) - prefix)
        for p in range(lo, hi + 1):
            parts.append(p)
            yield from rec(i + 1, prefix + p)
            parts.pop()

    yield from rec(0, 0)


def simplex_from_composition(n: int, r: int, ell: int, lam: Composition) -> Simplex:
    """Rebuild the cell whose circuit starts at the anchored vertex and
    interleaves moves of its right and left 1 according to the composition."""
    if lam.n != n or lam.r != r:
        raise InvalidCompositionError(
            f"composition shape {lam.parts} does not match (n={n}, r={r})")
    left = residue(n, ell)
    right = residue(n, ell + r)
    support = frozenset((left, right))
    supports = [support]
    labels: list[int] = []

    def move(pos: int) -> int:
        nonlocal support
        nxt = residue(n, pos + 1)
        if pos not in support or nxt in support:
            raise InvalidCompositionError(
                f"illegal move at {pos} from {sorted(support)} for ({ell}, {lam.parts})")
        support = (support - {pos}) | {nxt}
        supports.append(support)
        labels.append(pos)
        return nxt

    for p in lam.parts:
        right = move(right)
        for _ in range(p):
            left = move(left)
    right = move(right)
    supports.pop()  # the closing vertex repeats the initial one
    if supports[0] != support:
        raise InternalInconsistencyError("composition circuit did not close")
    return simplex_from_vertex_cycle(n, 2, supports, labels)


def label_simplex(n: int, r: int, s: Simplex) -> SimplexLabel:
    """Label a layer cell by its maximal r-adjacent vertex and composition."""
    if s.k != 2 or s.n != n:
        raise ParameterError("labeling is defined for pair-subset cells only")
    supports = s.supports()
    anchors = {}
    for idx, sup in enumerate(supports):
        if circular_distance(n, *sup) < r:
            raise NotLabelableError(f"vertex {sup} is not {r}-stable")
        a = anchor_of(n, r, sup)
        if a is not None:
            anchors[a] = idx
    if not anchors:
        raise NotLabelableError(
            f"cell uses no {r}-adjacent vertex; it lies at a deeper stability level")
    ell = max(anchors)
    start = anchors[ell]
    cyc = [set(supports[(start + i) % n]) for i in range(n)]
    left = residue(n, ell)
    right = residue(n, ell + r)
    parts = [0] * (n - r - 1)
    right_moves = 0
    for i in range(n):
        moved = (cyc[i] - cyc[(i + 1) % n]).pop()
        if moved == right:
            right_moves += 1
            right = residue(n, moved + 1)
        elif moved == left:
            if not 1 <= right_moves <= n - r - 1:
                raise InternalInconsistencyError("left move outside the ladder")
            parts[right_moves - 1] += 1
            left = residue(n, moved + 1)
        else:
            raise InternalInconsistencyError(f"move at {moved} matches neither 1")
    if right_moves != n - r:
        raise InternalInconsistencyError("wrong number of right moves")
    return SimplexLabel(ell, Composition(r, tuple(parts)), len(anchors))


def _vertex_at(n: int, r: int, ell: int, point: tuple[int, int]) -> CharVec:
    """Vertex sitting at lattice point (i, j): left 1 after j moves, right after i."""
    i, j = point
    return subset_to_charvec(
        n, tuple(sorted((residue(n, ell + j), residue(n, ell + r + i)))))


def minimal_new_face(n: int, r: int, label: SimplexLabel) -> frozenset:
    """Closed-form restriction face of a labeled cell, read off its lattice path.

    Wide ladders (n - 2r >= 3): the anchored vertex, every path point on the
    upper diagonal y = x, and every east-to-north corner off the first-arrival
    path. Narrow ladder (n = 2r + 2): exactly the points on y = x.
    """
    width = n - 2 * r
    ell = label.ell
    pts = lattice_path(n, r, label.lam).points()
    face = {_vertex_at(n, r, ell, (0, 0))}
    if width == 2:
        for p in pts[1:-1]:
            if p[0] == p[1]:
                face.add(_vertex_at(n, r, ell, p))
        return frozenset(face)
    if width < 2:
        raise UnsupportedParametersError(
            f"no face rule for (n={n}, r={r}): ladder width {width} < 2")
    star_pts = set(lattice_path(n, r, lambda_star(n, r)).points())
    for idx in range(1, len(pts) - 1):
        p = pts[idx]
        if p[0] == p[1]:
            face.add(_vertex_at(n, r, ell, p))
        elif (pts[idx - 1][1] == p[1] and pts[idx + 1][0] == p[0]
              and p not in star_pts):
            face.add(_vertex_at(n, r, ell, p))
    return frozenset(face)


def layer_simplices(n: int, r: int) -> list[tuple[SimplexLabel, Simplex]]:
    """All cells at stability level exactly r, each with its unique label."""
    out = []
    for ell in range(1, n + 1):
        for lam in enumerate_compositions(n, r):
            s = simplex_from_composition(n, r, ell, lam)
            label = label_simplex(n, r, s)
            if label.ell == ell:
                out.append((label, s))
    return out


def _base_simplex_odd(n: int, r: int) -> Simplex:
    """The unique deepest cell for odd n: the cycle through all anchored vertices."""
    anchor = 1
    supports = []
    labels = []
    for _ in range(n):
        supports.append(frozenset((residue(n, anchor), residue(n, anchor + r))))
        labels.append(residue(n, anchor + r))
        anchor = residue(n, anchor + r + 1)
    return simplex_from_vertex_cycle(n, 2, supports, labels)


@dataclass(frozen=True)
class ShellingStep:
    simplex: Simplex
    label: SimplexLabel | None
    restriction_face: frozenset
    shelling_number: int

    def to_json(self) -> dict:
        return {
            "omega": list(self.simplex.omega),
            "label": self.label.to_json() if self.label else None,
            "restriction_face": sorted(list(v) for v in self.restriction_face),
            "shelling_number": self.shelling_number,
        }


def _ordered_layer(n: int, r: int, even_base: bool) -> list[tuple[SimplexLabel, Simplex]]:
    layer = layer_simplices(n, r)
    if even_base:
        # anchors ascending, compositions colex greatest-to-least inside each anchor
        layer.sort(key=lambda t: (t[0].ell,
                                  tuple(-p for p in reversed(t[0].lam.parts))))
    else:
        # adjacency count, then anchor, then composition colex least-to-greatest
        layer.sort(key=lambda t: (t[0].s, t[0].ell, tuple(reversed(t[0].lam.parts))))
    return layer


def shelling_order(n: int, r_target: int) -> list[ShellingStep]:
    """Complete shelling of the level-r_target triangulation, deepest layer first."""
    if not is_full_dimensional(n, 2, r_target):
        raise UnsupportedParametersError(
            f"(n={n}, k=2, r={r_target}) is not full-dimensional")
    steps: list[ShellingStep] = []
    if n % 2 == 1:
        base_r = (n - 1) // 2
        base = _base_simplex_odd(n, base_r)
        steps.append(ShellingStep(base, None, frozenset(), 0))
        deepest = base_r - 1
    else:
        base_r = n // 2 - 1
        for idx, (label, s) in enumerate(_ordered_layer(n, base_r, even_base=True)):
            face = frozenset() if idx == 0 else minimal_new_face(n, base_r, label)
            steps.append(ShellingStep(s, label, face, len(face)))
        deepest = base_r - 1
    for r in range(deepest, r_target - 1, -1):
        for label, s in _ordered_layer(n, r, even_base=False):
            face = minimal_new_face(n, r, label)
            steps.append(ShellingStep(s, label, face, len(face)))
    return steps


# ---------------------------------------------------------------------------
# Generic, order-agnostic restriction faces and the shelling verifier
# ---------------------------------------------------------------------------

def _global_masks(simplices: list[Simplex]) -> tuple[list[int], dict]:
    """Bitmask per cell over the set of distinct vertices appearing anywhere."""
    bit_of: dict[CharVec, int] = {}
    masks = []
    for s in simplices:
        m = 0
        for v in s.vertices:
            b = bit_of.setdefault(v, len(bit_of))
            m |= 1 << b
        masks.append(m)
    return masks, bit_of


def generic_restriction_faces(simplices: list[Simplex]) -> list[frozenset]:
    """For each index i: vertices v such that cell_i minus v lies in an earlier cell."""
    masks, bit_of = _global_masks(simplices)
    faces = []
    for i, s in enumerate(simplices):
        inters = {masks[i] & masks[j] for j in range(i)}
        face = set()
        for v in s.vertices:
            if masks[i] & ~(1 << bit_of[v]) in inters:
                face.add(v)
        faces.append(frozenset(face))
    return faces


def restriction_face(simplices: list[Simplex], i: int) -> frozenset:
    """Generic restriction face of the i-th cell in an arbitrary order."""
    masks, bit_of = _global_masks(simplices[: i + 1])
    inters = {masks[i] & masks[j] for j in range(i)}
    return frozenset(v for v in simplices[i].vertices
                     if masks[i] & ~(1 << bit_of[v]) in inters)


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    violation_index: int | None = None
    witness_face: frozenset | None = None

    def to_json(self) -> dict:
        out: dict = {"ok": self.ok}
        if not self.ok:
            out["violation_index"] = self.violation_index
            out["witness_face"] = sorted(list(v) for v in self.witness_face)
        return out


def verify_shelling(simplices: list[Simplex], exhaustive: bool = False,
                    deadline: float | None = None) -> VerifyResult:
    """Check that each cell meets the union of its predecessors in a union of facets.

    Equivalently the new faces of cell i form the interval from its restriction
    face up to the cell itself; a violation is an already-seen face containing
    the restriction face. With exhaustive=True every one of the 2^n vertex
    subsets of each cell is swept against the maximal earlier intersections,
    which is the definition made literal. A monotonic-clock deadline aborts
    with the verified prefix recorded on the raised error.
    """
    if len({s.vertex_set() for s in simplices}) != len(simplices):
        raise ParameterError("duplicate cells in the order")
    if any(s.n != simplices[0].n for s in simplices):
        raise ParameterError("cells of mixed dimension")
    masks, bit_of = _global_masks(simplices)
    bits = {v: 1 << b for v, b in bit_of.items()}

    def unpack(mask: int, universe: Simplex) -> frozenset:
        return frozenset(v for v in universe.vertices if mask & bits[v])

    for i, s in enumerate(simplices):
        if i == 0:
            continue
        if deadline is not None and i % 64 == 0 and time.monotonic() > deadline:
            err = ResourceBudgetError(f"verification budget exhausted at index {i}")
            err.verified_prefix = i
            raise err
        inters = {masks[i] & masks[j] for j in range(i)}
        r_mask = 0
        for v in s.vertices:
            if masks[i] & ~bits[v] in inters:
                r_mask |= bits[v]
        bad = next((I for I in inters if I & r_mask == r_mask), None)
        if bad is not None:
            return VerifyResult(False, i, unpack(bad, s))
        if exhaustive:
            # sweep all faces against the maximal earlier intersections
            local_bit = {v: idx for idx, v in enumerate(s.vertices)}

            def localize(mask: int) -> int:
                out = 0
                for v in s.vertices:
                    if mask & bits[v]:
                        out |= 1 << local_bit[v]
                return out

            maximal = []
            for I in sorted(inters, key=lambda m: -bin(m).count("1")):
                if not any(I & ~J == 0 for J in maximal):
                    maximal.append(I)
            loc = [localize(I) for I in maximal]
            fail = _kernels.sweep_faces(loc, localize(r_mask), s.n)
            if fail >= 0:
                witness = frozenset(v for v in s.vertices
                                    if fail & (1 << local_bit[v]))
                return VerifyResult(False, i, witness)
    return VerifyResult(True)
