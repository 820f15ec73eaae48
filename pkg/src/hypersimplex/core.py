"""Subsets of a cyclically labeled ground set: circular distance, stability, sorting.

Ground-set elements are 1-based; all cyclic index arithmetic goes through
:func:`residue`, the single source of truth for canonical representatives.
Subsets are stored as strictly increasing tuples of ints.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import ParameterError

Subset = tuple[int, ...]
CharVec = tuple[int, ...]


def residue(n: int, i: int) -> int:
    """Canonical representative of i modulo n, in 1..n (never 0)."""
    return (i - 1) % n + 1


def validate_subset(n: int, elements: Subset, k: int | None = None) -> None:
    if n < 2:
        raise ParameterError(f"ambient size n={n} must be at least 2")
    if any(not 1 <= e <= n for e in elements):
        raise ParameterError(f"elements {elements} not within 1..{n}")
    if any(a >= b for a, b in zip(elements, elements[1:])):
        raise ParameterError(f"elements {elements} not strictly increasing")
    if k is not None and len(elements) != k:
        raise ParameterError(f"expected a {k}-subset, got {elements}")


def circular_distance(n: int, i: int, j: int) -> int:
    """Edge count of the shorter arc between vertices i and j of a labeled n-gon."""
    if n < 2:
        raise ParameterError(f"n={n} must be at least 2")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ParameterError(f"indices ({i},{j}) not within 1..{n}")
    d = abs(i - j)
    return min(d, n - d)


def _check_r(n: int, k: int, r: int) -> None:
    if not 0 < k < n:
        raise ParameterError(f"need 0 < k < n, got k={k}, n={n}")
    if not 1 <= r <= n // k:
        raise ParameterError(f"stability level r={r} outside 1..floor({n}/{k})={n // k}")


def is_r_stable(n: int, r: int, elements: Subset) -> bool:
    """True iff every pair of elements is at circular distance at least r."""
    validate_subset(n, elements)
    _check_r(n, len(elements), r)
    return all(circular_distance(n, a, b) >= r for a, b in combinations(elements, 2))


@dataclass(frozen=True)
class StableFamily:
    """All r-stable k-subsets of 1..n, in lexicographic order."""

    n: int
    k: int
    r: int
    members: tuple[Subset, ...]

    def to_json(self) -> dict:
        return {"n": self.n, "k": self.k, "r": self.r,
                "members": [list(m) for m in self.members]}


def enumerate_r_stable(n: int, k: int, r: int) -> StableFamily:
    """Enumerate the r-stable k-subsets of 1..n in lexicographic order."""
    _check_r(n, k, r)
    members = tuple(s for s in combinations(range(1, n + 1), k)
                    if all(circular_distance(n, a, b) >= r for a, b in combinations(s, 2)))
    return StableFamily(n, k, r, members)


def sort_pair(a: Subset, b: Subset, n: int) -> tuple[Subset, Subset, bool]:
    """Split the nondecreasing merge of the multiset a ∪ b into odd/even positions.

    Returns (u, v, sorted) where u takes positions 1,3,5,... of the merge,
    v takes 2,4,6,..., and sorted means (u, v) == (a, b).
    """
    validate_subset(n, a)
    validate_subset(n, b)
    if len(a) != len(b):
        raise ParameterError(f"subset sizes differ: {len(a)} vs {len(b)}")
    merged = sorted(a + b)  # two-pointer merge semantics; duplicates kept
    u = tuple(merged[0::2])
    v = tuple(merged[1::2])
    return u, v, (u == a and v == b)


def is_sort_closed(family: StableFamily) -> bool:
    """True iff splitting any two members leaves both halves inside the family."""
    members = set(family.members)
    for a, b in combinations(family.members, 2):
        u, v, _ = sort_pair(a, b, family.n)
        if u not in members or v not in members:
            return False
    return True


def subset_to_charvec(n: int, elements: Subset) -> CharVec:
    vec = [0] * n
    for e in elements:
        vec[e - 1] = 1
    return tuple(vec)


def charvec_support(vec: CharVec) -> Subset:
    return tuple(i + 1 for i, x in enumerate(vec) if x)


def min_pairwise_distance(n: int, elements: Subset) -> int:
    """Largest r for which the subset is r-stable."""
    return min(circular_distance(n, a, b) for a, b in combinations(elements, 2))
