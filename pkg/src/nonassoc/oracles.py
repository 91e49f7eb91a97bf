"""Independent enumerations that reproduce C^d_n and C^d_{k,n}.

Dyck paths, constrained plane trees, nilpotent ideals of the algebra of
strictly upper triangular matrices, 132-avoiding permutations and weighted
Motzkin-type paths.  None of these use the depth-vector machinery.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from . import _kernels
from .errors import ResourceLimitError, check_budget
from .formulas import catalan
from .trees import enumerate_plane_trees

__all__ = [
    "count_dyck_avoiding",
    "count_dyck_height_at_most",
    "count_plane_trees_constrained",
    "NilpotentIdeal",
    "enumerate_ideals",
    "ideal_order",
    "bounce_parts",
    "count_ideals_by_order",
    "order_histogram",
    "bounce_histogram",
    "count_avoiding_perms",
    "weighted_path_count",
    "PERM_CAP",
]

PERM_CAP = 10


def count_dyck_avoiding(n: int, k: int, dmin: int) -> int:
    """Dyck paths of semilength n with no factor D U^k starting at height >= dmin."""
    if n < 0 or k < 1:
        raise ValueError("need n >= 0 and k >= 1")
    check_budget(catalan(n), f"count_dyck_avoiding({n})")
    return int(_kernels.dyck_avoiding_count(n, k, dmin))


def count_dyck_height_at_most(n: int, h: int) -> int:
    if n < 0:
        raise ValueError("need n >= 0")
    check_budget(catalan(n), f"count_dyck_height_at_most({n})")
    hist = _kernels.dyck_height_histogram(n)
    return int(sum(hist[: max(h, -1) + 1]))


def _plane_ok(degrees: Sequence[int], d: int, k: int) -> bool:
    # node i sits below a left run of depth d_0 + ... + d_{i-1} - i + 1
    running = 0
    for i, deg in enumerate(degrees):
        if i and running - i >= d - 1 and deg >= k:
            return False
        running += deg
    return True


def count_plane_trees_constrained(n: int, d: int, k: int) -> int:
    """Plane trees with n + 1 nodes where ``d_0 + ... + d_{i-1} - i >= d - 1`` forces ``d_i < k``."""
    return sum(1 for T in enumerate_plane_trees(n + 1) if _plane_ok(T.multidegree, d, k))


# -- nilpotent ideals -------------------------------------------------------

@dataclass(frozen=True)
class NilpotentIdeal:
    """Star pattern of an ideal of n x n strictly upper triangular matrices.

    ``parts[i]`` stars sit at the right end of row i (0-based), so the
    partition fits in the staircase ``(n-1, ..., 1, 0)``.
    """

    n: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if len(self.parts) != self.n:
            raise ValueError("one part per row is required")
        for i, p in enumerate(self.parts):
            if p < 0 or p > self.n - 1 - i:
                raise ValueError(f"row {i} has {p} stars, outside the staircase")
            if i and p > self.parts[i - 1]:
                raise ValueError("parts must be weakly decreasing")

    @cached_property
    def boundary(self) -> tuple[int, ...]:
        """``c_i``: row i (1-based) has stars exactly in columns ``c_i + 1 .. n``."""
        return tuple(self.n - p for p in self.parts)

    def starred(self, i: int, j: int) -> bool:
        """Cell (i, j), 1-based."""
        return j > self.boundary[i - 1]

    def dyck_word(self) -> str:
        """Boundary path from the top-left corner: U for each column, D for each row."""
        word = []
        col = 0
        for c in self.boundary:
            word.append("U" * (c - col))
            word.append("D")
            col = c
        return "".join(word) + "U" * (self.n - col)


def enumerate_ideals(n: int) -> Iterator[NilpotentIdeal]:
    if n < 1:
        raise ValueError("n must be at least 1")
    check_budget(catalan(n), f"enumerate_ideals({n})")

    def go(i: int, cap: int, acc: list[int]):
        if i == n:
            yield NilpotentIdeal(n, tuple(acc))
            return
        for p in range(min(cap, n - 1 - i) + 1):
            acc.append(p)
            yield from go(i + 1, p, acc)
            acc.pop()

    yield from go(0, n - 1, [])


def ideal_order(ideal: NilpotentIdeal) -> int:
    """Least d with I^d = 0: one more than the longest chain of starred cells."""
    n = ideal.n
    longest = [0] * (n + 1)  # longest[j]: chain of starred cells ending in column j
    for j in range(1, n + 1):
        for i in range(1, j):
            if ideal.starred(i, j) and longest[i] + 1 > longest[j]:
                longest[j] = longest[i] + 1
    return max(longest) + 1


def bounce_parts(ideal: NilpotentIdeal) -> int:
    """Number of bounces of the path from row 1, jumping from row p + 1 to its boundary column."""
    c = ideal.boundary
    p, parts = 0, 0
    while p < ideal.n:
        p = c[p]
        parts += 1
    return parts


def count_ideals_by_order(n: int, d: int) -> int:
    if d < 1:
        raise ValueError("d must be at least 1")
    return sum(1 for I in enumerate_ideals(n) if ideal_order(I) <= d)


def order_histogram(n: int) -> list[int]:
    hist = [0] * (n + 1)
    for I in enumerate_ideals(n):
        hist[ideal_order(I)] += 1
    return hist


def bounce_histogram(n: int) -> list[int]:
    hist = [0] * (n + 1)
    for I in enumerate_ideals(n):
        hist[bounce_parts(I)] += 1
    return hist


# -- permutations -------------------------------------------------------------

def count_avoiding_perms(n: int, d: int) -> int:
    """Permutations of n avoiding 132 whose longest increasing subsequence is at most d."""
    if n > PERM_CAP:
        raise ResourceLimitError(f"permutation enumeration is capped at n <= {PERM_CAP}")
    if n < 0 or d < 1:
        raise ValueError("need n >= 0 and d >= 1")
    hist = _kernels.lis_histogram_132(n)
    return int(sum(hist[: d + 1]))


# -- weighted paths -------------------------------------------------------------

def weighted_path_count(n: int, d: int, endpoint: str = "axis") -> int:
    """Paths of U, D, H steps staying weakly above the axis, with total weight n.

    U and D steps weakly below height d weigh 1/2, other steps weigh 1, and
    H steps strictly below d are forbidden.  Weights are doubled so the DP
    runs over integers.  ``endpoint="axis"`` (returning to height 0) is the
    convention matching C^d_{3,n}; ``"any"`` drops that condition.
    """
    if n < 0 or d < 0:
        raise ValueError("need n, d >= 0")
    if endpoint not in ("axis", "any"):
        raise ValueError(f"unknown endpoint convention {endpoint!r}")
    total = 2 * n
    # ways[w][h]: paths of doubled weight w ending at height h
    ways = [[0] * (total + 2) for _ in range(total + 1)]
    ways[0][0] = 1
    for w in range(total + 1):
        for h, count in enumerate(ways[w]):
            if not count:
                continue
            up = 1 if h + 1 <= d else 2
            if w + up <= total and h + 1 <= total:
                ways[w + up][h + 1] += count
            if h > 0:
                down = 1 if h <= d else 2
                if w + down <= total:
                    ways[w + down][h - 1] += count
            if h >= d and w + 2 <= total:
                ways[w + 2][h] += count
    return ways[total][0] if endpoint == "axis" else sum(ways[total])
