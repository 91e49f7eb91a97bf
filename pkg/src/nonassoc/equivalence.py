"""The four-parameter equivalence on binary trees and brute-force class counts.

Two trees in T_n are equivalent under ``Params(d, e, k, l)`` when their left
depth vectors agree under ``~_k^d`` and their right depth vectors under
``~_l^e``.  ``b ~_k^d c`` means ``b_i = c_i (mod k)`` for every ``i``, and
``b_i = c_i`` whenever ``min(b_i, c_i) < d``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from . import _kernels
from .errors import check_budget
from .formulas import catalan
from .trees import (
    LEAF,
    BinaryTree,
    comb_tree,
    contains_at_left_depth,
    depth_vectors,
    enumerate_trees,
    internal_nodes,
    rotate_k,
    to_string,
)

__all__ = [
    "Params",
    "ClassPartition",
    "WeightedTree",
    "reduce_depth",
    "class_key",
    "key_table",
    "partition",
    "count_classes",
    "max_class_size",
    "class_sizes",
    "phi",
    "enumerate_weighted",
    "fiber_size",
    "expand_fiber",
    "minimal_trees",
    "maximal_trees",
    "rotation_components",
    "depth_of_nonassoc",
    "check_conjecture",
]


@dataclass(frozen=True)
class Params:
    """Depth thresholds ``d, e`` and moduli ``k, l`` (left and right)."""

    d: int = 1
    e: int = 1
    k: int = 1
    l: int = 1  # noqa: E741

    def __post_init__(self):
        for name in ("d", "e", "k", "l"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")

    def mirrored(self) -> Params:
        return Params(self.e, self.d, self.l, self.k)

    def as_dict(self) -> dict:
        return {"d": self.d, "e": self.e, "k": self.k, "l": self.l}


def reduce_depth(a: int, d: int, k: int) -> int:
    """Smallest representative of ``a`` under ``~_k^d``."""
    return a if a < d else d + (a - d) % k


def class_key(t: BinaryTree, p: Params) -> tuple[tuple[int, int], ...]:
    """Per-leaf pairs (reduced left depth, reduced right depth) in preorder."""
    ld, rd = depth_vectors(t)
    return tuple((reduce_depth(a, p.d, p.k), reduce_depth(b, p.e, p.l)) for a, b in zip(ld, rd))


def key_table(n: int, p: Params) -> np.ndarray:
    """Reduced ld columns followed by reduced rd columns, one row per tree of T_n."""
    check_budget(catalan(n), f"key_table({n})")
    ld, rd = _kernels.depth_tables(n)
    return np.hstack([_kernels.reduce_table(ld, p.d, p.k), _kernels.reduce_table(rd, p.e, p.l)])


@dataclass
class ClassPartition:
    """Classes of T_n as lists of indices into :func:`enumerate_trees`.

    Classes are ordered by their smallest member; members are increasing.
    """

    n: int
    params: Params
    classes: list[list[int]] = field(repr=False)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    @property
    def max_size(self) -> int:
        return max(self.sizes)

    @property
    def max_multiplicity(self) -> int:
        top = self.max_size
        return sum(1 for s in self.sizes if s == top)

    def as_sets(self) -> set[frozenset[int]]:
        return {frozenset(c) for c in self.classes}

    def to_json(self, verbose: bool = False) -> dict:
        out = {
            "params": self.params.as_dict(),
            "n": self.n,
            "class_count": self.class_count,
            "max_size": self.max_size,
            "max_multiplicity": self.max_multiplicity,
        }
        if verbose:
            trees = enumerate_trees(self.n)
            out["classes"] = [[to_string(trees[i]) for i in c] for c in self.classes]
        return out


def _group_labels(labels: np.ndarray) -> list[list[int]]:
    order = np.argsort(labels, kind="stable")
    _, starts = np.unique(labels[order], return_index=True)
    groups = [g.tolist() for g in np.split(order, starts[1:])]
    groups.sort(key=lambda g: g[0])
    return groups


def partition(n: int, p: Params) -> ClassPartition:
    keys = key_table(n, p)
    _, labels = np.unique(keys, axis=0, return_inverse=True)
    return ClassPartition(n, p, _group_labels(labels.reshape(-1)))


def class_sizes(n: int, p: Params) -> np.ndarray:
    _, sizes = np.unique(key_table(n, p), axis=0, return_counts=True)
    return sizes


def count_classes(n: int, p: Params) -> int:
    return int(len(class_sizes(n, p)))


def max_class_size(n: int, p: Params) -> tuple[int, int]:
    """Largest class size and the number of classes of that size."""
    sizes = class_sizes(n, p)
    top = int(sizes.max())
    return top, int((sizes == top).sum())


# -- contraction to weighted trees -----------------------------------------

@dataclass(frozen=True)
class WeightedTree:
    """A tree shape with a positive weight on each leaf (preorder)."""

    shape: BinaryTree
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.weights) != self.shape.n_leaves:
            raise ValueError("one weight per leaf is required")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive")

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def __str__(self) -> str:
        it = iter(self.weights)

        def render(t: BinaryTree) -> str:
            if t.is_leaf:
                w = next(it)
                return "·" if w == 1 else str(w)
            left = render(t.left)
            return f"({left} {render(t.right)})"

        return render(self.shape)


def _contractible(ld: int, rd: int, d: int, e: int) -> bool:
    return ld >= d - 1 and rd >= e - 1


def phi(t: BinaryTree, d: int, e: int) -> WeightedTree:
    """Contract every maximal (d, e)-contractible subtree to a leaf weighted by its leaf count."""
    if d < 1 or e < 1:
        raise ValueError("d, e must be at least 1")
    weights: list[int] = []

    def go(node: BinaryTree, ld: int, rd: int) -> BinaryTree:
        if node.is_leaf or _contractible(ld, rd, d, e):
            weights.append(node.n_leaves)
            return LEAF
        left = go(node.left, ld + 1, rd)
        return BinaryTree(left, go(node.right, ld, rd + 1))

    shape = go(t, 0, 0)
    return WeightedTree(shape, tuple(weights))


def enumerate_weighted(n: int, d: int, e: int) -> list[WeightedTree]:
    """The set T^{d,e}_n of weighted trees of total weight n + 1, generated directly."""
    if d < 1 or e < 1:
        raise ValueError("d, e must be at least 1")
    check_budget(catalan(n), f"enumerate_weighted({n})")
    memo: dict[tuple[int, int, int], list[tuple[BinaryTree, tuple[int, ...]]]] = {}

    def gen(m: int, ld: int, rd: int):
        # thresholds only matter up to d-1 and e-1
        key = (m, min(ld, d - 1), min(rd, e - 1))
        if key in memo:
            return memo[key]
        if _contractible(ld, rd, d, e):
            out = [(LEAF, (m + 1,))]
        elif m == 0:
            out = [(LEAF, (1,))]
        else:
            out = []
            for i in range(m):
                lefts = gen(i, ld + 1, rd)
                rights = gen(m - 1 - i, ld, rd + 1)
                for (ls, lw), (rs, rw) in product(lefts, rights):
                    out.append((BinaryTree(ls, rs), lw + rw))
        memo[key] = out
        return out

    return [WeightedTree(s, w) for s, w in gen(n, 0, 0)]


def fiber_size(wt: WeightedTree) -> int:
    return math.prod(catalan(m - 1) for m in wt.weights)


def expand_fiber(wt: WeightedTree) -> list[BinaryTree]:
    """Every tree obtained by substituting a tree with ``m_i`` leaves at the i-th leaf."""
    choices = [enumerate_trees(m - 1) for m in wt.weights]
    out = []
    for pick in product(*choices):
        it = iter(pick)

        def build(t: BinaryTree) -> BinaryTree:
            if t.is_leaf:
                return next(it)
            left = build(t.left)
            return BinaryTree(left, build(t.right))

        out.append(build(wt.shape))
    return out


# -- the (d choose k)-order --------------------------------------------------

def minimal_trees(n: int, d: int, k: int) -> list[BinaryTree]:
    """Trees of T_n avoiding comb_k^1 at every left depth >= d - 1."""
    pattern = comb_tree(k, hatted=True)
    return [t for t in enumerate_trees(n) if not contains_at_left_depth(t, pattern, d - 1)]


def maximal_trees(n: int, d: int, k: int) -> list[BinaryTree]:
    """Trees of T_n avoiding comb_{k+1} at every left depth >= d - 1; counts M^d_{k,n}."""
    pattern = comb_tree(k + 1)
    return [t for t in enumerate_trees(n) if not contains_at_left_depth(t, pattern, d - 1)]


def _left_spine(t: BinaryTree) -> int:
    length = 0
    while not t.is_leaf:
        length += 1
        t = t.left
    return length


def rotation_components(n: int, d: int, k: int) -> ClassPartition:
    """Connected components of T_n under k-rotations at nodes of left depth >= d - 1."""
    trees = enumerate_trees(n)
    index = {t: i for i, t in enumerate(trees)}
    rows, cols = [], []
    for i, t in enumerate(trees):
        for node_index, sub, ld, _ in internal_nodes(t):
            if ld >= d - 1 and _left_spine(sub) >= k + 1:
                rows.append(i)
                cols.append(index[rotate_k(t, node_index, k, "right")])
    size = len(trees)
    graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(size, size))
    _, labels = connected_components(graph, directed=False)
    return ClassPartition(n, Params(d, 1, k, 1), _group_labels(labels))


def depth_of_nonassoc(p: Params, nmax: int) -> int | None:
    """Least ``n + 1`` with fewer classes than trees, or ``None`` if none for n <= nmax."""
    by_count = by_size = None
    for n in range(nmax + 1):
        top, _ = max_class_size(n, p)
        if by_count is None and count_classes(n, p) < catalan(n):
            by_count = n + 1
        if by_size is None and top > 1:
            by_size = n + 1
        if by_count is not None and by_size is not None:
            break
    if by_count != by_size:
        raise ArithmeticError(f"depth definitions disagree: {by_count} vs {by_size}")
    return by_count


def check_conjecture(k: int, l: int, nmax: int) -> dict:  # noqa: E741
    """Compare C_{k,l,n} with C_{k+l-1,n} for n <= nmax.  Reports; never raises on failure."""
    rows = []
    first_failure = None
    for n in range(nmax + 1):
        lhs = count_classes(n, Params(1, 1, k, l))
        rhs = count_classes(n, Params(1, 1, k + l - 1, 1))
        rows.append({"n": n, "lhs": lhs, "rhs": rhs, "equal": lhs == rhs})
        if lhs != rhs and first_failure is None:
            first_failure = n
    return {
        "k": k,
        "l": l,
        "nmax": nmax,
        "rows": rows,
        "holds": first_failure is None,
        "first_failure": first_failure,
    }


def pairwise_partition(n: int, p: Params) -> list[frozenset[int]]:
    """Classes rebuilt from the pairwise relation itself, without canonical keys."""
    ld, rd = _kernels.depth_tables(n)
    rel = _kernels.pairwise_equivalent(ld, p.d, p.k) & _kernels.pairwise_equivalent(rd, p.e, p.l)
    seen: set[int] = set()
    out = []
    for i in range(rel.shape[0]):
        if i not in seen:
            members = frozenset(np.flatnonzero(rel[i]).tolist())
            seen |= members
            out.append(members)
    return out
