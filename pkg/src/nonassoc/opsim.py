"""The operation f*g = xf + yg in a quotient ring, and a finite-magma profiler.

In ``Q[x, y]/(x^{d+k} - x^d, y^{e+l} - y^e)`` a parenthesization of
``f_0, ..., f_n`` expands to ``sum_i x^{a_i} y^{b_i} f_i``.  Since the f_i are
independent, two parenthesizations agree as functions exactly when their
exponent lists agree after reduction, so no polynomial arithmetic is needed.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ResourceLimitError
from .formulas import catalan
from .trees import BinaryTree, depth_vectors, enumerate_trees

__all__ = [
    "RingParams",
    "TermVector",
    "expand",
    "equal_as_functions",
    "MagmaTable",
    "MagmaProfile",
    "profile_magma",
    "DEFAULT_BUDGET",
    "expand_raw",
    "subtraction_magma",
]

DEFAULT_BUDGET = 20_000_000


def _reduce(a: int, d: int, k: int) -> int:
    return a if a < d else d + (a - d) % k


@dataclass(frozen=True)
class RingParams:
    """Exponent reduction for the ideal (x^{d+k} - x^d, y^{e+l} - y^e); d, e may be 0."""

    d: int
    k: int
    e: int
    l: int  # noqa: E741

    def __post_init__(self):
        if self.d < 0 or self.e < 0:
            raise ValueError("d and e must be nonnegative")
        if self.k < 1 or self.l < 1:
            raise ValueError("k and l must be positive")

    def reduce_x(self, a: int) -> int:
        return _reduce(a, self.d, self.k)

    def reduce_y(self, b: int) -> int:
        return _reduce(b, self.e, self.l)


# Entry i is the exponent pair (a_i, b_i) of the monomial multiplying f_i.
TermVector = tuple[tuple[int, int], ...]


def expand(t: BinaryTree, rp: RingParams) -> TermVector:
    """Coefficient monomials of the leaves of ``t``, computed by recursive multiplication."""
    out: list[tuple[int, int]] = []

    # multiplying f*g by x or y shifts every monomial of the corresponding side
    def go(node: BinaryTree, a: int, b: int) -> None:
        if node.is_leaf:
            out.append((a, b))
            return
        go(node.left, rp.reduce_x(a + 1), b)
        go(node.right, a, rp.reduce_y(b + 1))

    go(t, 0, 0)
    return tuple(out)


def equal_as_functions(t: BinaryTree, u: BinaryTree, rp: RingParams) -> bool:
    if t.n_leaves != u.n_leaves:
        raise ValueError(f"leaf counts differ: {t.n_leaves} vs {u.n_leaves}")
    return expand(t, rp) == expand(u, rp)


def expand_raw(t: BinaryTree) -> TermVector:
    """Unreduced exponents, i.e. the left and right depths zipped."""
    ld, rd = depth_vectors(t)
    return tuple(zip(ld, rd))


class MagmaTable:
    """A binary operation on ``{0, ..., s-1}`` given by its multiplication table."""

    def __init__(self, table, labels=None):
        arr = np.asarray(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise ValueError("table must be a non-empty square array")
        s = arr.shape[0]
        if arr.min() < 0 or arr.max() >= s:
            raise ValueError("table entries must lie in the carrier")
        self.table = arr
        self.labels = list(labels) if labels is not None else [str(i) for i in range(s)]
        if len(self.labels) != s:
            raise ValueError("one label per carrier element is required")

    @property
    def size(self) -> int:
        return self.table.shape[0]

    def __call__(self, a, b):
        return self.table[a, b]

    def __repr__(self):
        return f"MagmaTable(size={self.size})"

    @classmethod
    def from_function(cls, s: int, op) -> MagmaTable:
        return cls([[op(a, b) for b in range(s)] for a in range(s)])

    @classmethod
    def from_csv(cls, path) -> MagmaTable:
        """Header row of carrier labels, then s rows of s labels."""
        with open(Path(path), newline="") as fh:
            rows = [[c.strip() for c in row] for row in csv.reader(fh) if row and any(c.strip() for c in row)]
        if not rows:
            raise ValueError(f"{path}: empty table")
        labels = rows[0]
        if len(set(labels)) != len(labels):
            raise ValueError(f"{path}: duplicate carrier labels")
        index = {lab: i for i, lab in enumerate(labels)}
        body = rows[1:]
        if len(body) != len(labels):
            raise ValueError(f"{path}: expected {len(labels)} rows, found {len(body)}")
        table = []
        for lineno, row in enumerate(body, start=2):
            if len(row) != len(labels):
                raise ValueError(f"{path}:{lineno}: expected {len(labels)} entries")
            try:
                table.append([index[c] for c in row])
            except KeyError as exc:
                raise ValueError(f"{path}:{lineno}: {exc.args[0]!r} is not a carrier label") from None
        return cls(table, labels)

    def is_associative(self) -> bool:
        t = self.table
        lhs = t[t]  # lhs[a, b, c] = (ab)c
        rhs = t[np.arange(self.size)[:, None, None], t[None, :, :]]
        return bool((lhs == rhs).all())


@dataclass
class MagmaProfile:
    counts: list[int]
    max_sizes: list[int]
    multiplicities: list[int]
    depth: int | None

    def to_json(self) -> dict:
        return {
            "counts": self.counts,
            "max_sizes": self.max_sizes,
            "multiplicities": self.multiplicities,
            "depth": self.depth,
        }


def _function_tables(n: int, op: np.ndarray, cache: dict) -> list[np.ndarray]:
    """Value arrays over A^{m+1} for every tree with m internal nodes, m <= n.

    For a subtree covering m + 1 consecutive factors the array is flattened
    with the first factor most significant, so joining two subtrees is an
    outer operation followed by a reshape.
    """
    s = op.shape[0]
    if 0 not in cache:
        cache[0] = [np.arange(s, dtype=np.int8 if s <= 127 else np.int32)]
    for m in range(1, n + 1):
        if m in cache:
            continue
        cur = []
        for i in range(m):
            for left in cache[i]:
                for right in cache[m - 1 - i]:
                    cur.append(op[left[:, None], right[None, :]].reshape(-1))
        cache[m] = cur
    return cache[n]


def profile_magma(tbl: MagmaTable, nmax: int, budget: int = DEFAULT_BUDGET) -> MagmaProfile:
    """Group parenthesizations by their full value table on A^{n+1}, for each n <= nmax."""
    s = tbl.size
    for n in range(nmax + 1):
        cost = catalan(n) * s ** (n + 1)
        if cost > budget:
            raise ResourceLimitError(
                f"profiling n={n} needs {cost} evaluations, budget is {budget}"
            )
    op = tbl.table.astype(np.int8 if s <= 127 else np.int32)
    cache: dict = {}
    counts, tops, mults = [], [], []
    depth_by_count = depth_by_size = None
    for n in range(nmax + 1):
        arrays = _function_tables(n, op, cache)
        _, sizes = np.unique(np.stack(arrays), axis=0, return_counts=True)
        top = int(sizes.max())
        counts.append(len(sizes))
        tops.append(top)
        mults.append(int((sizes == top).sum()))
        if depth_by_count is None and len(sizes) < catalan(n):
            depth_by_count = n + 1
        if depth_by_size is None and top > 1:
            depth_by_size = n + 1
    if depth_by_count != depth_by_size:
        raise ArithmeticError(f"depth definitions disagree: {depth_by_count} vs {depth_by_size}")
    return MagmaProfile(counts, tops, mults, depth_by_count)


def subtraction_magma(m: int) -> MagmaTable:
    return MagmaTable.from_function(m, lambda a, b: (a - b) % m)


def trees_with_vectors(n: int, rp: RingParams):
    for t in enumerate_trees(n):
        yield t, expand(t, rp)
