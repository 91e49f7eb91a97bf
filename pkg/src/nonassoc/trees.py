"""Binary trees, plane trees and Dyck paths, with the bijections among them.

A :class:`BinaryTree` with ``n`` internal nodes has ``n + 1`` leaves, indexed
``0..n`` in preorder.  The left (right) depth of a leaf is the number of left
(right) edges on the path from the root down to it.

Trees are immutable and hash structurally, so they can be used as dict keys
and shared freely between enumerations.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import FactorizationError, check_budget
from .formulas import catalan

__all__ = [
    "BinaryTree",
    "LEAF",
    "join",
    "left_fold",
    "enumerate_trees",
    "depth_vectors",
    "left_depths",
    "right_depths",
    "from_left_depths",
    "mirror",
    "internal_nodes",
    "to_string",
    "parse_tree",
    "PlaneTree",
    "to_plane_tree",
    "to_binary_tree",
    "enumerate_plane_trees",
    "plane_to_dyck",
    "dyck_to_plane",
    "is_dyck",
    "comb_tree",
    "contains_at_left_depth",
    "rotate_k",
    "insert_border",
    "contract_first",
]


class BinaryTree:
    """A full binary tree: either a leaf or a node with two subtrees."""

    __slots__ = ("left", "right", "size", "_hash")

    def __init__(self, left: BinaryTree | None = None, right: BinaryTree | None = None):
        if (left is None) != (right is None):
            raise ValueError("a node needs both subtrees or neither")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        if left is None:
            object.__setattr__(self, "size", 0)
            object.__setattr__(self, "_hash", 0x5EED)
        else:
            object.__setattr__(self, "size", left.size + right.size + 1)
            object.__setattr__(self, "_hash", hash((left._hash, right._hash)))

    def __setattr__(self, name, value):
        raise AttributeError("BinaryTree is immutable")

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    @property
    def n_leaves(self) -> int:
        return self.size + 1

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, BinaryTree):
            return NotImplemented
        if self._hash != other._hash or self.size != other.size:
            return False
        if self.left is None:
            return True
        return self.left == other.left and self.right == other.right

    def __reduce__(self):
        return (BinaryTree, (self.left, self.right))

    def __repr__(self) -> str:
        return f"BinaryTree({to_string(self)!r})"

    def __str__(self) -> str:
        return to_string(self)


LEAF = BinaryTree()


def join(s: BinaryTree, t: BinaryTree) -> BinaryTree:
    """The graft ``s ∧ t``: a new root with left subtree ``s`` and right subtree ``t``."""
    return BinaryTree(s, t)


def left_fold(trees: Sequence[BinaryTree]) -> BinaryTree:
    """``t_0 ∧ t_1 ∧ ... ∧ t_m`` with the grafts performed left to right."""
    it = iter(trees)
    acc = next(it)
    for t in it:
        acc = BinaryTree(acc, t)
    return acc


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[BinaryTree, ...]:
    if n == 0:
        return (LEAF,)
    out = []
    for i in range(n):
        rights = _trees(n - 1 - i)
        for left in _trees(i):
            out.extend(BinaryTree(left, right) for right in rights)
    return tuple(out)


def enumerate_trees(n: int) -> tuple[BinaryTree, ...]:
    """All trees with ``n`` internal nodes in canonical order.

    The order is left-subtree-size major, then recursively by left subtree,
    then by right subtree.  It matches the row order of
    :func:`nonassoc._kernels.depth_tables`.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    check_budget(catalan(n), f"enumerate_trees({n})")
    return _trees(n)


def _depths(t: BinaryTree, ld: int, rd: int, out_l: list, out_r: list) -> None:
    while not t.is_leaf:
        _depths(t.left, ld + 1, rd, out_l, out_r)
        t = t.right
        rd += 1
    out_l.append(ld)
    out_r.append(rd)


def depth_vectors(t: BinaryTree) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return ``(ld(t), rd(t))``, the left and right depths of the leaves in preorder."""
    out_l: list[int] = []
    out_r: list[int] = []
    _depths(t, 0, 0, out_l, out_r)
    return tuple(out_l), tuple(out_r)


def left_depths(t: BinaryTree) -> tuple[int, ...]:
    return depth_vectors(t)[0]


def right_depths(t: BinaryTree) -> tuple[int, ...]:
    return depth_vectors(t)[1]


def from_left_depths(ld: Sequence[int]) -> BinaryTree:
    """Inverse of :func:`left_depths`; raises ``ValueError`` on an invalid vector."""
    ld = list(ld)
    if not ld or ld[-1] != 0:
        raise ValueError(f"not a left-depth vector: {ld}")
    degrees = [ld[0]] + [ld[i] - ld[i - 1] + 1 for i in range(1, len(ld))]
    tree = to_binary_tree(PlaneTree.from_multidegree(degrees))
    if list(left_depths(tree)) != ld:
        raise ValueError(f"not a left-depth vector: {ld}")
    return tree


def mirror(t: BinaryTree) -> BinaryTree:
    """Reflect ``t`` about a vertical line; swaps the roles of ld and rd."""
    if t.is_leaf:
        return t
    return BinaryTree(mirror(t.right), mirror(t.left))


def internal_nodes(t: BinaryTree) -> Iterator[tuple[int, BinaryTree, int, int]]:
    """Yield ``(index, subtree, left_depth, right_depth)`` for internal nodes in preorder."""
    counter = 0
    stack = [(t, 0, 0)]
    while stack:
        node, ld, rd = stack.pop()
        if node.is_leaf:
            continue
        yield counter, node, ld, rd
        counter += 1
        stack.append((node.right, ld, rd + 1))
        stack.append((node.left, ld + 1, rd))


def _all_nodes(t: BinaryTree) -> Iterator[tuple[BinaryTree, int]]:
    stack = [(t, 0)]
    while stack:
        node, ld = stack.pop()
        yield node, ld
        if not node.is_leaf:
            stack.append((node.right, ld))
            stack.append((node.left, ld + 1))


def _replace_internal(t: BinaryTree, index: int, fn) -> BinaryTree:
    """Replace the ``index``-th internal node (preorder) by ``fn(subtree)``."""
    if not 0 <= index < t.size:
        raise ValueError(f"node index {index} out of range for a tree with {t.size} internal nodes")

    def go(node: BinaryTree, base: int) -> BinaryTree:
        if base == index:
            return fn(node)
        left_count = node.left.size
        if index <= base + left_count:
            return BinaryTree(go(node.left, base + 1), node.right)
        return BinaryTree(node.left, go(node.right, base + 1 + left_count))

    return go(t, 0)


# -- serialization ---------------------------------------------------------

LEAF_SYMBOL = "·"


def to_string(t: BinaryTree) -> str:
    """Balanced-parenthesis form: leaf ``·``, node ``(L R)``."""
    if t.is_leaf:
        return LEAF_SYMBOL
    return f"({to_string(t.left)} {to_string(t.right)})"


def parse_tree(text: str) -> BinaryTree:
    """Parse the output of :func:`to_string`.  ``.`` is accepted as a leaf too."""
    tokens = [c for c in text if not c.isspace()]
    pos = 0

    def parse() -> BinaryTree:
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError(f"unexpected end of tree string {text!r}")
        c = tokens[pos]
        pos += 1
        if c in (LEAF_SYMBOL, "."):
            return LEAF
        if c != "(":
            raise ValueError(f"unexpected {c!r} at position {pos - 1} in {text!r}")
        left = parse()
        right = parse()
        if pos >= len(tokens) or tokens[pos] != ")":
            raise ValueError(f"expected ')' at position {pos} in {text!r}")
        pos += 1
        return BinaryTree(left, right)

    tree = parse()
    if pos != len(tokens):
        raise ValueError(f"trailing characters in {text!r}")
    return tree


# -- plane trees and Dyck paths --------------------------------------------

@dataclass(frozen=True)
class PlaneTree:
    """An ordered (plane) tree; the children are kept left to right."""

    children: tuple[PlaneTree, ...] = ()

    @property
    def n_nodes(self) -> int:
        return 1 + sum(c.n_nodes for c in self.children)

    @property
    def multidegree(self) -> tuple[int, ...]:
        """Node degrees ``(d_0, ..., d_n)`` in preorder."""
        out: list[int] = []
        stack = [self]
        while stack:
            node = stack.pop()
            out.append(len(node.children))
            stack.extend(reversed(node.children))
        return tuple(out)

    @property
    def depth(self) -> int:
        return 1 + max(c.depth for c in self.children) if self.children else 0

    @classmethod
    def from_multidegree(cls, degrees: Sequence[int]) -> PlaneTree:
        degrees = list(degrees)
        if any(d < 0 for d in degrees) or sum(degrees) != len(degrees) - 1:
            raise ValueError(f"not a preorder degree sequence: {degrees}")
        pos = 0

        def build() -> PlaneTree:
            nonlocal pos
            if pos >= len(degrees):
                raise ValueError(f"not a preorder degree sequence: {degrees}")
            d = degrees[pos]
            pos += 1
            return cls(tuple(build() for _ in range(d)))

        tree = build()
        if pos != len(degrees):
            raise ValueError(f"not a preorder degree sequence: {degrees}")
        return tree


def to_plane_tree(t: BinaryTree) -> PlaneTree:
    """Contract the left edges of ``t``.

    Each maximal chain of left edges collapses to one plane-tree node (one per
    leaf of ``t``); right subtrees hanging off the chain become its children,
    the deepest one first.  Then ``ld_i = d_0 + ... + d_i - i``.
    """
    hanging = []
    node = t
    while not node.is_leaf:
        hanging.append(node.right)
        node = node.left
    return PlaneTree(tuple(to_plane_tree(r) for r in reversed(hanging)))


def to_binary_tree(T: PlaneTree) -> BinaryTree:
    """Inverse of :func:`to_plane_tree`."""
    return left_fold([LEAF] + [to_binary_tree(c) for c in T.children])


def enumerate_plane_trees(n_nodes: int) -> Iterator[PlaneTree]:
    """All plane trees with ``n_nodes`` nodes, built directly from their children."""
    if n_nodes < 1:
        raise ValueError("a plane tree has at least one node")
    check_budget(catalan(n_nodes - 1), f"enumerate_plane_trees({n_nodes})")
    for forest in _forests(n_nodes - 1):
        yield PlaneTree(forest)


@lru_cache(maxsize=None)
def _forests(n_nodes: int) -> tuple[tuple[PlaneTree, ...], ...]:
    if n_nodes == 0:
        return ((),)
    out = []
    for first in range(1, n_nodes + 1):
        for sub in _forests(first - 1):
            head = PlaneTree(sub)
            out.extend((head,) + rest for rest in _forests(n_nodes - first))
    return tuple(out)


def is_dyck(word: str) -> bool:
    height = 0
    for step in word:
        if step == "U":
            height += 1
        elif step == "D":
            height -= 1
        else:
            return False
        if height < 0:
            return False
    return height == 0


def plane_to_dyck(T: PlaneTree) -> str:
    """The word ``U^{d_0} D U^{d_1} D ... D U^{d_n}`` of the multidegree."""
    return "D".join("U" * d for d in T.multidegree)


def dyck_to_plane(word: str) -> PlaneTree:
    """Inverse of :func:`plane_to_dyck`; raises ``ValueError`` on a malformed path."""
    height = 0
    for i, step in enumerate(word):
        if step not in "UD":
            raise ValueError(f"bad step {step!r} at position {i}")
        height += 1 if step == "U" else -1
        if height < 0:
            raise ValueError(f"path {word!r} drops below zero at step {i}")
    if height != 0:
        raise ValueError(f"path {word!r} ends at height {height}")
    return PlaneTree.from_multidegree([len(run) for run in word.split("D")])


# -- combs, containment, rotations -----------------------------------------

def comb_tree(k: int, hatted: bool = False) -> BinaryTree:
    """``comb_k`` (left comb with k+1 leaves), or ``comb_k^1 = leaf ∧ comb_k``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    comb = left_fold([LEAF] * (k + 1))
    return BinaryTree(LEAF, comb) if hatted else comb


def _matches(pattern: BinaryTree, node: BinaryTree) -> bool:
    # pattern leaves match any subtree: only the top fragment is compared
    if pattern.is_leaf:
        return True
    if node.is_leaf:
        return False
    return _matches(pattern.left, node.left) and _matches(pattern.right, node.right)


def contains_at_left_depth(t: BinaryTree, s: BinaryTree, dmin: int) -> bool:
    """True iff some node of ``t`` at left depth >= ``dmin`` roots a subtree shaped like ``s``."""
    return any(ld >= dmin and _matches(s, node) for node, ld in _all_nodes(t))


def _right_rotation(sub: BinaryTree, k: int) -> BinaryTree:
    hanging = []
    node = sub
    for _ in range(k + 1):
        if node.is_leaf:
            raise FactorizationError(f"left spine shorter than {k + 1}; no right {k}-rotation")
        hanging.append(node.right)
        node = node.left
    # node is t_0, hanging is t_{k+1}, ..., t_1
    return BinaryTree(node, left_fold(hanging[::-1]))


def _left_rotation(sub: BinaryTree, k: int) -> BinaryTree:
    if sub.is_leaf:
        raise FactorizationError("a leaf cannot be rotated")
    t0, rest = sub.left, sub.right
    hanging = []
    node = rest
    for _ in range(k):
        if node.is_leaf:
            raise FactorizationError(f"right subtree spine shorter than {k}; no left {k}-rotation")
        hanging.append(node.right)
        node = node.left
    return left_fold([t0, node] + hanging[::-1])


def rotate_k(t: BinaryTree, node: int, k: int, direction: str = "right") -> BinaryTree:
    """Apply a ``k``-rotation at the internal node with preorder index ``node``.

    ``right``: ``t_0 ∧ t_1 ∧ ... ∧ t_{k+1}  ->  t_0 ∧ (t_1 ∧ ... ∧ t_{k+1})``;
    ``left`` is its inverse.  A right rotation lowers the left depth of every
    leaf of ``t_0`` by ``k`` and leaves all other leaves alone.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if direction == "right":
        return _replace_internal(t, node, lambda sub: _right_rotation(sub, k))
    if direction == "left":
        return _replace_internal(t, node, lambda sub: _left_rotation(sub, k))
    raise ValueError(f"direction must be 'left' or 'right', not {direction!r}")


def insert_border(t: BinaryTree, i: int) -> BinaryTree:
    """``t^{+i}``: insert a new leftmost leaf of left depth ``i``.

    The subtree at the ``i``-th node of the left border (the root is the first)
    is replaced by ``leaf ∧ subtree``, so ``ld(t^{+i}) = (i, ld(t))``.
    """
    h = left_depths(t)[0] + 1
    if not 1 <= i <= h:
        raise ValueError(f"border index {i} outside 1..{h}")

    def go(node: BinaryTree, level: int) -> BinaryTree:
        if level == i:
            return BinaryTree(LEAF, node)
        return BinaryTree(go(node.left, level + 1), node.right)

    return go(t, 1)


def contract_first(t: BinaryTree) -> BinaryTree:
    """``t_-``: contract the leftmost leaf, its sibling and their parent to one node."""
    if t.is_leaf:
        raise ValueError("a single leaf has nothing to contract")
    if t.left.is_leaf:
        return t.right
    return BinaryTree(contract_first(t.left), t.right)
