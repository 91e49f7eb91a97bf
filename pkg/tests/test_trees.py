import pickle

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import trees
from nonassoc.errors import FactorizationError, ResourceLimitError
from nonassoc.formulas import catalan
from nonassoc.trees import (
    LEAF,
    BinaryTree,
    PlaneTree,
    comb_tree,
    contains_at_left_depth,
    contract_first,
    depth_vectors,
    dyck_to_plane,
    enumerate_plane_trees,
    enumerate_trees,
    from_left_depths,
    insert_border,
    internal_nodes,
    is_dyck,
    left_depths,
    left_fold,
    mirror,
    parse_tree,
    plane_to_dyck,
    right_depths,
    rotate_k,
    to_binary_tree,
    to_plane_tree,
    to_string,
)


def brute_dyck(n):
    # every U/D word of length 2n, filtered
    from itertools import product
    return ["".join(w) for w in product("UD", repeat=2 * n) if is_dyck("".join(w))]


@pytest.mark.parametrize("n", range(0, 11))
def test_enumeration_count_and_distinct(n):
    ts = enumerate_trees(n)
    assert len(ts) == catalan(n)
    assert len(set(ts)) == len(ts)
    assert all(t.size == n for t in ts)


def test_three_internal_nodes_give_five_trees():
    assert {to_string(t) for t in enumerate_trees(3)} == {
        "(((· ·) ·) ·)", "((· (· ·)) ·)", "((· ·) (· ·))", "(· ((· ·) ·))", "(· (· (· ·)))",
    }


def test_enumeration_cap():
    with pytest.raises(ResourceLimitError):
        enumerate_trees(16)
    with pytest.raises(ValueError):
        enumerate_trees(-1)


def test_immutable_and_hashable():
    t = parse_tree("((· ·) ·)")
    with pytest.raises(AttributeError):
        t.left = LEAF
    assert t == parse_tree("((. .) .)")
    assert hash(t) == hash(parse_tree("((· ·) ·)"))
    assert pickle.loads(pickle.dumps(t)) == t
    with pytest.raises(ValueError):
        BinaryTree(LEAF, None)


def test_depth_vectors_of_combs():
    left = comb_tree(3)
    assert depth_vectors(left) == ((3, 2, 1, 0), (0, 1, 1, 1))
    right = parse_tree("(· (· (· ·)))")
    assert depth_vectors(right) == ((1, 1, 1, 0), (0, 1, 2, 3))
    hat = comb_tree(2, hatted=True)
    # leaf ∧ comb_2
    assert left_depths(hat) == (1, 2, 1, 0)


@given(trees)
def test_string_roundtrip(t):
    assert parse_tree(to_string(t)) == t


@pytest.mark.parametrize("text", ["", "(", "(· ·", "(· · ·)", "·)", "x", "(··) ", "((· ·)"])
def test_parse_rejects(text):
    if text.strip() == "(··)":
        assert parse_tree(text) == BinaryTree(LEAF, LEAF)
        return
    with pytest.raises(ValueError):
        parse_tree(text)


@given(trees)
def test_depth_vector_invariants(t):
    ld, rd = depth_vectors(t)
    assert len(ld) == len(rd) == t.n_leaves
    assert ld[-1] == 0 and rd[0] == 0
    assert all(a >= 1 for a in ld[:-1])
    assert all(b >= 1 for b in rd[1:])
    assert from_left_depths(ld) == t
    assert depth_vectors(mirror(t)) == (tuple(reversed(rd)), tuple(reversed(ld)))


@pytest.mark.parametrize("n", range(0, 8))
def test_left_depths_are_injective(n):
    assert len({left_depths(t) for t in enumerate_trees(n)}) == catalan(n)
    assert len({right_depths(t) for t in enumerate_trees(n)}) == catalan(n)


@given(trees)
def test_plane_bijection(t):
    T = to_plane_tree(t)
    assert T.n_nodes == t.n_leaves
    assert to_binary_tree(T) == t
    degrees = T.multidegree
    ld = left_depths(t)
    running = 0
    for i, deg in enumerate(degrees):
        running += deg
        assert ld[i] == running - i
    assert PlaneTree.from_multidegree(degrees) == T
    word = plane_to_dyck(T)
    assert is_dyck(word) and len(word) == 2 * t.size
    assert dyck_to_plane(word) == T


@pytest.mark.parametrize("nodes", range(1, 9))
def test_plane_enumeration_and_dyck_bijection(nodes):
    planes = list(enumerate_plane_trees(nodes))
    assert len(planes) == catalan(nodes - 1)
    words = {plane_to_dyck(T) for T in planes}
    assert words == set(brute_dyck(nodes - 1))


@pytest.mark.parametrize("word", ["UDD", "DU", "UUD", "UXD"])
def test_dyck_to_plane_rejects(word):
    with pytest.raises(ValueError):
        dyck_to_plane(word)


def test_multidegree_validation():
    with pytest.raises(ValueError):
        PlaneTree.from_multidegree([2, 0])
    with pytest.raises(ValueError):
        PlaneTree.from_multidegree([0, 1])


def test_internal_nodes_preorder():
    t = parse_tree("((· ·) (· ·))")
    nodes = list(internal_nodes(t))
    assert [i for i, *_ in nodes] == [0, 1, 2]
    assert [(ld, rd) for *_, ld, rd in nodes] == [(0, 0), (1, 0), (0, 1)]


def test_containment_uses_top_fragment():
    comb2 = comb_tree(2)
    t = left_fold([LEAF, parse_tree("(· ·)"), LEAF])
    assert contains_at_left_depth(t, comb2, 0)
    assert not contains_at_left_depth(t, comb2, 1)
    assert not contains_at_left_depth(parse_tree("(· (· ·))"), comb_tree(2), 0)


def _spine(t):
    length = 0
    while not t.is_leaf:
        length += 1
        t = t.left
    return length, t


@given(trees, st.integers(1, 3), st.data())
def test_rotation_lowers_t0_by_k(t, k, data):
    nodes = list(internal_nodes(t))
    if not nodes:
        return
    index, sub, _, _ = data.draw(st.sampled_from(nodes))
    if _spine(sub)[0] < k + 1:
        with pytest.raises(FactorizationError):
            rotate_k(t, index, k)
        return
    t0 = sub
    for _ in range(k + 1):
        t0 = t0.left
    u = rotate_k(t, index, k, "right")
    assert u.size == t.size
    assert rotate_k(u, index, k, "left") == t
    diffs = [a - b for a, b in zip(left_depths(t), left_depths(u))]
    shifted = [i for i, v in enumerate(diffs) if v]
    # exactly the leaves of t_0, a contiguous block, drop by k
    assert all(diffs[i] == k for i in shifted)
    assert len(shifted) == t0.n_leaves
    assert shifted == list(range(shifted[0], shifted[0] + len(shifted)))


@given(trees, st.data())
def test_border_operations(t, data):
    h = left_depths(t)[0] + 1
    i = data.draw(st.integers(1, h))
    u = insert_border(t, i)
    assert left_depths(u) == (i,) + left_depths(t)
    assert contract_first(u) == t
    with pytest.raises(ValueError):
        insert_border(t, h + 1)


def test_contract_first_leaf():
    with pytest.raises(ValueError):
        contract_first(LEAF)


def test_worked_example_with_nine_leaves():
    ld = (5, 4, 3, 3, 3, 2, 2, 1, 0)
    t = from_left_depths(ld)
    assert t.n_leaves == 9 and left_depths(t) == ld
    assert left_depths(insert_border(t, 3)) == (3,) + ld


@pytest.mark.parametrize("n", range(1, 7))
def test_contract_then_insert_recovers(n):
    for t in enumerate_trees(n):
        assert insert_border(contract_first(t), left_depths(t)[0]) == t
        assert left_depths(contract_first(t)) == left_depths(t)[1:]


def test_plane_examples():
    assert to_plane_tree(LEAF) == PlaneTree()
    assert plane_to_dyck(PlaneTree()) == ""
    assert plane_to_dyck(PlaneTree.from_multidegree([2, 0, 0])) == "UUDD"
    for n in (2, 3):
        T = to_plane_tree(comb_tree(n))
        assert T.depth == 1 and T.multidegree[0] == n


def test_small_rotations_and_containment():
    assert rotate_k(comb_tree(2), 0, 1) == parse_tree("(· (· ·))")
    assert contains_at_left_depth(comb_tree(3), comb_tree(2), 1)
    assert contains_at_left_depth(parse_tree("(· ·)"), LEAF, 0)
    assert not any(contains_at_left_depth(parse_tree("(· (· (· ·)))"), comb_tree(2), d) for d in range(3))


@pytest.mark.parametrize("k", (1, 2))
def test_rotation_roundtrip_exhaustive(k):
    for t in enumerate_trees(4):
        for index, sub, _, _ in internal_nodes(t):
            if _spine(sub)[0] >= k + 1:
                assert rotate_k(rotate_k(t, index, k), index, k, "left") == t


@pytest.mark.parametrize("n", range(0, 10))
def test_bijections_exhaustive(n):
    for t in enumerate_trees(n):
        T = to_plane_tree(t)
        assert to_binary_tree(T) == t
        assert dyck_to_plane(plane_to_dyck(T)) == T
