import json
from itertools import product

import pytest

from nonassoc import series as S
from nonassoc.equivalence import (
    Params,
    WeightedTree,
    check_conjecture,
    class_key,
    class_sizes,
    count_classes,
    depth_of_nonassoc,
    enumerate_weighted,
    expand_fiber,
    fiber_size,
    max_class_size,
    maximal_trees,
    minimal_trees,
    pairwise_partition,
    partition,
    phi,
    reduce_depth,
    rotation_components,
)
from nonassoc.formulas import catalan
from nonassoc.trees import LEAF, comb_tree, enumerate_trees, mirror, parse_tree

GRID3 = [Params(d, e, k, l) for d, e, k, l in product((1, 2, 3), repeat=4)]


def related(a, b, d, k):
    return (a - b) % k == 0 and (min(a, b) >= d or a == b)


def test_reduce_depth_examples():
    assert reduce_depth(7, 2, 3) == 4
    assert all(reduce_depth(0, d, k) == 0 for d in range(1, 6) for k in range(1, 6))


@pytest.mark.parametrize("d,k", [(d, k) for d in range(1, 6) for k in range(1, 6)])
def test_reduce_depth_matches_pairwise_relation(d, k):
    for a in range(31):
        for b in range(31):
            assert (reduce_depth(a, d, k) == reduce_depth(b, d, k)) == related(a, b, d, k)


def test_class_key_examples():
    comb = comb_tree(3)
    key = class_key(comb, Params(1, 1, 2, 1))
    assert tuple(a for a, _ in key) == (1, 2, 1, 0)
    n3 = enumerate_trees(3)
    assert len({class_key(t, Params()) for t in n3}) == 1
    a = parse_tree("(((· ·) ·) ·)")
    b = parse_tree("((· (· ·)) ·)")
    assert class_key(a, Params(2, 1, 1, 1)) == class_key(b, Params(2, 1, 1, 1))
    assert count_classes(3, Params(2, 1, 1, 1)) == 4


@pytest.mark.parametrize("n", range(0, 10))
def test_usual_associativity(n):
    part = partition(n, Params())
    assert part.class_count == 1
    assert part.max_size == catalan(n)
    assert part.max_multiplicity == 1


def test_partition_examples():
    assert count_classes(5, Params(2, 1, 1, 1)) == 16
    # k = 2 side is read off the series, not hard-coded
    assert count_classes(4, Params(1, 1, 2, 1)) == int(S.gf_Ckd(2, 1)[5])
    assert max_class_size(4, Params(2, 2, 1, 1)) == (2, 2)
    assert max_class_size(6, Params()) == (catalan(6), 1)


@pytest.mark.parametrize("n", range(0, 7))
@pytest.mark.parametrize("p", GRID3, ids=str)
def test_partition_structure(n, p):
    part = partition(n, p)
    members = [i for c in part.classes for i in c]
    assert sorted(members) == list(range(catalan(n)))
    assert [c[0] for c in part.classes] == sorted(c[0] for c in part.classes)
    assert all(c == sorted(c) for c in part.classes)
    assert 2 <= part.class_count + part.max_size <= catalan(n) + 1
    assert part.max_size == max_class_size(n, p)[0]


@pytest.mark.parametrize("n", range(0, 8))
@pytest.mark.parametrize("p", GRID3, ids=str)
def test_keys_agree_with_pairwise_definition(n, p):
    assert partition(n, p).as_sets() == set(pairwise_partition(n, p))


@pytest.mark.parametrize("n", range(0, 9))
@pytest.mark.parametrize("p", [Params(1, 2, 1, 3), Params(2, 3, 2, 1), Params(3, 1, 2, 2), Params(2, 2, 3, 1)], ids=str)
def test_symmetry_and_mirror(n, p):
    assert count_classes(n, p) == count_classes(n, p.mirrored())
    for t in enumerate_trees(min(n, 5)):
        key, mkey = class_key(t, p), class_key(mirror(t), p.mirrored())
        assert mkey == tuple((b, a) for a, b in reversed(key))


def _divides(a, b):
    return b % a == 0


@pytest.mark.parametrize("n", range(0, 8))
def test_monotonicity(n):
    grid = [Params(d, e, k, l) for d, e in product((1, 2, 3), repeat=2) for k, l in product((1, 2, 4), repeat=2)]
    values = {p: (count_classes(n, p), max_class_size(n, p)[0]) for p in grid}
    for p, q in product(grid, repeat=2):
        if p.d <= q.d and p.e <= q.e and _divides(p.k, q.k) and _divides(p.l, q.l):
            assert values[p][0] <= values[q][0]
            assert values[p][1] >= values[q][1]


def _catalan_products(total, parts_max=12):
    # sizes expressible as prod C_{a_i} with sum (a_i + 1) = total
    out = set()

    def go(rem, acc):
        if rem == 0:
            out.add(acc)
            return
        for a in range(0, rem):
            go(rem - a - 1, acc * catalan(a))

    go(total, 1)
    return out


@pytest.mark.parametrize("n", range(0, 10))
def test_class_sizes_are_catalan_products(n):
    allowed = _catalan_products(n + 1)
    for d, e in product((1, 2, 3), repeat=2):
        sizes = class_sizes(n, Params(d, e, 1, 1))
        assert set(int(s) for s in sizes) <= allowed


# -- contraction ---------------------------------------------------------------

def test_phi_extremes():
    for t in enumerate_trees(4):
        wt = phi(t, 1, 1)
        assert wt.shape == LEAF and wt.weights == (5,)
        big = phi(t, 9, 9)
        assert big.shape == t and set(big.weights) == {1}
    with pytest.raises(ValueError):
        phi(LEAF, 0, 1)


def test_weighted_tree_validation_and_str():
    with pytest.raises(ValueError):
        WeightedTree(LEAF, (1, 2))
    with pytest.raises(ValueError):
        WeightedTree(LEAF, (0,))
    wt = WeightedTree(parse_tree("(· ·)"), (1, 3))
    assert str(wt) == "(· 3)" and wt.total_weight == 4
    assert fiber_size(WeightedTree(parse_tree("(· ·)"), (1, 1))) == 1


def _is_valid_weighted(wt, d, e):
    # every contractible leaf carries the weight, every other leaf weight 1,
    # and no internal node is contractible
    weights = iter(wt.weights)

    def go(node, ld, rd):
        contractible = ld >= d - 1 and rd >= e - 1
        if node.is_leaf:
            w = next(weights)
            return contractible or w == 1
        if contractible:
            return False
        return go(node.left, ld + 1, rd) and go(node.right, ld, rd + 1)

    return go(wt.shape, 0, 0)


@pytest.mark.parametrize("n", range(0, 10))
@pytest.mark.parametrize("d,e", list(product((1, 2, 3), repeat=2)))
def test_weighted_enumeration(n, d, e):
    ws = enumerate_weighted(n, d, e)
    assert len(set(ws)) == len(ws)
    assert all(w.total_weight == n + 1 for w in ws)
    assert all(_is_valid_weighted(w, d, e) for w in ws)
    assert sum(fiber_size(w) for w in ws) == catalan(n)
    assert len(ws) == count_classes(n, Params(d, e, 1, 1))


@pytest.mark.parametrize("n", range(0, 9))
def test_phi_fibers_are_classes(n):
    trees = enumerate_trees(n)
    for d, e in [(2, 2), (2, 3), (3, 1)]:
        groups = {}
        for i, t in enumerate(trees):
            groups.setdefault(phi(t, d, e), set()).add(i)
        assert set(map(frozenset, groups.values())) == partition(n, Params(d, e, 1, 1)).as_sets()
        assert set(groups) == set(enumerate_weighted(n, d, e))
        for wt, members in groups.items():
            assert len(members) == fiber_size(wt)


def test_expand_fiber_inverts_phi():
    for wt in enumerate_weighted(5, 2, 2):
        fiber = expand_fiber(wt)
        assert len(fiber) == fiber_size(wt)
        assert all(phi(t, 2, 2) == wt for t in fiber)


# -- minimal and maximal trees -------------------------------------------------------

def test_minimal_trees_d1_k1_is_left_comb():
    for n in range(0, 8):
        (only,) = minimal_trees(n, 1, 1)
        assert only == (comb_tree(n) if n else LEAF)


@pytest.mark.parametrize("n", range(0, 10))
def test_minimal_counts(n):
    for d in (1, 2, 3):
        for k in (1, 2, 3):
            assert len(minimal_trees(n, d, k)) == count_classes(n, Params(d, 1, k, 1))


@pytest.mark.parametrize("n", range(0, 10))
def test_maximal_counts_and_interlacing(n):
    for d in (1, 2, 3):
        assert len(maximal_trees(n, d, 1)) == len(minimal_trees(n, d, 1))
        for k in (2, 3):
            c = len(minimal_trees(n, d, k))
            assert len(maximal_trees(n, d + 1, k - 1)) == c
            assert len(maximal_trees(n, d, k - 1)) <= c <= len(maximal_trees(n, d, k))
    for k in (1, 2, 3):
        assert len(maximal_trees(n, 1, k)) == int(S.gf_M(k)[n + 1])


@pytest.mark.parametrize("k", (1, 2, 3))
def test_stabilization(k):
    for n in range(0, 8):
        assert count_classes(n, Params(n + 1, 1, k, 1)) == catalan(n)
        assert count_classes(n, Params(max(n, 1), 1, k, 1)) == catalan(n)


@pytest.mark.parametrize("n", range(0, 9))
@pytest.mark.parametrize("d,k", list(product((1, 2, 3), repeat=2)))
def test_rotation_components_are_classes(n, d, k):
    comps = rotation_components(n, d, k)
    assert comps.as_sets() == partition(n, Params(d, 1, k, 1)).as_sets()
    trees = enumerate_trees(n)
    minimal = {trees.index(t) for t in minimal_trees(n, d, k)}
    for c in comps.classes:
        assert len(minimal.intersection(c)) == 1


def test_rotation_single_component():
    for n in range(0, 8):
        assert rotation_components(n, 1, 1).class_count == 1


def test_depth_of_nonassoc():
    # two factors never differ, so the first merge is at three factors
    assert depth_of_nonassoc(Params(), 8) == 3
    assert depth_of_nonassoc(Params(10, 10, 1, 1), 8) is None
    assert depth_of_nonassoc(Params(1, 1, 2, 1), 8) == 4
    assert depth_of_nonassoc(Params(2, 1, 1, 1), 8) == 4
    assert depth_of_nonassoc(Params(1, 1, 3, 1), 8) == 5


def test_conjecture_report_shape():
    report = check_conjecture(1, 1, 6)
    assert report["holds"] and report["first_failure"] is None
    assert all(r["lhs"] == r["rhs"] == 1 for r in report["rows"])
    report = check_conjecture(2, 1, 7)
    assert report["holds"]
    json.dumps(report)


def test_params_validation():
    with pytest.raises(ValueError):
        Params(0, 1, 1, 1)
    with pytest.raises(ValueError):
        Params(1, 1, 1, -2)


def test_partition_json():
    part = partition(3, Params(2, 1, 1, 1))
    out = part.to_json()
    assert out == {"params": {"d": 2, "e": 1, "k": 1, "l": 1}, "n": 3, "class_count": 4,
                   "max_size": 2, "max_multiplicity": 1}
    verbose = json.loads(json.dumps(part.to_json(verbose=True)))
    assert sorted(len(c) for c in verbose["classes"]) == [1, 1, 1, 2]
    assert ["((· (· ·)) ·)", "(((· ·) ·) ·)"] in verbose["classes"]
