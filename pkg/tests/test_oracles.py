import pytest

from nonassoc import formulas as F
from nonassoc import oracles as O
from nonassoc._kernels import dyck_height_histogram
from nonassoc.equivalence import minimal_trees
from nonassoc.errors import ResourceLimitError


def test_dyck_examples():
    assert O.count_dyck_avoiding(3, 1, 1) == 1
    assert O.count_dyck_height_at_most(3, 2) == 4
    assert O.count_dyck_height_at_most(4, 0) == 0
    assert O.count_dyck_height_at_most(0, 0) == 1
    with pytest.raises(ValueError):
        O.count_dyck_avoiding(3, 0, 1)


@pytest.mark.parametrize("k", (1, 2, 3))
@pytest.mark.parametrize("d", (1, 2, 3))
def test_minimal_trees_plane_trees_dyck_agree(k, d):
    for n in range(0, 10):
        want = len(minimal_trees(n, d, k))
        assert O.count_plane_trees_constrained(n, d, k) == want
        assert O.count_dyck_avoiding(n, k, d) == want


def test_plane_tree_threshold_is_d_minus_one():
    # with the threshold read as d instead the counts drift from the minimal trees at n = 3
    def shifted(n, d, k):
        from nonassoc.trees import enumerate_plane_trees
        return sum(1 for T in enumerate_plane_trees(n + 1) if O._plane_ok(T.multidegree, d + 1, k))

    assert shifted(3, 1, 1) != len(minimal_trees(3, 1, 1))


def test_ideal_examples():
    ideals = list(O.enumerate_ideals(3))
    assert len(ideals) == 5
    assert sum(1 for I in ideals if O.ideal_order(I) <= 2) == 4
    assert O.count_ideals_by_order(4, 2) == 8
    assert O.count_ideals_by_order(4, 3) == 13
    zero = O.NilpotentIdeal(3, (0, 0, 0))
    assert O.ideal_order(zero) == 1 == O.bounce_parts(zero)
    full = O.NilpotentIdeal(4, (3, 2, 1, 0))
    assert O.ideal_order(full) == 4 == O.bounce_parts(full)


def test_ideal_structure():
    I = O.NilpotentIdeal(3, (2, 1, 0))
    assert I.boundary == (1, 2, 3)
    assert I.starred(1, 3) and I.starred(1, 2) and not I.starred(2, 2)
    assert I.dyck_word() == "UDUDUD"
    assert O.NilpotentIdeal(3, (0, 0, 0)).dyck_word() == "UUUDDD"
    for bad in ((3, 0, 0), (1, 2, 0), (0, 0)):
        with pytest.raises(ValueError):
            O.NilpotentIdeal(3, bad)
    with pytest.raises(ValueError):
        list(O.enumerate_ideals(0))
    with pytest.raises(ValueError):
        O.count_ideals_by_order(3, 0)


def test_dyck_words_are_balanced_and_distinct():
    for n in range(1, 8):
        words = [I.dyck_word() for I in O.enumerate_ideals(n)]
        assert len(set(words)) == len(words) == F.catalan(n)
        for w in words:
            h = 0
            for c in w:
                h += 1 if c == "U" else -1
                assert h >= 0
            assert h == 0


@pytest.mark.parametrize("n", range(1, 10))
def test_ideals_against_c_d(n):
    ideals = list(O.enumerate_ideals(n))
    assert len(ideals) == F.catalan(n)
    assert all(O.ideal_order(I) == O.bounce_parts(I) for I in ideals)
    assert O.bounce_histogram(n) == O.order_histogram(n) == list(dyck_height_histogram(n))
    assert O.count_ideals_by_order(n, 2) == 2 ** (n - 1)
    for d in range(1, 6):
        want = F.c_d1(n, d)
        assert O.count_ideals_by_order(n, d) == want
        assert O.count_dyck_height_at_most(n, d) == want


def test_perm_examples():
    assert O.count_avoiding_perms(4, 2) == 8
    assert O.count_avoiding_perms(3, 1) == 1
    assert O.count_avoiding_perms(0, 1) == 1
    for n in range(1, 8):
        assert O.count_avoiding_perms(n, n) == F.catalan(n)
    with pytest.raises(ResourceLimitError):
        O.count_avoiding_perms(O.PERM_CAP + 1, 2)
    with pytest.raises(ValueError):
        O.count_avoiding_perms(3, 0)


def test_perm_filter_by_hand():
    from itertools import combinations, permutations

    def lis(p):
        best = [1] * len(p)
        for j in range(len(p)):
            for i in range(j):
                if p[i] < p[j]:
                    best[j] = max(best[j], best[i] + 1)
        return max(best, default=0)

    def has132(p):
        return any(p[a] < p[c] < p[b] for a, b, c in combinations(range(len(p)), 3))

    for n in range(0, 7):
        for d in range(1, 5):
            brute = sum(1 for p in permutations(range(n)) if not has132(p) and lis(p) <= d)
            assert O.count_avoiding_perms(n, d) == brute


@pytest.mark.parametrize("n", range(1, 10))
def test_perms_against_c_d(n):
    for d in range(1, 6):
        assert O.count_avoiding_perms(n, d) == F.c_d1(n, d)


def test_weighted_path_calibration():
    # paths must return to the axis; ending anywhere breaks d = 0 and d = 2
    for d in range(1, 3):
        for n in range(0, 9):
            assert O.weighted_path_count(n, d) == F.c3dn(n, d)
    assert [O.weighted_path_count(n, 0) for n in range(8)] == [F.motzkin(n) for n in range(8)]
    assert [O.weighted_path_count(n, 0, endpoint="any") for n in range(8)] != [F.motzkin(n) for n in range(8)]
    assert [O.weighted_path_count(n, 2, endpoint="any") for n in range(9)] != [F.c3dn(n, 2) for n in range(9)]


def test_weighted_paths():
    for d in range(1, 4):
        for n in range(0, 11):
            assert O.weighted_path_count(n, d) == F.c3dn(n, d)
    for n in range(0, 8):
        assert O.weighted_path_count(n, n) == F.catalan(n)
        assert O.weighted_path_count(n, n + 2) == F.catalan(n)
    with pytest.raises(ValueError):
        O.weighted_path_count(-1, 0)
    with pytest.raises(ValueError):
        O.weighted_path_count(3, 1, endpoint="top")


def test_oracles_are_deterministic():
    assert O.count_dyck_avoiding(7, 2, 2) == O.count_dyck_avoiding(7, 2, 2)
    assert O.order_histogram(6) == O.order_histogram(6)
