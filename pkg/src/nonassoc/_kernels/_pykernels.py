"""Pure-Python implementations of the hot kernels.

Same signatures and results as the compiled ``_ckernels`` module; used when
the extension is unavailable or ``NONASSOC_PURE_PYTHON`` is set.
"""
from itertools import permutations

import numpy as np

DEPTH_DTYPE = np.int16


def depth_tables(n):
    """Left and right depth vectors of every tree in T_n, rows in canonical order."""
    lds = [[(0,)]]
    rds = [[(0,)]]
    for m in range(1, n + 1):
        cur_l, cur_r = [], []
        for i in range(m):
            left_l, left_r = lds[i], rds[i]
            right_l, right_r = lds[m - 1 - i], rds[m - 1 - i]
            for a_l, a_r in zip(left_l, left_r):
                shifted_l = tuple(v + 1 for v in a_l)
                for b_l, b_r in zip(right_l, right_r):
                    cur_l.append(shifted_l + b_l)
                    cur_r.append(a_r + tuple(v + 1 for v in b_r))
        lds.append(cur_l)
        rds.append(cur_r)
    return np.array(lds[n], dtype=DEPTH_DTYPE), np.array(rds[n], dtype=DEPTH_DTYPE)


def reduce_table(table, d, k):
    """Entrywise ``a if a < d else d + (a - d) % k``."""
    rows = table.tolist()
    out = [[a if a < d else d + (a - d) % k for a in row] for row in rows]
    return np.array(out, dtype=DEPTH_DTYPE).reshape(table.shape)


def pairwise_equivalent(table, d, k):
    """Boolean matrix of ``b ~_k^d c`` for all row pairs, straight from the two clauses."""
    rows = table.tolist()
    size = len(rows)
    out = np.zeros((size, size), dtype=bool)
    for i, b in enumerate(rows):
        for j in range(i, size):
            c = rows[j]
            ok = True
            for bi, ci in zip(b, c):
                if (bi - ci) % k or (min(bi, ci) < d and bi != ci):
                    ok = False
                    break
            if ok:
                out[i, j] = out[j, i] = True
    return out


def _contains_132(perm):
    third = -1
    stack = []
    for v in reversed(perm):
        if v < third:
            return True
        while stack and stack[-1] < v:
            third = stack.pop()
        stack.append(v)
    return False


def _lis(perm):
    best = []
    for i, v in enumerate(perm):
        best.append(1 + max((best[j] for j in range(i) if perm[j] < v), default=0))
    return max(best, default=0)


def lis_histogram_132(n):
    """hist[L] = number of 132-avoiding permutations of n whose longest increasing run is L."""
    hist = [0] * (n + 1)
    for perm in permutations(range(1, n + 1)):
        if not _contains_132(perm):
            hist[_lis(perm)] += 1
    return hist


def _dyck_words(n):
    word = []

    def go(ups, downs):
        if ups == n and downs == n:
            yield word
            return
        if ups < n:
            word.append(1)
            yield from go(ups + 1, downs)
            word.pop()
        if downs < ups:
            word.append(-1)
            yield from go(ups, downs + 1)
            word.pop()

    yield from go(0, 0)


def dyck_height_histogram(n):
    """hist[h] = number of Dyck paths of semilength n with maximum height h."""
    hist = [0] * (n + 1)
    for word in _dyck_words(n):
        height = top = 0
        for step in word:
            height += step
            top = max(top, height)
        hist[top] += 1
    return hist


def dyck_avoiding_count(n, k, dmin):
    """Dyck paths with no factor D U^k whose initial point has height >= dmin."""
    total = 0
    for word in _dyck_words(n):
        heights = [0]
        for step in word:
            heights.append(heights[-1] + step)
        bad = False
        for p, step in enumerate(word):
            if step == -1 and heights[p] >= dmin and p + k < len(word) and all(
                word[q] == 1 for q in range(p + 1, p + k + 1)
            ):
                bad = True
                break
        if not bad:
            total += 1
    return total
