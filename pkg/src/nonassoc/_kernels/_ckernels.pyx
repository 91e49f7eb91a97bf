# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot kernels (see ``_pykernels`` for the reference)."""
import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

cnp.import_array()

DEPTH_DTYPE = np.int16
ctypedef cnp.int16_t depth_t


def depth_tables(int n):
    cdef list lds = [np.zeros((1, 1), dtype=DEPTH_DTYPE)]
    cdef list rds = [np.zeros((1, 1), dtype=DEPTH_DTYPE)]
    cdef int m, i, a, b, c, width_l, width_r
    cdef Py_ssize_t row, count
    cdef depth_t[:, :] L_l, L_r, R_l, R_r, out_l, out_r
    for m in range(1, n + 1):
        count = 0
        for i in range(m):
            count += lds[i].shape[0] * lds[m - 1 - i].shape[0]
        cur_l = np.empty((count, m + 1), dtype=DEPTH_DTYPE)
        cur_r = np.empty((count, m + 1), dtype=DEPTH_DTYPE)
        out_l = cur_l
        out_r = cur_r
        row = 0
        for i in range(m):
            L_l = lds[i]
            L_r = rds[i]
            R_l = lds[m - 1 - i]
            R_r = rds[m - 1 - i]
            width_l = i + 1
            width_r = m - i
            for a in range(L_l.shape[0]):
                for b in range(R_l.shape[0]):
                    for c in range(width_l):
                        out_l[row, c] = L_l[a, c] + 1
                        out_r[row, c] = L_r[a, c]
                    for c in range(width_r):
                        out_l[row, width_l + c] = R_l[b, c]
                        out_r[row, width_l + c] = R_r[b, c] + 1
                    row += 1
        lds.append(cur_l)
        rds.append(cur_r)
    return lds[n], rds[n]


def reduce_table(table, int d, int k):
    cdef depth_t[:, :] src = np.ascontiguousarray(table, dtype=DEPTH_DTYPE)
    out = np.empty_like(np.asarray(src))
    cdef depth_t[:, :] dst = out
    cdef Py_ssize_t i, j
    cdef int a
    for i in range(src.shape[0]):
        for j in range(src.shape[1]):
            a = src[i, j]
            dst[i, j] = a if a < d else d + (a - d) % k
    return out


def pairwise_equivalent(table, int d, int k):
    cdef depth_t[:, :] src = np.ascontiguousarray(table, dtype=DEPTH_DTYPE)
    cdef Py_ssize_t size = src.shape[0], width = src.shape[1]
    out = np.zeros((size, size), dtype=bool)
    cdef cnp.npy_bool[:, :] dst = out
    cdef Py_ssize_t i, j, c
    cdef int bi, ci, diff
    cdef bint ok
    for i in range(size):
        for j in range(i, size):
            ok = True
            for c in range(width):
                bi = src[i, c]
                ci = src[j, c]
                diff = bi - ci
                if diff % k != 0:
                    ok = False
                    break
                if (bi < d or ci < d) and diff != 0:
                    ok = False
                    break
            if ok:
                dst[i, j] = True
                dst[j, i] = True
    return out


cdef bint _contains_132(int* perm, int n, int* stack):
    cdef int top = 0, third = -1, i, v
    for i in range(n - 1, -1, -1):
        v = perm[i]
        if v < third:
            return True
        while top > 0 and stack[top - 1] < v:
            top -= 1
            third = stack[top]
        stack[top] = v
        top += 1
    return False


cdef int _lis(int* perm, int n, int* best):
    cdef int i, j, out = 0
    for i in range(n):
        best[i] = 1
        for j in range(i):
            if perm[j] < perm[i] and best[j] + 1 > best[i]:
                best[i] = best[j] + 1
        if best[i] > out:
            out = best[i]
    return out


cdef bint _next_permutation(int* a, int n):
    cdef int i = n - 2, j, tmp
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = n - 1
    while a[j] <= a[i]:
        j -= 1
    tmp = a[i]; a[i] = a[j]; a[j] = tmp
    i += 1
    j = n - 1
    while i < j:
        tmp = a[i]; a[i] = a[j]; a[j] = tmp
        i += 1
        j -= 1
    return True


def lis_histogram_132(int n):
    hist = [0] * (n + 1)
    if n == 0:
        hist[0] = 1
        return hist
    cdef int* perm = <int*> malloc(n * sizeof(int))
    cdef int* scratch = <int*> malloc(n * sizeof(int))
    cdef long long* counts = <long long*> malloc((n + 1) * sizeof(long long))
    cdef int i
    try:
        for i in range(n):
            perm[i] = i + 1
        for i in range(n + 1):
            counts[i] = 0
        while True:
            if not _contains_132(perm, n, scratch):
                counts[_lis(perm, n, scratch)] += 1
            if not _next_permutation(perm, n):
                break
        for i in range(n + 1):
            hist[i] = counts[i]
    finally:
        free(perm)
        free(scratch)
        free(counts)
    return hist


cdef void _walk(int* word, int pos, int ups, int downs, int n,
                long long* hist, int k, int dmin, long long* avoid):
    cdef int height, top, p, q, step
    cdef bint bad
    if ups == n and downs == n:
        height = 0
        top = 0
        bad = False
        for p in range(2 * n):
            step = word[p]
            if step == -1 and not bad and height >= dmin and p + k < 2 * n:
                bad = True
                for q in range(p + 1, p + k + 1):
                    if word[q] != 1:
                        bad = False
                        break
            height += step
            if height > top:
                top = height
        hist[top] += 1
        if not bad:
            avoid[0] += 1
        return
    if ups < n:
        word[pos] = 1
        _walk(word, pos + 1, ups + 1, downs, n, hist, k, dmin, avoid)
    if downs < ups:
        word[pos] = -1
        _walk(word, pos + 1, ups, downs + 1, n, hist, k, dmin, avoid)


cdef tuple _dyck_scan(int n, int k, int dmin):
    cdef int* word = <int*> malloc((2 * n + 1) * sizeof(int))
    cdef long long* hist = <long long*> malloc((n + 1) * sizeof(long long))
    cdef long long avoid = 0
    cdef int i
    try:
        for i in range(n + 1):
            hist[i] = 0
        _walk(word, 0, 0, 0, n, hist, k, dmin, &avoid)
        return [hist[i] for i in range(n + 1)], avoid
    finally:
        free(word)
        free(hist)


def dyck_height_histogram(int n):
    return _dyck_scan(n, 1, 0)[0]


def dyck_avoiding_count(int n, int k, int dmin):
    return _dyck_scan(n, k, dmin)[1]
