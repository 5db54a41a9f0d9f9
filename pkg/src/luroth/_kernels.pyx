# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels; same contracts as ``_kernels_py``.

Entries stay Python ints (arbitrary precision); the gain comes from typed
loop indices and direct list access.
"""

from luroth._kernels_py import FANO_LINES, s7_table

cdef int _FANO[7][3]
cdef int _i, _j
for _i in range(7):
    for _j in range(3):
        _FANO[_i][_j] = FANO_LINES[_i][_j]

cdef int _PERMS[5040][7]
cdef int _SIGNS[5040]
_table = s7_table()
for _i in range(5040):
    _SIGNS[_i] = _table[_i][1]
    for _j in range(7):
        _PERMS[_i][_j] = _table[_i][0][_j]
del _table


def bareiss_det(rows):
    cdef list a = [list(row) for row in rows]
    cdef Py_ssize_t n = len(a)
    cdef Py_ssize_t i, j, k
    cdef int sign = 1
    cdef list rk, ri
    if n == 0:
        return 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        rk = <list>a[k]
        akk = rk[k]
        for i in range(k + 1, n):
            ri = <list>a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def ff_gauss_jordan(rows, Py_ssize_t ncols):
    cdef list a = [list(row) for row in rows]
    cdef Py_ssize_t m = len(a)
    cdef Py_ssize_t r = 0, c, p, i, j
    cdef int sign = 1
    cdef list pivots = []
    cdef list rr, ri
    prev = 1
    for c in range(ncols):
        if r == m:
            break
        p = r
        while p < m and a[p][c] == 0:
            p += 1
        if p == m:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
            sign = -sign
        rr = <list>a[r]
        piv = rr[c]
        for i in range(m):
            if i == r:
                continue
            ri = <list>a[i]
            aic = ri[c]
            if aic == 0:
                if piv != prev:
                    for j in range(ncols):
                        if ri[j]:
                            ri[j] = (piv * ri[j]) // prev
            else:
                for j in range(ncols):
                    ri[j] = (piv * ri[j] - aic * rr[j]) // prev
        prev = piv
        pivots.append(c)
        r += 1
    return a, pivots, prev, sign


def fano_sum(table):
    cdef list tab = list(table)
    cdef Py_ssize_t s, l
    cdef int *p
    total = 0
    for s in range(5040):
        p = _PERMS[s]
        t = tab[49 * p[_FANO[0][0]] + 7 * p[_FANO[0][1]] + p[_FANO[0][2]]]
        if not t:
            continue
        for l in range(1, 7):
            t = t * tab[49 * p[_FANO[l][0]] + 7 * p[_FANO[l][1]] + p[_FANO[l][2]]]
            if not t:
                break
        if not t:
            continue
        if _SIGNS[s] > 0:
            total += t
        else:
            total -= t
    return total
