"""Pure-Python integer kernels.

These mirror ``_kernels.pyx`` line for line and are used whenever the
compiled extension is unavailable (or ``LUROTH_PURE=1`` is set).
All matrices are lists of rows of Python ints.
"""

from itertools import permutations

# Lines of the Fano plane, 0-based, in the order of the symbolic expression
# |142||253||361||175||276||374||456|.
FANO_LINES = ((0, 3, 1), (1, 4, 2), (2, 5, 0), (0, 6, 4), (1, 6, 5), (2, 6, 3), (3, 4, 5))


def _perm_sign(p):
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


_S7 = None


def s7_table():
    """All 5040 permutations of range(7) with their signs (cached)."""
    global _S7
    if _S7 is None:
        _S7 = [(p, _perm_sign(p)) for p in permutations(range(7))]
    return _S7


def bareiss_det(rows):
    """Determinant of a square integer matrix by Bareiss elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
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
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def ff_gauss_jordan(rows, ncols):
    """Fraction-free Gauss-Jordan reduction.

    Returns ``(a, pivots, d, sign)``: the reduced integer matrix, pivot
    columns, the common value ``d`` of every pivot entry and the parity of
    the row swaps. Pivot rule: first nonzero entry at or below the current
    row, columns scanned left to right.
    """
    a = [list(r) for r in rows]
    m = len(a)
    prev = 1
    sign = 1
    pivots = []
    r = 0
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
        rr = a[r]
        piv = rr[c]
        for i in range(m):
            if i == r:
                continue
            ri = a[i]
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
    """Skew-symmetrized Fano product.

    ``table`` is a flat list of 343 ints with ``table[49*i + 7*j + k]`` the
    bracket of points i, j, k. Returns the sum over all permutations s of
    sgn(s) times the product of the seven line brackets (not divided by 168).
    """
    total = 0
    l0, l1, l2, l3, l4, l5, l6 = FANO_LINES
    for p, sg in s7_table():
        t = table[49 * p[l0[0]] + 7 * p[l0[1]] + p[l0[2]]]
        if not t:
            continue
        t *= table[49 * p[l1[0]] + 7 * p[l1[1]] + p[l1[2]]]
        if not t:
            continue
        t *= table[49 * p[l2[0]] + 7 * p[l2[1]] + p[l2[2]]]
        t *= table[49 * p[l3[0]] + 7 * p[l3[1]] + p[l3[2]]]
        t *= table[49 * p[l4[0]] + 7 * p[l4[1]] + p[l4[2]]]
        t *= table[49 * p[l5[0]] + 7 * p[l5[1]] + p[l5[2]]]
        t *= table[49 * p[l6[0]] + 7 * p[l6[1]] + p[l6[2]]]
        if sg > 0:
            total += t
        else:
            total -= t
    return total
