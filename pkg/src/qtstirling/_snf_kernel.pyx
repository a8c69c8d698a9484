# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Dense int64 Smith-normal-form diagonalization.

Raises OverflowError when an intermediate would leave the safe int64 range;
callers fall back to the arbitrary-precision implementation.
"""

from cpython cimport array
import array
from libc.stdlib cimport llabs

cdef long long LIMIT = 1LL << 62


cdef inline long long _sub_mul(long long x, long long f, long long y) except? -1:
    # x - f * y with overflow guard
    cdef long long af = llabs(f), ay = llabs(y)
    if af != 0 and ay != 0 and af > LIMIT // ay:
        raise OverflowError("int64 overflow in SNF elimination")
    cdef long long p = f * y
    if llabs(x) > LIMIT - llabs(p):
        raise OverflowError("int64 overflow in SNF elimination")
    return x - p


cdef inline void _store(long long[::1] a, long long[::1] rc, long long[::1] cc,
                        Py_ssize_t ncols, Py_ssize_t i, Py_ssize_t j, long long v):
    cdef long long old = a[i * ncols + j]
    if old == 0 and v != 0:
        rc[i] += 1
        cc[j] += 1
    elif old != 0 and v == 0:
        rc[i] -= 1
        cc[j] -= 1
    a[i * ncols + j] = v


def diagonalize_dense(long long[::1] a, Py_ssize_t nrows, Py_ssize_t ncols):
    """Diagonalize the row-major ``nrows x ncols`` matrix in ``a`` in place.

    Returns the nonzero diagonal entries in elimination order.
    """
    cdef Py_ssize_t s, i, j, pi, pj, n = min(nrows, ncols)
    cdef long long v, best, f, tmp, cost, best_cost
    cdef bint dirty
    cdef long long[::1] rc = array.array("q", bytes(8 * max(nrows, 1)))
    cdef long long[::1] cc = array.array("q", bytes(8 * max(ncols, 1)))
    for i in range(nrows):
        for j in range(ncols):
            if a[i * ncols + j] != 0:
                rc[i] += 1
                cc[j] += 1
    diag = []
    for s in range(n):
        # pivot: a unit in a singleton column if there is one, else the
        # smallest magnitude with ties broken by Markowitz cost
        pi = -1
        pj = -1
        best = 0
        best_cost = 0
        for j in range(s, ncols):
            if cc[j] == 1:
                for i in range(s, nrows):
                    if a[i * ncols + j] != 0:
                        break
                if llabs(a[i * ncols + j]) == 1:
                    pi = i
                    pj = j
                    break
        if pi < 0:
            for i in range(s, nrows):
                if rc[i] == 0:
                    continue
                for j in range(s, ncols):
                    v = llabs(a[i * ncols + j])
                    if v == 0:
                        continue
                    cost = (rc[i] - 1) * (cc[j] - 1)
                    if best == 0 or v < best or (v == best and cost < best_cost):
                        best = v
                        best_cost = cost
                        pi = i
                        pj = j
                        if best == 1 and cost == 0:
                            break
                if best == 1 and best_cost == 0:
                    break
        if pi < 0:
            break
        while True:
            if pi != s:
                for j in range(ncols):
                    tmp = a[s * ncols + j]
                    a[s * ncols + j] = a[pi * ncols + j]
                    a[pi * ncols + j] = tmp
                tmp = rc[s]
                rc[s] = rc[pi]
                rc[pi] = tmp
            if pj != s:
                for i in range(nrows):
                    tmp = a[i * ncols + s]
                    a[i * ncols + s] = a[i * ncols + pj]
                    a[i * ncols + pj] = tmp
                tmp = cc[s]
                cc[s] = cc[pj]
                cc[pj] = tmp
            v = a[s * ncols + s]
            dirty = False
            if cc[s] > 1:
                for i in range(s + 1, nrows):
                    if a[i * ncols + s] != 0:
                        f = a[i * ncols + s] // v
                        if f != 0:
                            for j in range(s, ncols):
                                if a[s * ncols + j] != 0:
                                    _store(a, rc, cc, ncols, i, j,
                                           _sub_mul(a[i * ncols + j], f, a[s * ncols + j]))
                        if a[i * ncols + s] != 0:
                            dirty = True
            if rc[s] > 1:
                for j in range(s + 1, ncols):
                    if a[s * ncols + j] != 0:
                        f = a[s * ncols + j] // v
                        if f != 0:
                            for i in range(s, nrows):
                                if a[i * ncols + s] != 0:
                                    _store(a, rc, cc, ncols, i, j,
                                           _sub_mul(a[i * ncols + j], f, a[i * ncols + s]))
                        if a[s * ncols + j] != 0:
                            dirty = True
            if not dirty:
                break
            # a remainder smaller than |v| survived in row or column s
            best = 0
            pi = s
            pj = s
            for i in range(s + 1, nrows):
                tmp = llabs(a[i * ncols + s])
                if tmp != 0 and (best == 0 or tmp < best):
                    best = tmp
                    pi = i
                    pj = s
            for j in range(s + 1, ncols):
                tmp = llabs(a[s * ncols + j])
                if tmp != 0 and (best == 0 or tmp < best):
                    best = tmp
                    pi = s
                    pj = j
        diag.append(a[s * ncols + s])
    return diag
