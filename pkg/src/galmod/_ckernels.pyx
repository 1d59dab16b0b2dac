# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled cyclotomic kernels.

Same contract as ``galmod._pykernels``.  When every intermediate value provably
fits in a signed 64-bit integer the work is done on C arrays; otherwise we fall
back to Python integers, so results are always exact.
"""

from libc.stdlib cimport malloc, free

BACKEND = "cython"

cdef long long LIMIT = 1LL << 62


cdef object _maxabs(object seq):
    cdef object m = 0
    for c in seq:
        if c < 0:
            c = -c
        if c > m:
            m = c
    return m


cdef object _table_max(object table):
    cdef object m = 0
    for row in table:
        r = _maxabs(row)
        if r > m:
            m = r
    return m


# the reduction table of a level never changes, so cache its sup norm
_TMAX = {}


cdef object _tmax(object table):
    key = id(table)
    hit = _TMAX.get(key)
    if hit is None or hit[0] is not table:
        hit = (table, _table_max(table))
        _TMAX[key] = hit
    return hit[1]


def reduce_terms(list vec, list table, long N):
    cdef Py_ssize_t n = len(table[0]), m = len(vec), e, i
    cdef object bound = _maxabs(vec) * _tmax(table) * (m + 1)
    cdef long long *out
    cdef long long c
    cdef list row
    if bound < LIMIT:
        out = <long long *>malloc(n * sizeof(long long))
        try:
            for i in range(n):
                out[i] = 0
            for e in range(m):
                c = vec[e]
                if c:
                    row = table[e % N]
                    for i in range(n):
                        out[i] += c * <long long>row[i]
            return [out[i] for i in range(n)]
        finally:
            free(out)
    res = [0] * n
    for e in range(m):
        co = vec[e]
        if co:
            row = table[e % N]
            for i in range(n):
                r = row[i]
                if r:
                    res[i] += co * r
    return res


def mulmod(list a, list b, list table, long N):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    cdef object bound = _maxabs(a) * _maxabs(b) * (min(la, lb) + 1)
    cdef long long *prod
    cdef long long x
    cdef long long *bb
    if bound < LIMIT:
        prod = <long long *>malloc((la + lb) * sizeof(long long))
        bb = <long long *>malloc((lb + 1) * sizeof(long long))
        try:
            for i in range(la + lb):
                prod[i] = 0
            for j in range(lb):
                bb[j] = b[j]
            for i in range(la):
                x = a[i]
                if x:
                    for j in range(lb):
                        prod[i + j] += x * bb[j]
            p = [prod[i] for i in range(la + lb - 1)]
        finally:
            free(prod)
            free(bb)
    else:
        p = [0] * (la + lb - 1)
        for i in range(la):
            xo = a[i]
            if xo:
                for j in range(lb):
                    y = b[j]
                    if y:
                        p[i + j] += xo * y
    return reduce_terms(p, table, N)


def galois_map(list a, long k, list table, long N):
    cdef Py_ssize_t n = len(table[0]), m = len(a), e
    vec = [0] * N
    for e in range(m):
        c = a[e]
        if c:
            vec[(e * k) % N] += c
    return reduce_terms(vec, table, N)
