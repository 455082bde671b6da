# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Apéry-table kernels; same contracts as ``_kernels_py``."""

from libc.stdlib cimport malloc, free

ctypedef long long i64

cdef i64 INF = 1 << 62


cdef i64 _gcd(i64 a, i64 b) nogil:
    while b:
        a, b = b, a % b
    return a


cdef i64* _load(object ap, Py_ssize_t* m_out) except NULL:
    cdef Py_ssize_t m = len(ap)
    cdef i64* buf = <i64*> malloc(m * sizeof(i64))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(m):
        buf[i] = ap[i]
    m_out[0] = m
    return buf


cdef bint _is_maximal(i64* ap, Py_ssize_t m, Py_ssize_t i) nogil:
    cdef i64 w = ap[i]
    cdef Py_ssize_t j, k
    for j in range(1, m):
        k = i + j
        if k >= m:
            k -= m
        if ap[k] == w + ap[j]:
            return False
    return True


cdef inline bint _member(i64* ap, Py_ssize_t m, i64 y) nogil:
    return y >= ap[y % m]


def apery_from_generators(gens):
    cdef list g = sorted(set(gens))
    cdef i64 m = g[0]
    cdef i64* ap = <i64*> malloc(m * sizeof(i64))
    if ap == NULL:
        raise MemoryError()
    cdef i64 a, step, d, cycle_len, start, res, nxt, best, best_res, cur, cand, t
    cdef Py_ssize_t i
    try:
        for i in range(m):
            ap[i] = INF
        ap[0] = 0
        for a in g[1:]:
            step = a % m
            if step == 0:
                continue
            d = _gcd(step, m)
            cycle_len = m // d
            for start in range(d):
                best = ap[start]
                best_res = start
                res = start
                for t in range(cycle_len):
                    res = res + step
                    if res >= m:
                        res -= m
                    if ap[res] < best:
                        best = ap[res]
                        best_res = res
                if best == INF:
                    continue
                res = best_res
                cur = best
                for t in range(cycle_len):
                    nxt = res + step
                    if nxt >= m:
                        nxt -= m
                    cand = cur + a
                    if cand < ap[nxt]:
                        ap[nxt] = cand
                    cur = ap[nxt]
                    res = nxt
        out = []
        for i in range(m):
            if ap[i] == INF:
                raise ValueError("generators do not span every residue class")
            out.append(ap[i])
        return out
    finally:
        free(ap)


def pseudo_frobenius(ap_in):
    cdef Py_ssize_t m, i
    cdef i64* ap = _load(ap_in, &m)
    try:
        out = [ap[i] - m for i in range(1, m) if _is_maximal(ap, m, i)]
        out.sort()
        return out
    finally:
        free(ap)


def special_gaps(ap_in):
    cdef Py_ssize_t m, i
    cdef i64 x
    cdef i64* ap = _load(ap_in, &m)
    out = []
    try:
        for i in range(1, m):
            if _is_maximal(ap, m, i):
                x = ap[i] - m
                if _member(ap, m, 2 * x):
                    out.append(x)
        out.sort()
        return out
    finally:
        free(ap)


def minimal_generators(ap_in):
    cdef Py_ssize_t m, i, j, k
    cdef bint minimal
    cdef i64* ap = _load(ap_in, &m)
    try:
        if m == 1:
            return [1]
        out = [m]
        for k in range(1, m):
            minimal = True
            for i in range(1, m):
                j = k - i
                if j < 0:
                    j += m
                if j and ap[i] + ap[j] == ap[k]:
                    minimal = False
                    break
            if minimal:
                out.append(ap[k])
        out.sort()
        return out
    finally:
        free(ap)


cdef list _child_gaps(i64* ap, Py_ssize_t m, i64 exclude):
    cdef list out = []
    cdef Py_ssize_t i
    cdef i64 r, x
    if m == 1:
        return out
    r = ap[1]
    for i in range(2, m):
        if ap[i] < r:
            r = ap[i]
    for i in range(1, m):
        if ap[i] >= r + m:
            continue
        x = ap[i] - m
        if x <= m or x == exclude:
            continue
        if _is_maximal(ap, m, i) and _member(ap, m, 2 * x):
            out.append(x)
    out.sort()
    return out


def child_gaps(ap_in, exclude=-1):
    cdef Py_ssize_t m
    cdef i64* ap = _load(ap_in, &m)
    try:
        return _child_gaps(ap, m, exclude)
    finally:
        free(ap)


def expand_level(level, exclude=-1):
    cdef list out = []
    cdef Py_ssize_t m, p
    cdef i64* ap
    cdef i64 x
    for p, table in enumerate(level):
        ap = _load(table, &m)
        try:
            for x in _child_gaps(ap, m, exclude):
                child = list(table)
                child[x % m] = x
                out.append((p, x, tuple(child)))
        finally:
            free(ap)
    return out
