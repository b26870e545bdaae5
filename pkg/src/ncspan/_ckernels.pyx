# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; same contracts as ``_pykernels``."""

from fractions import Fraction


cdef tuple _merge(tuple a, tuple b):
    cdef Py_ssize_t na = len(a), nb = len(b), i = 0, j = 0, k = 0
    cdef long x, y
    cdef list out = [None] * (na + nb)
    while i < na and j < nb:
        x = a[i]
        y = b[j]
        if x <= y:
            out[k] = a[i]
            i += 1
        else:
            out[k] = b[j]
            j += 1
        k += 1
    while i < na:
        out[k] = a[i]
        i += 1
        k += 1
    while j < nb:
        out[k] = b[j]
        j += 1
        k += 1
    return tuple(out)


cpdef dict poly_add(dict a, dict b):
    cdef dict out
    cdef object m, c, s
    if len(a) < len(b):
        a, b = b, a
    out = a.copy()
    for m, c in b.items():
        s = out.get(m)
        if s is None:
            out[m] = c
        else:
            s = s + c
            if s == 0:
                del out[m]
            else:
                out[m] = s
    return out


cpdef dict poly_sub(dict a, dict b):
    cdef dict out = a.copy()
    cdef object m, c, s
    for m, c in b.items():
        s = out.get(m)
        if s is None:
            out[m] = -c
        else:
            s = s - c
            if s == 0:
                del out[m]
            else:
                out[m] = s
    return out


cpdef dict poly_scale(dict a, object c):
    if c == 0:
        return {}
    return {m: v * c for m, v in a.items()}


cpdef dict poly_mul(dict a, dict b):
    cdef dict out = {}
    cdef tuple ma, mb, m
    cdef object ca, cb, s
    for ma, ca in a.items():
        for mb, cb in b.items():
            if not ma:
                m = mb
            elif not mb:
                m = ma
            else:
                m = _merge(ma, mb)
            s = out.get(m)
            if s is None:
                out[m] = ca * cb
            else:
                out[m] = s + ca * cb
    return {m: c for m, c in out.items() if c != 0}


cpdef list matmul(list A, list B, Py_ssize_t d):
    cdef list out = []
    cdef Py_ssize_t i, j, k
    cdef dict acc, x, y
    for i in range(d):
        for j in range(d):
            acc = {}
            for k in range(d):
                x = A[i * d + k]
                if not x:
                    continue
                y = B[k * d + j]
                if not y:
                    continue
                acc = poly_add(acc, poly_mul(x, y))
            out.append(acc)
    return out


cpdef list rref_reduce(object vec, list pivots, dict rows):
    cdef list v = list(vec)
    cdef list r
    cdef Py_ssize_t n = len(v), k
    cdef object p, c
    for p in pivots:
        c = v[p]
        if c != 0:
            r = rows[p]
            for k in range(<Py_ssize_t>p, n):
                if r[k] != 0:
                    v[k] = v[k] - c * r[k]
    return v


cpdef bint rref_insert(object vec, list pivots, dict rows):
    cdef list v = rref_reduce(vec, pivots, rows)
    cdef list r
    cdef Py_ssize_t n = len(v), p = 0, k
    cdef object inv, c, q
    while p < n and v[p] == 0:
        p += 1
    if p == n:
        return False
    inv = Fraction(1, v[p]) if isinstance(v[p], int) else 1 / v[p]
    v = [x * inv if x != 0 else x for x in v]
    for q in pivots:
        r = rows[q]
        c = r[p]
        if c != 0:
            rows[q] = [r[k] - c * v[k] if v[k] != 0 else r[k] for k in range(n)]
    rows[p] = v
    pivots.append(p)
    pivots.sort()
    return True
