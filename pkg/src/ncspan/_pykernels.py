"""Pure-Python kernels.

Sparse commutative polynomials are plain dicts mapping a monomial to a
nonzero coefficient.  A monomial is a sorted tuple of integer variable ids
with repetition, so ``(3, 3, 7)`` is ``v3**2 * v7`` and ``()`` is 1.

Row spaces are kept in reduced row echelon form as ``(pivots, rows)`` where
``pivots`` is a sorted list of pivot columns and ``rows[p]`` is the row whose
pivot (normalised to 1) sits in column ``p``.

``_ckernels.pyx`` mirrors every function here with identical semantics.
"""

from fractions import Fraction


def poly_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
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


def poly_sub(a, b):
    out = dict(a)
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


def poly_scale(a, c):
    if c == 0:
        return {}
    return {m: v * c for m, v in a.items()}


def poly_mul(a, b):
    out = {}
    get = out.get
    for ma, ca in a.items():
        for mb, cb in b.items():
            if not ma:
                m = mb
            elif not mb:
                m = ma
            else:
                m = tuple(sorted(ma + mb))
            s = get(m)
            if s is None:
                out[m] = ca * cb
            else:
                out[m] = s + ca * cb
    return {m: c for m, c in out.items() if c != 0}


def matmul(A, B, d):
    """Product of two d x d matrices of polynomial dicts, row-major flat."""
    out = []
    for i in range(d):
        row = A[i * d:(i + 1) * d]
        for j in range(d):
            acc = {}
            for k in range(d):
                x = row[k]
                if not x:
                    continue
                y = B[k * d + j]
                if not y:
                    continue
                acc = poly_add(acc, poly_mul(x, y))
            out.append(acc)
    return out


def rref_reduce(vec, pivots, rows):
    v = list(vec)
    for p in pivots:
        c = v[p]
        if c != 0:
            r = rows[p]
            for k in range(p, len(v)):
                if r[k] != 0:
                    v[k] = v[k] - c * r[k]
    return v


def rref_insert(vec, pivots, rows):
    """Add ``vec`` to the row space; return True when the rank grew."""
    v = rref_reduce(vec, pivots, rows)
    n = len(v)
    p = 0
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

