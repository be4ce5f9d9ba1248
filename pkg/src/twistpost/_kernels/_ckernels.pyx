# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of _pykernels.

Same four entry points, same witnesses, same scan order. Tables arrive as
Python sequences and are flattened into C arrays once per call; for the
table sizes this package works at (n <= 24) that copy is negligible next
to the n^3 scan it buys back.
"""

from libc.stdlib cimport free, malloc

IMPL = "c"


cdef int* _flat2(object table, int n) except NULL:
    cdef int* buf = <int*> malloc(n * n * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int a, b
    for a in range(n):
        row = table[a]
        for b in range(n):
            buf[a * n + b] = row[b]
    return buf


cdef int* _flat1(object row, int n) except NULL:
    cdef int* buf = <int*> malloc(n * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int a
    for a in range(n):
        buf[a] = row[a]
    return buf


def assoc_witness(mul):
    cdef int n = len(mul)
    cdef int* m = _flat2(mul, n)
    cdef int a, b, c
    try:
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if m[m[a * n + b] * n + c] != m[a * n + m[b * n + c]]:
                        return (a, b, c)
        return None
    finally:
        free(m)


def left_scan(mul, tri, phi):
    cdef int n = len(mul)
    cdef int* m = _flat2(mul, n)
    cdef int* t = _flat2(tri, n)
    cdef int* p = _flat1(phi, n)
    cdef int* circ = <int*> malloc(n * n * sizeof(int))
    cdef int* seen = <int*> malloc(n * sizeof(int))
    if circ == NULL or seen == NULL:
        free(m); free(t); free(p)
        if circ != NULL: free(circ)
        if seen != NULL: free(seen)
        raise MemoryError()
    cdef int a, b, c, v
    w_hom = None
    w_bij = None
    w_assoc = None
    w_cocycle = None
    try:
        for a in range(n):
            if w_hom is not None:
                break
            for b in range(n):
                if w_hom is not None:
                    break
                for c in range(n):
                    if t[a * n + m[b * n + c]] != m[t[a * n + b] * n + t[a * n + c]]:
                        w_hom = (a, b, c)
                        break

        for a in range(n):
            for b in range(n):
                seen[b] = 0
            for b in range(n):
                v = t[a * n + b]
                if seen[v]:
                    w_bij = a
                    break
                seen[v] = 1
            if w_bij is not None:
                break

        for a in range(n):
            for b in range(n):
                circ[a * n + b] = m[p[a] * n + t[a * n + b]]

        for a in range(n):
            if w_assoc is not None:
                break
            for b in range(n):
                if w_assoc is not None:
                    break
                v = circ[a * n + b]
                for c in range(n):
                    if t[v * n + c] != t[a * n + t[b * n + c]]:
                        w_assoc = (a, b, c)
                        break

        for a in range(n):
            if w_cocycle is not None:
                break
            for b in range(n):
                if p[circ[a * n + b]] != circ[a * n + p[b]]:
                    w_cocycle = (a, b)
                    break

        return (w_hom, w_bij, w_assoc, w_cocycle)
    finally:
        free(m); free(t); free(p); free(circ); free(seen)


def right_scan(mul, tri, phi):
    cdef int n = len(mul)
    cdef int* m = _flat2(mul, n)
    cdef int* t = _flat2(tri, n)
    cdef int* p = _flat1(phi, n)
    cdef int* circ = <int*> malloc(n * n * sizeof(int))
    cdef int* seen = <int*> malloc(n * sizeof(int))
    if circ == NULL or seen == NULL:
        free(m); free(t); free(p)
        if circ != NULL: free(circ)
        if seen != NULL: free(seen)
        raise MemoryError()
    cdef int a, b, c, x, y, v
    w_hom = None
    w_bij = None
    w_assoc = None
    w_cocycle = None
    try:
        for b in range(n):
            if w_hom is not None:
                break
            for x in range(n):
                if w_hom is not None:
                    break
                for y in range(n):
                    if t[m[x * n + y] * n + b] != m[t[x * n + b] * n + t[y * n + b]]:
                        w_hom = (b, x, y)
                        break

        for b in range(n):
            for a in range(n):
                seen[a] = 0
            for a in range(n):
                v = t[a * n + b]
                if seen[v]:
                    w_bij = b
                    break
                seen[v] = 1
            if w_bij is not None:
                break

        for a in range(n):
            for b in range(n):
                circ[a * n + b] = m[t[a * n + b] * n + p[b]]

        for a in range(n):
            if w_assoc is not None:
                break
            for b in range(n):
                if w_assoc is not None:
                    break
                v = t[a * n + b]
                for c in range(n):
                    if t[a * n + circ[b * n + c]] != t[v * n + c]:
                        w_assoc = (a, b, c)
                        break

        for a in range(n):
            if w_cocycle is not None:
                break
            for b in range(n):
                if p[circ[a * n + b]] != circ[p[a] * n + b]:
                    w_cocycle = (a, b)
                    break

        return (w_hom, w_bij, w_assoc, w_cocycle)
    finally:
        free(m); free(t); free(p); free(circ); free(seen)


def braid_witness(r1, r2):
    cdef int n = len(r1)
    cdef int* f = _flat2(r1, n)
    cdef int* g = _flat2(r2, n)
    cdef int a, b, c, x1, y1, u, p, s, t, q
    try:
        for a in range(n):
            for b in range(n):
                x1 = f[a * n + b]
                y1 = g[a * n + b]
                for c in range(n):
                    u = f[y1 * n + c]
                    p = f[b * n + c]
                    s = f[a * n + p]
                    t = g[a * n + p]
                    q = g[b * n + c]
                    if (f[x1 * n + u] != s
                            or g[x1 * n + u] != f[t * n + q]
                            or g[y1 * n + c] != g[t * n + q]):
                        return (a, b, c)
        return None
    finally:
        free(f); free(g)
