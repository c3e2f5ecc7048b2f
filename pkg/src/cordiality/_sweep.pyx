# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Gray-code sweep kernel.

Contract mirrors _sweep_py.sweep_block exactly; results must be
bit-identical. The sweep loop runs without the GIL so block-parallel
solves scale across threads.
"""

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil

INF = 1 << 60

cdef long long _INF = 1 << 60


def sweep_block(rows_rev, int n, int m, unsigned long long base, int sweep_bits):
    """See _sweep_py.sweep_block."""
    if n > 34:
        raise ValueError("compiled kernel supports at most 34 vertices")
    cdef unsigned long long rows[34]
    cdef int deg[34]
    cdef int i
    for i in range(n):
        rows[i] = rows_rev[i]
        deg[i] = __builtin_popcountll(rows[i])

    cdef unsigned long long cur = base
    cdef long long v1cnt = __builtin_popcountll(cur)
    cdef long long e1 = 0
    for i in range(n):
        if not (cur >> (n - 1 - i)) & 1:
            e1 += __builtin_popcountll(rows[i] & cur)

    cdef long long d1 = _INF, d2 = _INF
    cdef unsigned long long w1 = 0, w2 = 0
    cdef long long dv, de, s
    cdef unsigned long long t, steps = (<unsigned long long> 1) << sweep_bits
    cdef unsigned long long one = 1
    cdef int v, p, ones, top = n - 1

    with nogil:
        dv = n - 2 * v1cnt
        if dv < 0:
            dv = -dv
        de = m - 2 * e1
        if de < 0:
            de = -de
        d1 = dv + de
        w1 = cur
        if dv <= 1:
            d2 = de
            w2 = cur
        t = 1
        while t < steps:
            v = __builtin_ctzll(t) + 1
            p = top - v
            ones = __builtin_popcountll(rows[v] & cur)
            if (cur >> p) & 1:
                cur ^= one << p
                v1cnt -= 1
                e1 += 2 * ones - deg[v]
            else:
                cur ^= one << p
                v1cnt += 1
                e1 += deg[v] - 2 * ones
            dv = n - 2 * v1cnt
            if dv < 0:
                dv = -dv
            de = m - 2 * e1
            if de < 0:
                de = -de
            s = dv + de
            if s < d1 or (s == d1 and cur < w1):
                d1 = s
                w1 = cur
            if dv <= 1 and (de < d2 or (de == d2 and cur < w2)):
                d2 = de
                w2 = cur
            t += 1

    return d1, int(w1), d2, int(w2), 1 << sweep_bits
