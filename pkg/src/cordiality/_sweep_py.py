"""Pure-Python Gray-code sweep kernel.

Same contract as the compiled kernel in _sweep.pyx; the engine selects
whichever imported. Bit layout inside a sweep: bit (n-1-i) of the state
integer holds f(v_i), so plain integer order equals lexicographic order
of the bit-strings (vertex 0 first), which keeps witness tie-breaking a
single comparison.
"""

from __future__ import annotations

INF = 1 << 60


def sweep_block(rows_rev, n, m, base, sweep_bits):
    """Sweep one block of labellings reachable from `base`.

    rows_rev[v] is v's neighbour mask in the reversed bit layout. Vertices
    1..sweep_bits are swept in reflected-Gray order (vertex 1 flips
    fastest); vertex 0 and everything above sweep_bits stay fixed at
    their bits in base.

    Returns (d1, w1, d2, w2, visited): minima of delta_v+delta_e over the
    block and of delta_e over its friendly labellings, with lexicographic-
    smallest witnesses; d2/w2 are (INF, 0) when the block holds no friendly
    labelling.
    """
    deg = [r.bit_count() for r in rows_rev]
    cur = base
    v1cnt = cur.bit_count()
    e1 = 0
    for i in range(n):
        if not (cur >> (n - 1 - i)) & 1:
            e1 += (rows_rev[i] & cur).bit_count()

    d1 = INF
    w1 = 0
    d2 = INF
    w2 = 0

    dv = abs(n - 2 * v1cnt)
    de = abs(m - 2 * e1)
    d1 = dv + de
    w1 = cur
    if dv <= 1:
        d2 = de
        w2 = cur

    top = n - 1
    for t in range(1, 1 << sweep_bits):
        v = ((t & -t).bit_length() - 1) + 1
        p = top - v
        ones = (rows_rev[v] & cur).bit_count()
        if (cur >> p) & 1:
            cur ^= 1 << p
            v1cnt -= 1
            e1 += 2 * ones - deg[v]
        else:
            cur ^= 1 << p
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
    return d1, w1, d2, w2, 1 << sweep_bits
