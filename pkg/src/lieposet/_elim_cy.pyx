# cython: language_level=3
# cython: boundscheck=False
"""Cython sparse Gaussian elimination over the rationals.

Same interface and pivoting order as ``lieposet._elim_py``, but the inner
loop works on (numerator, denominator) int pairs instead of Fraction
objects, which skips most of the Fraction constructor overhead.  Python
ints keep the arithmetic exact at arbitrary precision.
"""

from fractions import Fraction
from math import gcd


cdef tuple q_sub_mul(tuple x, tuple f, tuple p):
    # x - f*p over reduced (num, den) pairs; returns a reduced pair.
    cdef object fn = f[0], fd = f[1], pn = p[0], pd = p[1]
    cdef object g1 = gcd(fn, pd), g2 = gcd(pn, fd)
    cdef object mn = (fn // g1) * (pn // g2)
    cdef object md = (fd // g2) * (pd // g1)
    cdef object xn, xd, rn, rd, g
    if x is None:
        rn, rd = -mn, md
    else:
        xn = x[0]
        xd = x[1]
        g = gcd(xd, md)
        rd = (xd // g) * md
        rn = xn * (md // g) - mn * (xd // g)
        g = gcd(rn, rd) if rn else 0
        if g and g != 1:
            rn //= g
            rd //= g
    return (rn, rd)


cdef dict scale_row(dict row, tuple inv):
    cdef dict out = {}
    cdef object c, v
    cdef object fn = inv[0], fd = inv[1], g1, g2, num, den
    for c, v in row.items():
        g1 = gcd(v[0], fd)
        g2 = gcd(fn, v[1])
        num = (v[0] // g1) * (fn // g2)
        den = (v[1] // g2) * (fd // g1)
        if den < 0:
            num, den = -num, -den
        out[c] = (num, den)
    return out


cdef void reduce_row(dict row, dict pivot_rows, Py_ssize_t pivot_limit):
    cdef Py_ssize_t hit, c
    cdef tuple f, v, nv
    cdef dict prow
    cdef object cc
    while True:
        hit = -1
        for c in row:
            if c < pivot_limit and c in pivot_rows and (hit < 0 or c < hit):
                hit = c
        if hit < 0:
            return
        f = row.pop(hit)
        prow = pivot_rows[hit]
        for cc, v in prow.items():
            if cc == hit:
                continue
            nv = q_sub_mul(row.get(cc), f, v)
            if nv[0]:
                row[cc] = nv
            else:
                row.pop(cc, None)


def eliminate(rows, n_cols, pivot_limit=None, reduce_full=False):
    """See ``lieposet._elim_py.eliminate``; identical contract."""
    cdef Py_ssize_t limit = n_cols if pivot_limit is None else pivot_limit
    cdef dict pivot_rows = {}
    cdef dict occupancy = {}
    cdef dict row, new_row, q_row
    cdef Py_ssize_t piv, c
    cdef object cc, q, v
    cdef tuple f, nv

    work = []
    for r in rows:
        if r:
            work.append({c: (v.numerator, v.denominator) for c, v in r.items()})
    work.sort(key=len)

    for row in work:
        reduce_row(row, pivot_rows, limit)
        piv = -1
        for c in row:
            if c < limit and (piv < 0 or c < piv):
                piv = c
        if piv < 0:
            continue
        v = row[piv]
        new_row = scale_row(row, (v[1], v[0]))
        pivot_rows[piv] = new_row
        if not reduce_full:
            continue
        for cc in new_row:
            if cc in occupancy:
                occupancy[cc].add(piv)
            else:
                occupancy[cc] = {piv}
        if piv in occupancy:
            for q in list(occupancy[piv]):
                if q == piv:
                    continue
                q_row = pivot_rows[q]
                f = q_row.pop(piv)
                occupancy[piv].discard(q)
                for cc, v in new_row.items():
                    if cc == piv:
                        continue
                    nv = q_sub_mul(q_row.get(cc), f, v)
                    if nv[0]:
                        if cc not in q_row:
                            if cc in occupancy:
                                occupancy[cc].add(q)
                            else:
                                occupancy[cc] = {q}
                        q_row[cc] = nv
                    elif cc in q_row:
                        del q_row[cc]
                        occupancy[cc].discard(q)

    out = {
        p: {c: Fraction(v[0], v[1]) for c, v in prow.items()}
        for p, prow in pivot_rows.items()
    }
    return sorted(out), out
