"""numba-compiled hot kernels for polynomial reduction over F_p.

The monomial encoding matches packing.py: degree in the top byte, then one
byte of 255 - e_i per variable.  Coefficients live in [0, p) with p < 2**31,
so products fit comfortably in int64.
"""

import numpy as np
from numba import njit

NFIELDS = 7
FIELD_BITS = 8
FIELD_MASK = 255
KEY_ONE = sum(FIELD_MASK << (FIELD_BITS * i) for i in range(NFIELDS))

BACKEND_NAME = "numba"


@njit(cache=True, inline="always")
def _divides(kb, ka):
    for i in range(NFIELDS):
        s = FIELD_BITS * i
        if ((kb >> s) & FIELD_MASK) < ((ka >> s) & FIELD_MASK):
            return False
    return True


@njit(cache=True)
def _find_divisor(glm, lm):
    for t in range(glm.size):
        if _divides(glm[t], lm):
            return t
    return -1


@njit(cache=True)
def _merge_sub(fk, fc, fstart, gk, gc, c, delta, p):
    """f[fstart:] - c * x^delta * g, both key arrays descending."""
    nf = fk.size - fstart
    ng = gk.size
    ok = np.empty(nf + ng, np.int64)
    oc = np.empty(nf + ng, np.int64)
    i = fstart
    t = 0
    o = 0
    while i < fk.size and t < ng:
        a = fk[i]
        b = gk[t] + delta
        if a > b:
            ok[o] = a
            oc[o] = fc[i]
            o += 1
            i += 1
        elif a < b:
            v = (p - c * gc[t] % p) % p
            if v:
                ok[o] = b
                oc[o] = v
                o += 1
            t += 1
        else:
            v = (fc[i] - c * gc[t]) % p
            if v:
                ok[o] = a
                oc[o] = v
                o += 1
            i += 1
            t += 1
    while i < fk.size:
        ok[o] = fk[i]
        oc[o] = fc[i]
        o += 1
        i += 1
    while t < ng:
        v = (p - c * gc[t] % p) % p
        if v:
            ok[o] = gk[t] + delta
            oc[o] = v
            o += 1
        t += 1
    return ok[:o], oc[:o]


@njit(cache=True)
def add_scaled_shifted(k1, c1, s1, d1, k2, c2, s2, d2, p):
    """s1 * x^d1 * f1 + s2 * x^d2 * f2 with scalar s, monomial-key shift d."""
    n1 = k1.size
    n2 = k2.size
    ok = np.empty(n1 + n2, np.int64)
    oc = np.empty(n1 + n2, np.int64)
    i = 0
    t = 0
    o = 0
    while i < n1 and t < n2:
        a = k1[i] + d1
        b = k2[t] + d2
        if a > b:
            v = s1 * c1[i] % p
            if v:
                ok[o] = a
                oc[o] = v
                o += 1
            i += 1
        elif a < b:
            v = s2 * c2[t] % p
            if v:
                ok[o] = b
                oc[o] = v
                o += 1
            t += 1
        else:
            v = (s1 * c1[i] + s2 * c2[t]) % p
            if v:
                ok[o] = a
                oc[o] = v
                o += 1
            i += 1
            t += 1
    while i < n1:
        v = s1 * c1[i] % p
        if v:
            ok[o] = k1[i] + d1
            oc[o] = v
            o += 1
        i += 1
    while t < n2:
        v = s2 * c2[t] % p
        if v:
            ok[o] = k2[t] + d2
            oc[o] = v
            o += 1
        t += 1
    return ok[:o], oc[:o]


@njit(cache=True)
def normal_form(fk, fc, gk, gc, goff, glen, glm, p):
    """Full normal form of f against a monic basis (flattened arrays)."""
    rk = np.empty(fk.size + 16, np.int64)
    rc = np.empty(fk.size + 16, np.int64)
    rn = 0
    start = 0
    while start < fk.size:
        lm = fk[start]
        j = _find_divisor(glm, lm)
        if j < 0:
            if rn == rk.size:
                nk = np.empty(2 * rk.size, np.int64)
                nc = np.empty(2 * rk.size, np.int64)
                nk[:rn] = rk[:rn]
                nc[:rn] = rc[:rn]
                rk = nk
                rc = nc
            rk[rn] = lm
            rc[rn] = fc[start]
            rn += 1
            start += 1
        else:
            delta = lm - glm[j]
            c = fc[start]
            s = goff[j]
            e = s + glen[j]
            fk, fc = _merge_sub(fk, fc, start, gk[s:e], gc[s:e], c, delta, p)
            start = 0
    return rk[:rn], rc[:rn]


def warmup():
    """Trigger compilation on a tiny input."""
    k = np.array([KEY_ONE + (1 << 56) - 255 + 254], dtype=np.int64)
    c = np.array([1], dtype=np.int64)
    off = np.array([0], dtype=np.int64)
    ln = np.array([1], dtype=np.int64)
    normal_form(k, c, k, c, off, ln, k, 31991)
