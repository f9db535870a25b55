"""Pure-numpy fallback for the F_p reduction kernels.

Same contracts as gb_kernels_numba; merges are vectorized instead of
jit-compiled.  Selected with SYMTHETA_BACKEND=numpy.
"""

import numpy as np

NFIELDS = 7
FIELD_BITS = 8
FIELD_MASK = 255
KEY_ONE = sum(FIELD_MASK << (FIELD_BITS * i) for i in range(NFIELDS))

BACKEND_NAME = "numpy"

_SHIFTS = np.arange(NFIELDS, dtype=np.int64) * FIELD_BITS


def _fields(keys):
    return (np.asarray(keys, dtype=np.int64)[..., None] >> _SHIFTS) & FIELD_MASK


def _find_divisor(glm, lm):
    if glm.size == 0:
        return -1
    ok = (_fields(glm) >= _fields(np.int64(lm))).all(axis=-1)
    idx = np.nonzero(ok)[0]
    return int(idx[0]) if idx.size else -1


def _combine(keys, coeffs, p):
    """Collect equal keys, reduce mod p, drop zeros; return descending."""
    uk, inv = np.unique(keys, return_inverse=True)
    uc = np.zeros(uk.size, dtype=np.int64)
    np.add.at(uc, inv, coeffs % p)
    uc %= p
    nz = uc != 0
    return uk[nz][::-1].copy(), uc[nz][::-1].copy()


def add_scaled_shifted(k1, c1, s1, d1, k2, c2, s2, d2, p):
    keys = np.concatenate([k1 + d1, k2 + d2])
    coeffs = np.concatenate([c1 * (s1 % p) % p, c2 * (s2 % p) % p])
    return _combine(keys, coeffs, p)


def normal_form(fk, fc, gk, gc, goff, glen, glm, p):
    rk = []
    rc = []
    fk = np.asarray(fk, dtype=np.int64)
    fc = np.asarray(fc, dtype=np.int64)
    while fk.size:
        lm = int(fk[0])
        j = _find_divisor(glm, lm)
        if j < 0:
            rk.append(lm)
            rc.append(int(fc[0]))
            fk = fk[1:]
            fc = fc[1:]
        else:
            delta = lm - int(glm[j])
            c = int(fc[0])
            s = int(goff[j])
            e = s + int(glen[j])
            keys = np.concatenate([fk, gk[s:e] + delta])
            coeffs = np.concatenate([fc, (p - c * gc[s:e] % p) % p])
            fk, fc = _combine(keys, coeffs, p)
    return np.array(rk, dtype=np.int64), np.array(rc, dtype=np.int64)


def warmup():
    pass
