"""Packed monomial keys for the F_p engine.

A monomial in up to 7 variables is packed into one int64 so that integer
comparison equals graded reverse lexicographic comparison: the total degree
sits in the top byte and byte i holds 255 - e_i (variables listed from the
last one downward).  Keys of products add, up to the constant KEY_ONE.
"""

from __future__ import annotations

import numpy as np

NFIELDS = 7
FIELD_BITS = 8
FIELD_MASK = 255
DEG_SHIFT = 56
MAX_TOTAL_DEGREE = 127  # keeps keys positive and product fields borrow-free

KEY_ONE = sum(FIELD_MASK << (FIELD_BITS * i) for i in range(NFIELDS))


class PackingOverflow(OverflowError):
    pass


def pack_exponent(exp) -> int:
    if len(exp) > NFIELDS:
        raise PackingOverflow(f"at most {NFIELDS} variables supported by the packed engine")
    deg = sum(exp)
    if deg > MAX_TOTAL_DEGREE:
        raise PackingOverflow(f"total degree {deg} exceeds {MAX_TOTAL_DEGREE}")
    key = deg << DEG_SHIFT
    for i in range(NFIELDS):
        e = exp[i] if i < len(exp) else 0
        key |= (FIELD_MASK - e) << (FIELD_BITS * i)
    return key


def unpack_exponent(key: int, nvars: int):
    return tuple(
        FIELD_MASK - ((key >> (FIELD_BITS * i)) & FIELD_MASK) for i in range(nvars)
    )


def key_degree(key: int) -> int:
    return key >> DEG_SHIFT


def key_mul(ka: int, kb: int) -> int:
    if key_degree(ka) + key_degree(kb) > MAX_TOTAL_DEGREE:
        raise PackingOverflow("product degree exceeds the packed range")
    return ka + kb - KEY_ONE


def key_divides(kb: int, ka: int) -> bool:
    """True when monomial b divides monomial a."""
    for i in range(NFIELDS):
        s = FIELD_BITS * i
        if ((kb >> s) & FIELD_MASK) < ((ka >> s) & FIELD_MASK):
            return False
    return True


def key_lcm(ka: int, kb: int) -> int:
    key = 0
    deg = 0
    for i in range(NFIELDS):
        s = FIELD_BITS * i
        f = min((ka >> s) & FIELD_MASK, (kb >> s) & FIELD_MASK)
        key |= f << s
        deg += FIELD_MASK - f
    if deg > MAX_TOTAL_DEGREE:
        raise PackingOverflow("lcm degree exceeds the packed range")
    return key | (deg << DEG_SHIFT)


def pack_poly(terms, nvars: int, p: int):
    """Dict of exponent tuple -> int coefficient  ->  (keys desc, coeffs)."""
    items = []
    for e, c in terms.items():
        c = c % p
        if c:
            items.append((pack_exponent(e), c))
    items.sort(key=lambda t: t[0], reverse=True)
    keys = np.array([k for k, _ in items], dtype=np.int64)
    coeffs = np.array([c for _, c in items], dtype=np.int64)
    return keys, coeffs


def unpack_poly(keys, coeffs, nvars: int):
    return {unpack_exponent(int(k), nvars): int(c) for k, c in zip(keys, coeffs)}
