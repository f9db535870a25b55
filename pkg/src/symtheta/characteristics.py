"""Characteristic combinatorics over F_2^4.

Everything here is brute force over at most 2^16 objects: the parity
invariant, quadratic refinements of the three bilinear types with their
value censuses, the full symplectic group over F_2, and the affine action
on the 16 characteristics with its orbits and stabilizers.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np

# coordinate order (a1, a2, b1, b2); the pairing couples a_i with b_i
J2 = np.array(
    [[0, 0, 1, 0],
     [0, 0, 0, 1],
     [1, 0, 0, 0],
     [0, 1, 0, 0]], dtype=np.uint8)


def all_characteristics():
    """The 16 half-integer characteristics ((a1,a2),(b1,b2))."""
    return [((a1, a2), (b1, b2)) for a1, a2, b1, b2 in product((0, 1), repeat=4)]


def arf_parity(m) -> int:
    """+1 or -1 according to the dot-product parity of the two halves."""
    a, b = m
    return -1 if (a[0] * b[0] + a[1] * b[1]) % 2 else 1


REF_EVEN = ((0, 0), (0, 0))
REF_ODD = ((1, 0), (1, 0))


def bilinear_form(parity_d1: str, parity_d2: str) -> np.ndarray:
    """Gram matrix mod 2 of the 2-torsion pairing: the standard symplectic
    coupling on each coordinate pair whose invariant factor is odd, zero on
    the even pairs."""
    b = np.zeros((4, 4), dtype=np.uint8)
    if parity_d1 == "odd":
        b[0, 2] = b[2, 0] = 1
    if parity_d2 == "odd":
        b[1, 3] = b[3, 1] = 1
    return b


def _is_alternating(b: np.ndarray) -> bool:
    return (b == b.T).all() and (np.diag(b) == 0).all()


def refinements(b: np.ndarray):
    """All q: F_2^4 -> +-1 with q(x)q(y)q(x+y) = (-1)^(x.B.y).

    Exactly 16 for every alternating B; each is returned as a dict from the
    16 points to +-1, and the defining identity is verified on all pairs.
    """
    b = np.asarray(b, dtype=np.uint8) % 2
    if not _is_alternating(b):
        raise ValueError("matrix is not alternating")
    points = list(product((0, 1), repeat=4))
    out = []
    for eps in product((0, 1), repeat=4):
        q = {}
        for x in points:
            val = sum(eps[i] * x[i] for i in range(4))
            for i in range(4):
                for j in range(i + 1, 4):
                    val += b[i, j] * x[i] * x[j]
            q[x] = -1 if val % 2 else 1
        out.append(q)
    for q in out:
        for x in points:
            for y in points:
                s = tuple((x[i] + y[i]) % 2 for i in range(4))
                pairing = -1 if (np.array(x, dtype=int) @ b @ np.array(y, dtype=int)) % 2 else 1
                assert q[x] * q[y] * q[s] == pairing
    return out


def refinement_distribution(q) -> tuple:
    plus = sum(1 for v in q.values() if v == 1)
    return (plus, 16 - plus)


def census(parity_d1: str, parity_d2: str) -> dict:
    """Multiset of value distributions over the 16 refinements."""
    out = {}
    for q in refinements(bilinear_form(parity_d1, parity_d2)):
        d = refinement_distribution(q)
        out[d] = out.get(d, 0) + 1
    return out


@lru_cache(maxsize=1)
def sp4f2_enumerate() -> tuple:
    """All 720 matrices over F_2 preserving J2, as 4x4 uint8 arrays."""
    bits = np.arange(65536, dtype=np.uint32)
    mats = ((bits[:, None] >> np.arange(16, dtype=np.uint32)) & 1).astype(np.uint8)
    mats = mats.reshape(-1, 4, 4)
    prod = np.einsum("nij,jk,nlk->nil", mats, J2, mats) % 2
    ok = (prod == J2[None, :, :]).all(axis=(1, 2))
    found = mats[ok]
    assert found.shape[0] == 720
    return tuple(tuple(map(tuple, m)) for m in found)


def is_symplectic_f2(m) -> bool:
    m = np.asarray(m, dtype=np.int64) % 2
    return ((m @ J2.astype(np.int64) @ m.T) % 2 == J2).all()


def char_action(m_int, char) -> tuple:
    """Affine action of an integer symplectic matrix on a characteristic.

    m' = (D.a - C.b + diag(C D^t), -B.a + A.b + diag(A B^t)) mod 2; the
    diagonal terms only depend on the lift mod 2, so any integer lift of an
    F_2 matrix can be passed.
    """
    m = np.asarray(m_int, dtype=np.int64)
    if m.shape != (4, 4):
        raise ValueError("need a 4x4 matrix")
    a = np.array(char[0], dtype=np.int64)
    b = np.array(char[1], dtype=np.int64)
    A, B = m[:2, :2], m[:2, 2:]
    C, D = m[2:, :2], m[2:, 2:]
    na = (D @ a - C @ b + np.diag(C @ D.T)) % 2
    nb = (-B @ a + A @ b + np.diag(A @ B.T)) % 2
    return (tuple(int(v) for v in na), tuple(int(v) for v in nb))


def char_orbits():
    """Orbit partition of the 16 characteristics under Sp4(F_2)."""
    group = sp4f2_enumerate()
    chars = all_characteristics()
    seen = set()
    orbits = []
    for m0 in chars:
        if m0 in seen:
            continue
        orbit = {char_action(g, m0) for g in group}
        orbits.append(sorted(orbit))
        seen |= orbit
    return orbits


def stabilizer_order(parity: str) -> int:
    """Order of the stabilizer in Sp4(F_2) of a characteristic of the given
    parity (any representative works; a fixed one is used)."""
    ref = REF_ODD if parity == "odd" else REF_EVEN
    return sum(1 for g in sp4f2_enumerate() if char_action(g, ref) == ref)


# ---- the 2x2 story ---------------------------------------------------------


def sl2f2_elements():
    out = []
    for bits in product((0, 1), repeat=4):
        a, b, c, d = bits
        if (a * d - b * c) % 2 == 1:
            out.append(((a, b), (c, d)))
    return out


def char_action_2x2(m, char) -> tuple:
    (a, b), (c, d) = m
    al, be = char
    return ((d * al - c * be + c * d) % 2, (-b * al + a * be + a * b) % 2)


def o2_order(sign: str) -> int:
    """Order of the stabilizer of an even (+) or odd (-) binary
    characteristic inside Sp2(F_2)."""
    ref = (0, 0) if sign == "+" else (1, 1)
    return sum(1 for m in sl2f2_elements() if char_action_2x2(m, ref) == ref)


def theta_index_formula(g: int, sign: str) -> int:
    """2^(g-1) (2^g -+ 1): the two forgetful-cover degrees."""
    return 2 ** (g - 1) * (2**g - 1 if sign == "-" else 2**g + 1)
