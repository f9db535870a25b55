"""Integer symplectic matrices for the form J_D and congruence predicates.

Matrices are 4x4 numpy object arrays of Python ints (entries can grow
arbitrarily).  Congruence subgroups are infinite, so group-level claims are
exercised on words of elementary symplectic generators; a transvection
machine produces elements with any prescribed reduction mod 2.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .characteristics import (
    REF_EVEN,
    REF_ODD,
    char_action,
    char_action_2x2,
    is_symplectic_f2,
    sp4f2_enumerate,
)

SUBGROUP_TAGS = (
    "GammaD",
    "GammaDD",
    "GammaD2D",
    "Gamma24",
    "GammaEvenSym",
    "GammaMinus",
    "GammaPlus",
    "GammaIntMinus",
    "GammaIntPlus",
)


def mat(rows) -> np.ndarray:
    m = np.array(rows, dtype=object)
    if m.shape != (4, 4):
        raise ValueError("need a 4x4 integer matrix")
    return m


def identity4() -> np.ndarray:
    return np.array([[int(i == j) for j in range(4)] for i in range(4)], dtype=object)


def j_form(D) -> np.ndarray:
    d1, d2 = D
    return mat([
        [0, 0, d1, 0],
        [0, 0, 0, d2],
        [-d1, 0, 0, 0],
        [0, -d2, 0, 0],
    ])


J_STD = j_form((1, 1))


def in_gamma(R, D) -> bool:
    """Exact check of R J_D R^t = J_D."""
    R = np.asarray(R, dtype=object)
    j = j_form(D)
    return (R @ j @ R.T == j).all()


def reduction_mod2_symplectic(R):
    """(R mod 2, does it preserve the standard form mod 2)."""
    n = (np.asarray(R, dtype=object) % 2).astype(np.uint8)
    return n, bool(is_symplectic_f2(n))


def f_D(R, D) -> np.ndarray:
    """Conjugation diag(I, D^-1) R diag(I, D); rational entries allowed."""
    d1, d2 = D
    R = np.asarray(R, dtype=object)
    out = np.empty((4, 4), dtype=object)
    num = [1, 1, d1, d2]
    for i in range(4):
        for j in range(4):
            v = Fraction(R[i, j]) * Fraction(num[j], num[i])
            out[i, j] = int(v) if v.denominator == 1 else v
    return out


def f_D_inv(N, D, require_integral: bool = True) -> np.ndarray:
    """Inverse conjugation diag(I, D) N diag(I, D^-1)."""
    d1, d2 = D
    N = np.asarray(N, dtype=object)
    out = np.empty((4, 4), dtype=object)
    num = [1, 1, d1, d2]
    for i in range(4):
        for j in range(4):
            v = Fraction(N[i, j]) * Fraction(num[i], num[j])
            if v.denominator == 1:
                out[i, j] = int(v)
            elif require_integral:
                raise ValueError(f"non-integral entry at ({i},{j}): {v}")
            else:
                out[i, j] = v
    return out


def _blocks(R):
    R = np.asarray(R, dtype=object)
    return R[:2, :2], R[:2, 2:], R[2:, :2], R[2:, 2:]


def _block_zero_mod_D(X, D) -> bool:
    """Row i of the 2x2 block divisible by d_i (X = diag(D) * integer)."""
    d1, d2 = D
    return all(int(X[0, j]) % d1 == 0 for j in range(2)) and all(
        int(X[1, j]) % d2 == 0 for j in range(2)
    )


def _in_gamma_dd(R, D, factor: int = 1) -> bool:
    if not in_gamma(R, D):
        return False
    a, b, c, d = _blocks(R)
    I2 = np.array([[1, 0], [0, 1]], dtype=object)
    dd = (factor * D[0], factor * D[1])
    return all(
        _block_zero_mod_D(X, dd) for X in (a - I2, b, c, d - I2)
    )


def _fixes_char_mod2(R, ref) -> bool:
    n = (np.asarray(R, dtype=object) % 2).astype(np.int64)
    if not is_symplectic_f2(n):
        return False
    return char_action(n, ref) == ref


def in_congruence(R, tag: str, D) -> bool:
    """Membership predicate for the congruence subgroup named by tag."""
    d1, d2 = D
    if tag not in SUBGROUP_TAGS:
        raise ValueError(f"unknown tag {tag!r}")
    odd1, odd2 = d1 % 2 == 1, d2 % 2 == 1
    if tag in ("GammaMinus", "GammaPlus") and not (odd1 and odd2):
        raise ValueError(f"{tag} requires both invariant factors odd")
    if tag in ("GammaIntMinus", "GammaIntPlus") and not (odd1 and not odd2):
        raise ValueError(f"{tag} requires d1 odd and d2 even")
    if tag in ("Gamma24", "GammaEvenSym") and (odd1 or odd2):
        raise ValueError(f"{tag} requires both invariant factors even")

    if tag == "GammaD":
        return in_gamma(R, D)
    if tag == "GammaDD":
        return _in_gamma_dd(R, D)
    if tag == "GammaD2D":
        return _in_gamma_dd(R, D, factor=2)
    if tag == "GammaMinus":
        return _in_gamma_dd(R, D) and _fixes_char_mod2(R, REF_ODD)
    if tag == "GammaPlus":
        return _in_gamma_dd(R, D) and _fixes_char_mod2(R, REF_EVEN)
    if tag in ("Gamma24", "GammaEvenSym"):
        if tag == "Gamma24" and D != (2, 2):
            # the classical definition; for general even D use GammaEvenSym
            raise ValueError("Gamma24 is the D=(2,2) special case")
        if not _in_gamma_dd(R, D):
            return False
        _, b, c, _ = _blocks(R)
        return all(
            int(b[i, i]) % (2 * D[i]) == 0 and int(c[i, i]) % (2 * D[i]) == 0
            for i in range(2)
        )
    # intermediate case: d1 odd, d2 even
    if not _in_gamma_dd(R, D):
        return False
    R = np.asarray(R, dtype=object)
    # the d2-coordinate pair carries the 2-torsion sublattice: indices {1,3}
    s11, s13 = int(R[1, 1]), int(R[1, 3])
    s31, s33 = int(R[3, 1]), int(R[3, 3])
    if (s11 - 1) % d2 or (s33 - 1) % d2 or s13 % (2 * d2) or s31 % (2 * d2):
        return False
    if tag == "GammaIntMinus":
        return True
    # GammaIntPlus: the quotient pair {0,2} must act through the stabilizer
    # of the even binary characteristic
    t = ((int(R[0, 0]) % 2, int(R[0, 2]) % 2), (int(R[2, 0]) % 2, int(R[2, 2]) % 2))
    det = (t[0][0] * t[1][1] - t[0][1] * t[1][0]) % 2
    if det != 1:
        return False
    return char_action_2x2(t, (0, 0)) == (0, 0)


# ---- Igusa index -----------------------------------------------------------


def igusa_index(h: int) -> int:
    """h^10 prod over primes p | h of (1 - p^-2)(1 - p^-4), exactly."""
    if h < 1:
        raise ValueError("need h >= 1")
    value = Fraction(h) ** 10
    n = h
    p = 2
    seen = set()
    while p * p <= n:
        if n % p == 0:
            seen.add(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        seen.add(n)
    for p in sorted(seen):
        value *= (1 - Fraction(1, p**2)) * (1 - Fraction(1, p**4))
    assert value.denominator == 1
    return int(value)


# ---- samplers --------------------------------------------------------------


def _elem_upper(B) -> np.ndarray:
    out = identity4()
    out[0, 2], out[0, 3] = B[0][0], B[0][1]
    out[1, 2], out[1, 3] = B[1][0], B[1][1]
    return out


def _elem_lower(C) -> np.ndarray:
    out = identity4()
    out[2, 0], out[2, 1] = C[0][0], C[0][1]
    out[3, 0], out[3, 1] = C[1][0], C[1][1]
    return out


def _elem_gl(i, j, c) -> np.ndarray:
    u = [[1, 0], [0, 1]]
    u[i][j] = c
    uinvt = [[1, 0], [0, 1]]
    uinvt[j][i] = -c
    out = identity4()
    out[0, 0], out[0, 1], out[1, 0], out[1, 1] = u[0][0], u[0][1], u[1][0], u[1][1]
    out[2, 2], out[2, 3], out[3, 2], out[3, 3] = (
        uinvt[0][0], uinvt[0][1], uinvt[1][0], uinvt[1][1],
    )
    return out


def sample_congruence(m: int, length: int, seed: int) -> np.ndarray:
    """A word of elementary symplectic unipotents, each congruent to the
    identity mod m; the product lies in the principal level-m subgroup of
    the standard symplectic group."""
    rng = random.Random(repr((m, length, seed)))
    out = identity4()
    for _ in range(length):
        kind = rng.randrange(3)
        k = rng.choice([-2, -1, 1, 2]) * m
        if kind == 0:
            which = rng.randrange(3)
            B = [[0, 0], [0, 0]]
            if which == 0:
                B[0][0] = k
            elif which == 1:
                B[1][1] = k
            else:
                B[0][1] = B[1][0] = k
            out = out @ _elem_upper(B)
        elif kind == 1:
            which = rng.randrange(3)
            C = [[0, 0], [0, 0]]
            if which == 0:
                C[0][0] = k
            elif which == 1:
                C[1][1] = k
            else:
                C[0][1] = C[1][0] = k
            out = out @ _elem_lower(C)
        else:
            i, j = rng.choice([(0, 1), (1, 0)])
            out = out @ _elem_gl(i, j, k)
    return out


def is_congruent_identity(R, m: int) -> bool:
    I = identity4()
    return all(int(R[i, j] - I[i, j]) % m == 0 for i in range(4) for j in range(4))


# ---- transvection lifts ----------------------------------------------------


def transvection(v, c: int) -> np.ndarray:
    """x -> x + c <x, v> v for the standard form; exactly symplectic for any
    integer c, congruent to the identity mod c."""
    v = np.array(v, dtype=object)
    jv = J_STD @ v
    out = identity4()
    for i in range(4):
        for j in range(4):
            out[i, j] += c * v[i] * jv[j]
    return out


@lru_cache(maxsize=1)
def _transvection_words():
    """BFS words over F_2: each element of Sp4(F_2) as a product of
    transvections by nonzero vectors."""
    from itertools import product as iproduct

    gens = []
    for v in iproduct((0, 1), repeat=4):
        if any(v):
            t = (transvection(v, 1) % 2).astype(np.uint8)
            gens.append((v, tuple(map(tuple, t))))
    start = tuple(map(tuple, np.eye(4, dtype=np.uint8)))
    words = {start: ()}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            ma = np.array(m, dtype=np.uint8)
            for v, t in gens:
                prod = tuple(map(tuple, (np.array(t, dtype=np.uint8) @ ma) % 2))
                if prod not in words:
                    words[prod] = (v,) + words[m]
                    nxt.append(prod)
        frontier = nxt
    assert len(words) == 720
    return words


def lift_mod2_class(sigma, c: int) -> np.ndarray:
    """An integer symplectic matrix congruent to the identity mod c (c odd)
    whose reduction mod 2 is the given element of Sp4(F_2)."""
    if c % 2 == 0:
        raise ValueError("the congruence level must be odd")
    key = tuple(map(tuple, (np.asarray(sigma, dtype=np.int64) % 2).astype(np.uint8)))
    words = _transvection_words()
    if key not in words:
        raise ValueError("matrix is not symplectic mod 2")
    out = identity4()
    for v in words[key]:
        out = out @ transvection(v, c)
    return out


def subgroup_generated_mod2(samples, limit: int = 721):
    """Closure of the mod-2 reductions under multiplication."""
    gens = []
    for s in samples:
        n = (np.asarray(s, dtype=object) % 2).astype(np.uint8)
        gens.append(n)
    seen = {tuple(map(tuple, np.eye(4, dtype=np.uint8)))}
    frontier = list(seen)
    while frontier and len(seen) < limit:
        nxt = []
        for m in frontier:
            ma = np.array(m, dtype=np.uint8)
            for g in gens:
                prod = tuple(map(tuple, (g @ ma) % 2))
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return seen


def stabilizer_element_mod2(parity: str, avoid_other: bool = True):
    """A fixed element of the mod-2 stabilizer of the reference odd (resp.
    even) characteristic that does not stabilize the other reference."""
    want, avoid = (REF_ODD, REF_EVEN) if parity == "odd" else (REF_EVEN, REF_ODD)
    for g in sp4f2_enumerate():
        ga = np.array(g, dtype=np.int64)
        if char_action(ga, want) != want:
            continue
        if avoid_other and char_action(ga, avoid) == avoid:
            continue
        return ga
    raise RuntimeError("no stabilizer element found")
