"""Finite Heisenberg groups and their exact Schrödinger matrices.

Group elements carry a root-of-unity phase stored as an integer exponent
over the fixed modulus lcm(2, d1, d2), so every identity used here is an
integer congruence.  The representation acts on the delta-function basis
indexed by Z/d1 x Z/d2 through monomial matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


def _lcm(a, b):
    return a * b // gcd(a, b)


@dataclass(frozen=True)
class PolarizationType:
    d1: int
    d2: int

    def __post_init__(self):
        if self.d1 < 1 or self.d2 % self.d1 != 0:
            raise ValueError("need d1 >= 1 and d1 | d2")

    @property
    def order(self) -> int:
        return self.d1 * self.d2

    @property
    def phase_modulus(self) -> int:
        return _lcm(2, _lcm(self.d1, self.d2))

    @property
    def odd_count(self) -> int:
        return (self.d1 % 2) + (self.d2 % 2)

    def parity_type(self) -> str:
        return {2: "odd", 1: "mixed", 0: "even"}[self.odd_count]

    def indices(self):
        return [(i, j) for i in range(self.d1) for j in range(self.d2)]


@dataclass(frozen=True)
class Phase:
    """exp(2 pi i k / m) with a fixed modulus m per polarization type."""

    k: int
    m: int

    def __post_init__(self):
        object.__setattr__(self, "k", self.k % self.m)

    def __mul__(self, other: "Phase") -> "Phase":
        if other.m != self.m:
            raise ValueError("phase modulus mismatch")
        return Phase(self.k + other.k, self.m)

    def inverse(self) -> "Phase":
        return Phase(-self.k, self.m)

    def __pow__(self, n: int) -> "Phase":
        return Phase(self.k * n, self.m)

    def is_one(self) -> bool:
        return self.k == 0

    @staticmethod
    def one(m: int) -> "Phase":
        return Phase(0, m)


@dataclass(frozen=True)
class KElement:
    """Element of (Z^2/D) + (Z^2/D): translation part (a1,a2), character
    part (b1,b2)."""

    D: PolarizationType
    a1: int
    a2: int
    b1: int
    b2: int

    def __post_init__(self):
        d1, d2 = self.D.d1, self.D.d2
        object.__setattr__(self, "a1", self.a1 % d1)
        object.__setattr__(self, "a2", self.a2 % d2)
        object.__setattr__(self, "b1", self.b1 % d1)
        object.__setattr__(self, "b2", self.b2 % d2)

    def __add__(self, other: "KElement") -> "KElement":
        if other.D != self.D:
            raise ValueError("polarization type mismatch")
        return KElement(self.D, self.a1 + other.a1, self.a2 + other.a2,
                        self.b1 + other.b1, self.b2 + other.b2)

    def __neg__(self) -> "KElement":
        return KElement(self.D, -self.a1, -self.a2, -self.b1, -self.b2)

    def is_zero(self) -> bool:
        return self.a1 == 0 and self.a2 == 0 and self.b1 == 0 and self.b2 == 0

    def double_is_zero(self) -> bool:
        return (2 * self.a1) % self.D.d1 == 0 and (2 * self.a2) % self.D.d2 == 0 \
            and (2 * self.b1) % self.D.d1 == 0 and (2 * self.b2) % self.D.d2 == 0


def ed_pairing(x: KElement, y: KElement) -> Phase:
    """The alternating pairing, bimultiplicative extension of the basis
    values exp(-2 pi i / d_alpha)."""
    if x.D != y.D:
        raise ValueError("polarization type mismatch")
    D = x.D
    m = D.phase_modulus
    k = (x.a1 * y.b1 - x.b1 * y.a1) * (m // D.d1) \
        + (x.a2 * y.b2 - x.b2 * y.a2) * (m // D.d2)
    return Phase(-k, m)


def _pairing_ab(D: PolarizationType, a, b) -> Phase:
    """exp(-2 pi i (a1 b1/d1 + a2 b2/d2)): the factor entering the group law."""
    m = D.phase_modulus
    k = a[0] * b[0] * (m // D.d1) + a[1] * b[1] * (m // D.d2)
    return Phase(-k, m)


@dataclass(frozen=True)
class HeisenbergElement:
    phase: Phase
    k: KElement

    @property
    def D(self) -> PolarizationType:
        return self.k.D


def heis_identity(D: PolarizationType) -> HeisenbergElement:
    return HeisenbergElement(Phase.one(D.phase_modulus), KElement(D, 0, 0, 0, 0))


def heis_element(D, phase_k=0, a1=0, a2=0, b1=0, b2=0) -> HeisenbergElement:
    return HeisenbergElement(Phase(phase_k, D.phase_modulus), KElement(D, a1, a2, b1, b2))


def heis_mul(h1: HeisenbergElement, h2: HeisenbergElement) -> HeisenbergElement:
    if h1.D != h2.D:
        raise ValueError("polarization type mismatch")
    D = h1.D
    tw = _pairing_ab(D, (h1.k.a1, h1.k.a2), (h2.k.b1, h2.k.b2))
    return HeisenbergElement(h1.phase * h2.phase * tw, h1.k + h2.k)


def heis_inv(h: HeisenbergElement) -> HeisenbergElement:
    D = h.D
    tw = _pairing_ab(D, (h.k.a1, h.k.a2), (h.k.b1, h.k.b2))
    return HeisenbergElement(h.phase.inverse() * tw, -h.k)


def generators(D: PolarizationType):
    """sigma1, sigma2, tau1, tau2 with unit phase."""
    return (
        heis_element(D, a1=1),
        heis_element(D, a2=1),
        heis_element(D, b1=1),
        heis_element(D, b2=1),
    )


class MonomialMatrix:
    """Square matrix with one phase entry per row and column.

    Column y holds its unique nonzero value phase[y] in row perm[y]; indices
    run over the flattened grid Z/d1 x Z/d2.
    """

    def __init__(self, D: PolarizationType, perm, phases):
        self.D = D
        self.size = D.order
        if len(perm) != self.size or len(phases) != self.size:
            raise ValueError("size mismatch")
        if sorted(perm) != list(range(self.size)):
            raise ValueError("not a permutation: some row repeats")
        self.perm = list(perm)
        self.phases = list(phases)

    @staticmethod
    def identity(D: PolarizationType) -> "MonomialMatrix":
        one = Phase.one(D.phase_modulus)
        return MonomialMatrix(D, list(range(D.order)), [one] * D.order)

    @staticmethod
    def scalar(D: PolarizationType, phase: Phase) -> "MonomialMatrix":
        return MonomialMatrix(D, list(range(D.order)), [phase] * D.order)

    def __mul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        if other.D != self.D:
            raise ValueError("polarization type mismatch")
        perm = [self.perm[other.perm[y]] for y in range(self.size)]
        phases = [self.phases[other.perm[y]] * other.phases[y] for y in range(self.size)]
        return MonomialMatrix(self.D, perm, phases)

    def inverse(self) -> "MonomialMatrix":
        perm = [0] * self.size
        phases = [None] * self.size
        for y in range(self.size):
            perm[self.perm[y]] = y
            phases[self.perm[y]] = self.phases[y].inverse()
        return MonomialMatrix(self.D, perm, phases)

    def __eq__(self, other):
        return (isinstance(other, MonomialMatrix) and other.D == self.D
                and other.perm == self.perm and other.phases == self.phases)

    def is_identity(self) -> bool:
        return self.perm == list(range(self.size)) and all(p.is_one() for p in self.phases)

    def as_scalar(self):
        """The phase t when the matrix is t * Identity, else None."""
        if self.perm != list(range(self.size)):
            return None
        first = self.phases[0]
        if all(p == first for p in self.phases):
            return first
        return None

    def fixed_point_trace(self) -> int:
        """Number of fixed basis vectors; requires unit phases on them."""
        t = 0
        for y in range(self.size):
            if self.perm[y] == y:
                if not self.phases[y].is_one():
                    raise ValueError("trace with nontrivial phases is not an integer")
                t += 1
        return t

    def commutator(self, other: "MonomialMatrix") -> "MonomialMatrix":
        return self * other * self.inverse() * other.inverse()


def _flat(D: PolarizationType, i, j) -> int:
    return (i % D.d1) * D.d2 + (j % D.d2)


def schrodinger_matrix(h: HeisenbergElement, D: PolarizationType | None = None) -> MonomialMatrix:
    """Exact monomial matrix of h on the delta basis.

    delta_(i,j) is sent to phase * e((i,j)-a, b) * delta_((i,j)-a), which
    reproduces the generator actions sigma1 d_(i,j) = d_(i-1,j) and
    tau1 d_(i,j) = xi1^(-i) d_(i,j).
    """
    if D is None:
        D = h.D
    if D != h.D:
        raise ValueError("polarization type mismatch")
    perm = [0] * D.order
    phases = [None] * D.order
    a = (h.k.a1, h.k.a2)
    b = (h.k.b1, h.k.b2)
    for i in range(D.d1):
        for j in range(D.d2):
            y = _flat(D, i, j)
            ti, tj = i - a[0], j - a[1]
            perm[y] = _flat(D, ti, tj)
            phases[y] = h.phase * _pairing_ab(D, (ti, tj), b)
    return MonomialMatrix(D, perm, phases)


def involution_matrix(D: PolarizationType) -> MonomialMatrix:
    """delta_(i,j) -> delta_(-i,-j); order two, trace = #2-torsion indices."""
    one = Phase.one(D.phase_modulus)
    perm = [0] * D.order
    for i in range(D.d1):
        for j in range(D.d2):
            perm[_flat(D, i, j)] = _flat(D, -i, -j)
    return MonomialMatrix(D, perm, [one] * D.order)


def two_torsion_count(D: PolarizationType) -> int:
    t1 = 2 if D.d1 % 2 == 0 else 1
    t2 = 2 if D.d2 % 2 == 0 else 1
    return t1 * t2


def eigenspace_dims(D: PolarizationType):
    """Dimensions (n_plus, n_minus) of the involution eigenspaces."""
    n = D.order
    t = two_torsion_count(D)
    return ((n + t) // 2, (n - t) // 2)


def eigenspace_basis(D: PolarizationType, sign: int):
    """Vectors delta_x +/- delta_(-x) as dicts {(i,j): coefficient}."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    seen = set()
    basis = []
    for i in range(D.d1):
        for j in range(D.d2):
            x = (i, j)
            mx = ((-i) % D.d1, (-j) % D.d2)
            if x in seen or mx in seen:
                continue
            seen.add(x)
            if x == mx:
                if sign == 1:
                    basis.append({x: 1})
            else:
                basis.append({x: 1, mx: sign})
    return basis


def section_dims(D: PolarizationType, bundle_parity: str):
    """(h_plus, h_minus) for a symmetric bundle of the given parity.

    For both d_i even the parity argument is irrelevant.
    """
    if bundle_parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    n = D.order
    t = D.parity_type()
    if t == "odd":
        hp, hm = (n + 1) // 2, (n - 1) // 2
    elif t == "mixed":
        hp, hm = n // 2 + 1, n // 2 - 1
    else:
        return (n // 2 + 2, n // 2 - 2)
    if bundle_parity == "odd":
        hp, hm = hm, hp
    return (hp, hm)


def a2_value_distribution(D: PolarizationType, bundle_parity: str):
    """(#A[2]^+, #A[2]^-) for a symmetric bundle admitting a symmetric
    structure: (10,6)/(6,10) in the odd case, (12,4)/(4,12) mixed,
    (16,0) always in the even case."""
    t = D.parity_type()
    if t == "even":
        return (16, 0)
    if t == "odd":
        return (10, 6) if bundle_parity == "even" else (6, 10)
    return (12, 4) if bundle_parity == "even" else (4, 12)


def lefschetz_consistency(D: PolarizationType, bundle_parity: str):
    """Fixed-point count consistency: returns (h+ - h-, (n+ - n-)/4);
    the two entries must agree."""
    hp, hm = section_dims(D, bundle_parity)
    np_, nm = a2_value_distribution(D, bundle_parity)
    if (np_ - nm) % 4 != 0:
        raise ValueError("2-torsion value distribution not divisible by 4")
    return (hp - hm, (np_ - nm) // 4)


class GammaZ:
    """The phase-twisting automorphism attached to z: fixes the center and
    the K-part, multiplies the phase by the pairing with z."""

    def __init__(self, z: KElement):
        self.z = z

    def apply(self, h: HeisenbergElement) -> HeisenbergElement:
        if h.D != self.z.D:
            raise ValueError("polarization type mismatch")
        return HeisenbergElement(h.phase * ed_pairing(self.z, h.k), h.k)

    def commutes_with_involution(self) -> bool:
        return self.z.double_is_zero()


def gamma_z(z: KElement) -> GammaZ:
    return GammaZ(z)


def involution_on_heis(h: HeisenbergElement) -> HeisenbergElement:
    """The extended-group involution: fixes the phase, negates the K-part."""
    return HeisenbergElement(h.phase, -h.k)


def symmetric_counts(g: int, D: PolarizationType):
    """(number of symmetric bundles, symmetric structures per level datum).

    s counts the odd invariant factors; bundles = 2^(2s) and structures
    per level = 2^(2(g-s)) = #2-torsion of the kernel lattice.
    """
    if g not in (1, 2):
        raise ValueError("only g = 1, 2 supported")
    if g == 1:
        s = D.d2 % 2  # single invariant factor d
        return (2 ** (2 * s), 2 ** (2 * (1 - s)))
    s = D.odd_count
    return (2 ** (2 * s), 2 ** (2 * (2 - s)))
