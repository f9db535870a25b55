"""Universal quadric matrices on projective eigenspaces and their rank loci.

The two families of matrices of quadrics live on P^(2d) and P^(2d-1)
respectively; restricted to the anti-invariant eigenspace of the standard
involution x_i -> x_(-i) they become exactly antisymmetric, and the loci
where the rank drops are cut out by pfaffians of principal minors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groebner import Ideal
from .poly import QQ, Polynomial, Ring, parse_poly, xring
from .polymat import (
    NotAntisymmetricError,
    PolyMatrix,
    check_antisymmetric,
    kernel_pfaffians,
    pfaffian,
    principal_pfaffians,
)


def ambient_ring(n: int) -> Ring:
    return xring(n, QQ, prefix="x", start=0)


def build_Rd(d: int) -> PolyMatrix:
    """The (d+1) x (2d+1) matrix with entry (i, j) = x_(j+i) * x_(j-i).

    Indices are taken modulo 2d+1; row 0 is the vector of squares.
    """
    if d < 2:
        raise ValueError("need d >= 2")
    n = 2 * d + 1
    ring = ambient_ring(n)
    gens = ring.gens()
    rows = []
    for i in range(d + 1):
        rows.append([gens[(j + i) % n] * gens[(j - i) % n] for j in range(2 * d + 1)])
    return PolyMatrix(rows)


def build_Md(d: int) -> PolyMatrix:
    """The d x d matrix with entry (i,j) = x_(i+j) y_(i-j) + x_(i+j+d) y_(i-j+d),
    indices modulo 2d."""
    if d < 2:
        raise ValueError("need d >= 2")
    n = 2 * d
    names = [f"x{i}" for i in range(n)] + [f"y{i}" for i in range(n)]
    ring = Ring(names, QQ)
    x = [ring.gen(i) for i in range(n)]
    y = [ring.gen(n + i) for i in range(n)]
    rows = []
    for i in range(d):
        row = []
        for j in range(d):
            row.append(
                x[(i + j) % n] * y[(i - j) % n] + x[(i + j + d) % n] * y[(i - j + d) % n]
            )
        rows.append(row)
    return PolyMatrix(rows)


def specialize_xy(m: PolyMatrix, x_shift: int = 0, y_shift: int = 0) -> PolyMatrix:
    """Shift variable indices: x_k -> x_(k - x_shift), y_k -> y_(k - y_shift)."""
    ring = m.ring
    n = ring.nvars // 2
    images = {}
    for k in range(n):
        images[k] = ring.gen((k - x_shift) % n)
        images[n + k] = ring.gen(n + (k - y_shift) % n)
    return m.map(lambda p: p.substitute(images))


def diagonal_xx(m: PolyMatrix) -> PolyMatrix:
    """Substitute y -> x, landing in the ring of the x variables only."""
    ring = m.ring
    n = ring.nvars // 2
    target = ambient_ring(n)
    images = {}
    for k in range(n):
        images[k] = target.gen(k)
        images[n + k] = target.gen(k)
    return m.map(lambda p: p.substitute(images))


@dataclass
class RestrictedCoordinates:
    """Substitution data for the anti-invariant eigenspace in ambient size n."""

    ambient: int
    survivors: tuple
    ring: Ring
    images: dict  # ambient variable index -> Polynomial over self.ring

    @staticmethod
    def minus(n: int) -> "RestrictedCoordinates":
        if n % 2 == 1:
            m = (n - 1) // 2
        else:
            m = n // 2 - 1
        names = [f"x{i}" for i in range(1, m + 1)]
        ring = Ring(names, QQ)
        gens = ring.gens()
        images = {0: ring.zero()}
        for i in range(1, m + 1):
            images[i] = gens[i - 1]
            images[n - i] = -gens[i - 1]
        if n % 2 == 0:
            images[n // 2] = ring.zero()
        return RestrictedCoordinates(n, tuple(names), ring, images)


def restrict_minus(obj, n: int):
    """Apply the anti-invariant substitution in ambient size n.

    Polynomials are substituted directly.  A (d+1) x (2d+1) quadric matrix
    additionally has its duplicated columns dropped (column j equals column
    n-j on the eigenspace) and the leftmost square block is returned; the
    result must come out exactly antisymmetric.
    """
    coords = RestrictedCoordinates.minus(n)
    if isinstance(obj, Polynomial):
        return obj.substitute(coords.images)
    if not isinstance(obj, PolyMatrix):
        raise TypeError("expected Polynomial or PolyMatrix")
    sub = obj.map(lambda p: p.substitute(coords.images))
    if obj.cols == 2 * obj.rows - 1 and n == obj.cols:
        d = obj.rows - 1
        for j in range(1, d + 1):
            for i in range(d + 1):
                if not (sub.entries[i][j] - sub.entries[i][n - j]).is_zero():
                    raise NotAntisymmetricError(i, j)
        block = sub.submatrix(range(d + 1), range(d + 1))
        check_antisymmetric(block)
        return block
    if sub.rows == sub.cols:
        check_antisymmetric(sub)
    return sub


def rank_locus_ideal(a: PolyMatrix, target_rank: int) -> Ideal:
    """Ideal of pfaffians of all principal (target_rank+2)-minors of a."""
    if target_rank % 2 != 0 or target_rank >= a.rows:
        raise ValueError("target rank must be even and smaller than the size")
    gens = []
    seen = set()
    for _, pf in principal_pfaffians(a, target_rank + 2):
        if pf.is_zero():
            continue
        norm = pf.primitive() if a.ring.field == QQ else pf.monic()
        key = frozenset(norm.terms.items())
        if key not in seen:
            seen.add(key)
            gens.append(norm)
    return Ideal(a.ring, gens)


def steinerian_vector(a: PolyMatrix):
    """Kernel map components of an odd antisymmetric matrix of quadrics."""
    return kernel_pfaffians(a)


# ---------------------------------------------------------------------------
# the named catalog
# ---------------------------------------------------------------------------


@dataclass
class LocusRecord:
    """One verifiable claim: a construction plus its expected invariants."""

    name: str
    anchor: str
    expected: dict
    ideal: Ideal | None = None
    data: dict = field(default_factory=dict)

    def to_json(self) -> str:
        import json

        return json.dumps(
            {
                "name": self.name,
                "anchor": self.anchor,
                "expected": {k: str(v) for k, v in sorted(self.expected.items())},
                "ideal": None if self.ideal is None else json.loads(self.ideal.to_json()),
            },
            sort_keys=True,
        )


# frozen text of the printed forms (typo corrections are noted where made;
# see the check reports)

D9_KERNEL_COMPONENTS = [
    "-x1^2*x2*x3+x2^2*x3*x4+x1*x3*x4^2",
    "x1*x2^3-x2*x3^3+x1*x4^3",       # printed with x1*x3^2 in place of x1*x2^3
    "-x1^3*x2+x3^3*x4+x2*x4^3",
    "x1^2*x2*x3-x2^2*x3*x4-x1*x3*x4^2",
    "x1*x3^3-x1^3*x4-x2^3*x4",       # printed with x3^2*x4 in place of x2^3*x4
]
D9_TYPO_NOTE = (
    "components 1 and 4 as printed are non-homogeneous (x1*x3^2 for x1*x2^3, "
    "x3^2*x4 for x2^3*x4); the kernel pfaffians are the stored forms"
)

D12_PFAFFIAN = "2*(x1*x3^3+x3^3*x5-x2^3*x4-x2*x4^3+x1^3*x5+x1*x5^3)"

D13_PFAFFIANS = [
    "-x1^2*x3^3*x4+x1*x2^3*x4^2-x1^4*x4*x5+x1*x2*x3*x4^2*x5-x2^3*x3*x5^2+x1*x3*x5^4"
    "-x2*x3*x4^3*x6+x1^2*x2^2*x5*x6+x3^4*x5*x6-x1*x4^3*x5*x6-x1^2*x3*x5^2*x6"
    "-x2^2*x4*x5^2*x6+x1^3*x3*x6^2+x1*x2^2*x4*x6^2+x2*x3^2*x4*x6^2",
    "-x1*x2*x3^4+x2^4*x3*x4+x1*x3^2*x4^3-x1^3*x2*x3*x5-x2^2*x3^2*x4*x5-x2*x4^4*x5"
    "+x3^3*x4*x5^2+x1^2*x2*x3*x4*x6+x1^3*x4*x5*x6+x1*x4^2*x5^2*x6-x1*x2^2*x5*x6^2"
    "-x2*x3^2*x5*x6^2+x1*x3*x5^2*x6^2-x1^2*x3*x6^3-x2^2*x4*x6^3",
    "-x1^2*x2*x3^3+x1*x2^4*x4-x1^4*x2*x5+x1^2*x2*x4*x5^2+x1*x3^2*x4*x5^2-x2*x4^2*x5^3"
    "-x1^2*x3^2*x4*x6-x2^2*x3*x4^2*x6+x3^2*x4^2*x5*x6-x2^3*x5^2*x6+x1*x5^4*x6"
    "-x1*x2*x3*x5*x6^2+x3^3*x5*x6^2+x2*x3*x4*x6^3+x1*x4*x5*x6^3",
]
D13_TYPO_NOTE = (
    "second component as printed has the degree-4 term x2*x4^2*x5; the 6x6 "
    "pfaffian has x2*x4^4*x5 (one exponent dropped in print)"
)

D14_F = (
    "x1*x3^3-x2^3*x4+x1*x3*x4^2+x1^3*x5-x2^2*x3*x5-x2*x4*x5^2-x3*x5^3"
    "+x1^2*x2*x6+x3^2*x4*x6+x4^3*x6+x1*x5*x6^2+x2*x6^3"
)
D14_G = "x1*x3*x4^2-x2^2*x3*x5-x2*x4*x5^2+x1^2*x2*x6+x3^2*x4*x6+x1*x5*x6^2"
D14_TYPO_NOTE = (
    "printed f carries -x1*x3*x4^2 and the degree-3 term x1*x2*x6; the block "
    "pfaffian has +x1*x3*x4^2 and x1^2*x2*x6"
)

D8_QUADRIC = "y1*y3*(x0^2+x4^2)-y2^2*(x1*x7+x3*x5)+(y1^2+y3^2)*x2*x6"
D8_QUADRIC_SHIFTS = [
    "y1*y3*(x1^2+x5^2)-y2^2*(x2*x0+x4*x6)+(y1^2+y3^2)*x3*x7",
    "y1*y3*(x2^2+x6^2)-y2^2*(x3*x1+x5*x7)+(y1^2+y3^2)*x4*x0",
    "y1*y3*(x3^2+x7^2)-y2^2*(x4*x2+x6*x0)+(y1^2+y3^2)*x5*x1",
]
D8_DISCRIMINANT = "2*w1^4-w0^3*w2-w0*w2^3"
D8_PULLBACK = "2*y2^8-14*y1^5*y3^3-14*y1^3*y3^5-2*y1^7*y3-2*y1*y3^7"


def _d8_rings():
    ring_xy = Ring(["y1", "y2", "y3"] + [f"x{i}" for i in range(8)], QQ)
    ring_y = Ring(["y1", "y2", "y3"], QQ)
    ring_w = Ring(["w0", "w1", "w2"], QQ)
    return ring_xy, ring_y, ring_w


def d8_quadrics():
    """The four invariant quadrics cutting the special (2,2,2,2) fibers."""
    ring_xy, _, _ = _d8_rings()
    base = parse_poly(D8_QUADRIC, ring_xy)
    out = [base]
    for k in range(1, 4):
        images = {i: ring_xy.gen(i) for i in range(3)}
        for i in range(8):
            images[3 + i] = ring_xy.gen(3 + (i + k) % 8)
        out.append(base.substitute(images))
    return out


def d8_quotient_pullback():
    """Substitute the degree-4 quotient map into the plane discriminant."""
    _, ring_y, ring_w = _d8_rings()
    y1, y2, y3 = ring_y.gens()
    delta = parse_poly(D8_DISCRIMINANT, ring_w)
    images = {0: 2 * y1 * y3, 1: -(y2 * y2), 2: y1 * y1 + y3 * y3}
    return delta.substitute(images), parse_poly(D8_PULLBACK, ring_y)


def d8_degeneration_ideal() -> Ideal:
    """The quadrics specialized at the distinguished boundary point
    [0:0:1]: a square-free monomial ideal."""
    ring_x = ambient_ring(8)
    out = []
    for q in d8_quadrics():
        images = {0: ring_x.zero(), 1: ring_x.zero(), 2: ring_x.one()}
        for i in range(8):
            images[3 + i] = ring_x.gen(i)
        out.append(q.substitute(images).primitive())
    return Ideal(ring_x, out)


def catalog(case: str):
    """LocusRecords for one of the cases d8..d16 (even) / d9..d13 (odd)."""
    builders = {
        "d8": _catalog_d8,
        "d9": _catalog_d9,
        "d10": _catalog_d10,
        "d11": _catalog_d11,
        "d12": _catalog_d12,
        "d13": _catalog_d13,
        "d14": _catalog_d14,
        "d16": _catalog_d16,
    }
    if case not in builders:
        raise KeyError(f"unknown case {case!r}")
    return builders[case]()


def _catalog_d8():
    quadrics = d8_quadrics()
    pullback, expected_pullback = d8_quotient_pullback()
    _, ring_y, _ = _d8_rings()
    delta_prime = parse_poly(D8_PULLBACK, ring_y)
    return [
        LocusRecord(
            name="d8.quadrics",
            anchor="the four shifted invariant quadrics of the (1,8) family",
            expected={"texts": [D8_QUADRIC] + D8_QUADRIC_SHIFTS},
            data={"polys": quadrics},
        ),
        LocusRecord(
            name="d8.delta-pullback",
            anchor="conic-bundle discriminant pulled back through the degree-4 quotient",
            expected={"pullback": D8_PULLBACK, "degree": 8},
            data={"computed": pullback, "target": expected_pullback},
        ),
        LocusRecord(
            name="d8.delta-prime-smooth",
            anchor="the degree-8 discriminant curve is smooth",
            expected={"singular_locus": "empty"},
            ideal=Ideal(ring_y, [delta_prime]),
        ),
        LocusRecord(
            name="d8.degeneration",
            anchor="the boundary fiber is a union of 16 coordinate 3-spaces",
            expected={"minimal_primes": 16, "pairs": [("x2", "x6"), ("x3", "x7"), ("x0", "x4"), ("x1", "x5")]},
            ideal=d8_degeneration_ideal(),
        ),
    ]


def _catalog_d9():
    t4 = restrict_minus(build_Rd(4), 9)
    ys = steinerian_vector(t4)
    ring = t4.ring
    return [
        LocusRecord(
            name="d9.steinerian",
            anchor="kernel map of the 5x5 restriction: quartic components, "
            "image inside a hyperplane, dominant of degree 6",
            expected={
                "components": D9_KERNEL_COMPONENTS,
                "linear_relation": "y0+y3",
                "coefficient_rank": 4,
                "fiber_degree": 6,
            },
            data={"matrix": t4, "kernel": ys, "typo_note": D9_TYPO_NOTE},
        )
    ]


def _catalog_d10():
    a = restrict_minus(diagonal_xx(build_Md(5)), 10)
    return [
        LocusRecord(
            name="d10.matrix",
            anchor="odd-size antisymmetric restriction: determinant never maximal",
            expected={"determinant": 0},
            data={"matrix": a},
        )
    ]


def _catalog_d11():
    t5 = restrict_minus(build_Rd(5), 11)
    pf = pfaffian(t5)
    d1 = rank_locus_ideal(t5, 2)
    return [
        LocusRecord(
            name="d11.sextic",
            anchor="sextic hypersurface cut by the degenerate 6x6 restriction",
            expected={"pfaffian_degree": 6, "hypersurface": (3, 6)},
            ideal=Ideal(t5.ring, [pf]),
            data={"matrix": t5, "pfaffian": pf},
        ),
        LocusRecord(
            name="d11.rank2-curve",
            anchor="rank-2 locus: curve of degree 20 and arithmetic genus 26",
            expected={"dim": 1, "degree": 20, "genus": 26},
            ideal=d1,
        ),
    ]


def _catalog_d12():
    m = restrict_minus(diagonal_xx(build_Md(6)), 12)
    block = m.submatrix(range(4), range(4))
    pf = pfaffian(block)
    ring = m.ring
    return [
        LocusRecord(
            name="d12.pfaffian",
            anchor="pfaffian of the upper-left 4x4 block of the restricted matrix",
            expected={"text": D12_PFAFFIAN},
            data={"block": block, "pfaffian": pf, "target": parse_poly(D12_PFAFFIAN, ring)},
        )
    ]


def _catalog_d13():
    t6 = restrict_minus(build_Rd(6), 13)
    pfs = dict(principal_pfaffians(t6, 6))
    ring = t6.ring
    f1 = pfs[(0, 1, 2, 3, 4, 5)]
    f2 = pfs[(0, 1, 2, 3, 4, 6)]
    f3 = pfs[(0, 1, 2, 3, 5, 6)]
    all_seven = [q for q in pfs.values() if not q.is_zero()]
    return [
        LocusRecord(
            name="d13.three-pfaffians",
            anchor="threefold of degree 21 cut by three sextic pfaffians",
            expected={
                "texts": D13_PFAFFIANS,
                "dim": 3,
                "degree": 21,
                "full_ideal_same_hilbert_polynomial": True,
            },
            ideal=Ideal(ring, [f1, f2, f3]),
            data={
                "three": [f1, f2, f3],
                "seven": all_seven,
                "typo_note": D13_TYPO_NOTE,
            },
        )
    ]


def _catalog_d14():
    m7 = build_Md(7)
    a = restrict_minus(diagonal_xx(m7), 14)
    b = restrict_minus(diagonal_xx(specialize_xy(m7, 0, 7)), 14)
    f = pfaffian(a.submatrix(range(4), range(4)))
    g = pfaffian(b.submatrix(range(4), range(4))).primitive()
    ring = a.ring
    return [
        LocusRecord(
            name="d14.pfaffians",
            anchor="complete intersection of two quartic pfaffians: threefold "
            "of degree 16 singular along a curve of degree 24",
            expected={
                "f": D14_F,
                "g": D14_G,
                "ci": (3, 16),
                "singular": (1, 24),
            },
            ideal=Ideal(ring, [f, g]),
            data={"f": f, "g": g, "typo_note": D14_TYPO_NOTE},
        )
    ]


def _catalog_d16():
    a8 = restrict_minus(diagonal_xx(build_Md(8)), 16)
    d1 = rank_locus_ideal(a8, 2)
    return [
        LocusRecord(
            name="d16.rank2",
            anchor="rank-2 locus of the 8x8 restriction: threefold of degree 40",
            expected={"dim": 3, "degree": 40},
            ideal=d1,
            data={"matrix": a8},
        )
    ]
