import random

import pytest

from symtheta.groebner import Ideal
from symtheta.poly import QQ, GF, Ring, parse_poly
from symtheta.polymat import PolyMatrix, pfaffian
from symtheta.ranklocus import (
    LocusRecord,
    build_Md,
    build_Rd,
    catalog,
    diagonal_xx,
    rank_locus_ideal,
    restrict_minus,
    specialize_xy,
    steinerian_vector,
)

PRINTED_R4_RESTRICTED = [
    ["0", "x1^2", "x2^2", "x3^2", "x4^2"],
    ["-x1^2", "0", "x1*x3", "x2*x4", "-x3*x4"],
    ["-x2^2", "-x1*x3", "0", "-x1*x4", "-x2*x3"],
    ["-x3^2", "-x2*x4", "x1*x4", "0", "-x1*x2"],
    ["-x4^2", "x3*x4", "x2*x3", "x1*x2", "0"],
]

PRINTED_R5_RESTRICTED = [
    ["0", "x1^2", "x2^2", "x3^2", "x4^2", "x5^2"],
    ["-x1^2", "0", "x1*x3", "x2*x4", "x3*x5", "-x4*x5"],
    ["-x2^2", "-x1*x3", "0", "x1*x5", "-x2*x5", "-x3*x4"],
    ["-x3^2", "-x2*x4", "-x1*x5", "0", "-x1*x4", "-x2*x3"],
    ["-x4^2", "-x3*x5", "x2*x5", "x1*x4", "0", "-x1*x2"],
    ["-x5^2", "x4*x5", "x3*x4", "x2*x3", "x1*x2", "0"],
]


def test_build_Rd_entries():
    r4 = build_Rd(4)
    ring = r4.ring
    assert r4.rows == 5 and r4.cols == 9
    assert r4[1, 0] == parse_poly("x1*x8", ring)
    for j in range(9):
        assert r4[0, j] == ring.gen(j) * ring.gen(j)
    r5 = build_Rd(5)
    assert r5[2, 0] == parse_poly("x2*x9", r5.ring)


def test_restricted_matrices_match_stored_forms():
    t4 = restrict_minus(build_Rd(4), 9)
    ring4 = t4.ring
    for i in range(5):
        for j in range(5):
            assert t4[i, j] == parse_poly(PRINTED_R4_RESTRICTED[i][j], ring4)
    t5 = restrict_minus(build_Rd(5), 11)
    ring5 = t5.ring
    for i in range(6):
        for j in range(6):
            assert t5[i, j] == parse_poly(PRINTED_R5_RESTRICTED[i][j], ring5)


def test_restrict_minus_polynomial():
    ring = Ring([f"x{i}" for i in range(9)], QQ)
    p = ring.gen(2) - ring.gen(7)  # x2 - x7 restricts to 2 x2
    out = restrict_minus(p, 9)
    assert out == parse_poly("2*x2", out.ring)


def test_build_Md_entries_and_blocks():
    m6 = build_Md(6)
    ring = m6.ring
    assert m6[0, 0] == parse_poly("x0*y0+x6*y6", ring)
    a = restrict_minus(diagonal_xx(m6), 12)
    ring_a = a.ring
    assert a[0, 3] == parse_poly("-2*x3^2", ring_a)
    block = a.submatrix(range(4), range(4))
    assert pfaffian(block) == parse_poly(
        "2*(x1*x3^3+x3^3*x5-x2^3*x4-x2*x4^3+x1^3*x5+x1*x5^3)", ring_a
    )


def test_restricted_diagonals_antisymmetric():
    for d in range(2, 11):
        a = restrict_minus(diagonal_xx(build_Md(d)), 2 * d)
        assert a.is_antisymmetric()
    for d in range(2, 7):
        t = restrict_minus(build_Rd(d), 2 * d + 1)
        assert t.is_antisymmetric()


def test_kernel_components():
    t4 = restrict_minus(build_Rd(4), 9)
    ys = steinerian_vector(t4)
    ring = t4.ring
    assert ys[0] == parse_poly("-x1^2*x2*x3+x2^2*x3*x4+x1*x3*x4^2", ring)
    assert (ys[0] + ys[3]).is_zero()
    assert all(p.is_zero() for p in t4.matvec(ys))
    assert all(y.total_degree() == 4 for y in ys)


def test_kernel_identity_on_seven_by_seven():
    t6 = restrict_minus(build_Rd(6), 13)
    ys = steinerian_vector(t6)
    assert all(p.is_zero() for p in t6.matvec(ys))


def test_rank_locus_unit_ideal_for_generic_constant():
    ring = Ring(["x"], GF(31991))
    rng = random.Random(0)
    rows = [[ring.zero() for _ in range(4)] for _ in range(4)]
    vals = [[0, 1, 2, 3], [-1, 0, 5, 7], [-2, -5, 0, 11], [-3, -7, -11, 0]]
    for i in range(4):
        for j in range(4):
            rows[i][j] = ring.const(vals[i][j])
    ideal = rank_locus_ideal(PolyMatrix(rows), 2)
    assert ideal.hilbert_summary().proj_dimension == -1


def test_rank_locus_validation():
    t5 = restrict_minus(build_Rd(5), 11)
    with pytest.raises(ValueError):
        rank_locus_ideal(t5, 3)
    with pytest.raises(ValueError):
        rank_locus_ideal(t5, 6)


def test_specialize_xy_shift():
    m5 = build_Md(5)
    shifted = specialize_xy(m5, 1, 0)
    ring = m5.ring
    # entry (0,0): x_{i+j} -> x_{i+j-1}
    assert shifted[0, 0] == parse_poly("x9*y0+x4*y5", ring)


def test_catalog_cases_present():
    names = {
        "d8": 4, "d9": 1, "d10": 1, "d11": 2, "d12": 1, "d13": 1, "d14": 1, "d16": 1,
    }
    for case, count in names.items():
        recs = catalog(case)
        assert len(recs) == count
        assert all(isinstance(r, LocusRecord) for r in recs)
        assert all(r.anchor for r in recs)
    with pytest.raises(KeyError):
        catalog("d15")


def test_catalog_serializable_ideals():
    import json

    for case in ("d9", "d11", "d13", "d14", "d16", "d8"):
        for rec in catalog(case):
            payload = json.loads(rec.to_json())
            assert payload["name"] == rec.name and payload["anchor"]
            if rec.ideal is not None:
                back = Ideal.from_json(rec.ideal.to_json())
                assert back.generators == rec.ideal.generators
                assert payload["ideal"]["generators"]
            else:
                assert payload["ideal"] is None
