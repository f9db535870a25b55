import random

import pytest

from symtheta.heisenberg import (
    KElement,
    Phase,
    PolarizationType,
    a2_value_distribution,
    ed_pairing,
    eigenspace_basis,
    eigenspace_dims,
    gamma_z,
    generators,
    heis_element,
    heis_identity,
    heis_inv,
    heis_mul,
    involution_matrix,
    involution_on_heis,
    lefschetz_consistency,
    schrodinger_matrix,
    section_dims,
    symmetric_counts,
)


def _rand_element(D, rng):
    return heis_element(
        D,
        rng.randrange(D.phase_modulus),
        rng.randrange(D.d1),
        rng.randrange(D.d2),
        rng.randrange(D.d1),
        rng.randrange(D.d2),
    )


def test_pairing_basis_values():
    D = PolarizationType(1, 3)
    f2 = KElement(D, 0, 1, 0, 0)
    f4 = KElement(D, 0, 0, 0, 1)
    m = D.phase_modulus
    assert ed_pairing(f2, f4) == Phase(-(m // 3), m)
    assert ed_pairing(f4, f2) == Phase(m // 3, m)


def test_pairing_alternating_and_antisymmetric():
    D = PolarizationType(2, 4)
    rng = random.Random(0)
    for _ in range(50):
        x = KElement(D, rng.randrange(2), rng.randrange(4), rng.randrange(2), rng.randrange(4))
        y = KElement(D, rng.randrange(2), rng.randrange(4), rng.randrange(2), rng.randrange(4))
        assert ed_pairing(x, x).is_one()
        assert (ed_pairing(x, y) * ed_pairing(y, x)).is_one()


def test_pairing_bimultiplicative():
    D = PolarizationType(1, 3)
    rng = random.Random(1)
    for _ in range(50):
        x = KElement(D, 0, rng.randrange(3), 0, rng.randrange(3))
        y = KElement(D, 0, rng.randrange(3), 0, rng.randrange(3))
        z = KElement(D, 0, rng.randrange(3), 0, rng.randrange(3))
        assert ed_pairing(x + y, z) == ed_pairing(x, z) * ed_pairing(y, z)
        assert ed_pairing(x, y + z) == ed_pairing(x, y) * ed_pairing(x, z)


def test_group_law():
    D = PolarizationType(1, 3)
    rng = random.Random(2)
    e = heis_identity(D)
    for _ in range(30):
        h1, h2, h3 = (_rand_element(D, rng) for _ in range(3))
        assert heis_mul(h1, e) == h1
        assert heis_mul(e, h1) == h1
        assert heis_mul(heis_mul(h1, h2), h3) == heis_mul(h1, heis_mul(h2, h3))
        assert heis_mul(h1, heis_inv(h1)) == e
        # commutator phase realizes the pairing
        comm = heis_mul(heis_mul(h1, h2), heis_mul(heis_inv(h1), heis_inv(h2)))
        assert comm.k.is_zero()
        assert comm.phase == ed_pairing(h1.k, h2.k)


def test_generator_order_twist():
    D = PolarizationType(1, 3)
    _, s2, _, t2 = generators(D)
    st = heis_mul(s2, t2)
    ts = heis_mul(t2, s2)
    m = D.phase_modulus
    assert st.phase * ts.phase.inverse() == Phase(-(m // 3), m)


def test_schrodinger_generators_shift_and_diagonal():
    D = PolarizationType(1, 5)
    _, s2, _, t2 = generators(D)
    ms = schrodinger_matrix(s2)
    # cyclic shift: column (0, j) maps to row (0, j-1)
    for j in range(5):
        assert ms.perm[j] == (j - 1) % 5
        assert ms.phases[j].is_one()
    mt = schrodinger_matrix(t2)
    m = D.phase_modulus
    for j in range(5):
        assert mt.perm[j] == j
        assert mt.phases[j] == Phase(-j * (m // 5), m)


def test_central_element_is_scalar():
    D = PolarizationType(2, 2)
    t = heis_element(D, 3)
    mat = schrodinger_matrix(t)
    assert mat.as_scalar() == Phase(3, D.phase_modulus)


def test_schrodinger_homomorphism_random():
    rng = random.Random(3)
    for d1, d2 in ((1, 5), (1, 8), (2, 2), (2, 4)):
        D = PolarizationType(d1, d2)
        for _ in range(50):
            h1, h2 = _rand_element(D, rng), _rand_element(D, rng)
            lhs = schrodinger_matrix(h1) * schrodinger_matrix(h2)
            assert lhs == schrodinger_matrix(heis_mul(h1, h2))
            comm = schrodinger_matrix(h1).commutator(schrodinger_matrix(h2))
            assert comm.as_scalar() == ed_pairing(h1.k, h2.k)


def test_involution_matrix():
    for d1, d2, trace in ((1, 7, 1), (1, 8, 2), (2, 2, 4)):
        D = PolarizationType(d1, d2)
        inv = involution_matrix(D)
        assert inv.fixed_point_trace() == trace
        assert (inv * inv).is_identity()


def test_involution_conjugation():
    rng = random.Random(4)
    for d1, d2 in ((1, 7), (2, 4)):
        D = PolarizationType(d1, d2)
        iota = involution_matrix(D)
        for _ in range(20):
            h = _rand_element(D, rng)
            assert iota * schrodinger_matrix(h) * iota == schrodinger_matrix(involution_on_heis(h))


def test_eigenspace_dims_and_bases():
    cases = {(1, 7): (4, 3), (1, 8): (5, 3), (2, 2): (4, 0)}
    for (d1, d2), dims in cases.items():
        D = PolarizationType(d1, d2)
        assert eigenspace_dims(D) == dims
        plus = eigenspace_basis(D, 1)
        minus = eigenspace_basis(D, -1)
        assert (len(plus), len(minus)) == dims
        assert len(plus) + len(minus) == D.order
        # eigenvector property under the involution permutation
        inv = involution_matrix(D)
        index = {(i, j): i * D.d2 + j for i in range(D.d1) for j in range(D.d2)}
        for sign, vectors in ((1, plus), (-1, minus)):
            for v in vectors:
                image = {}
                for (i, j), c in v.items():
                    target = ((-i) % D.d1, (-j) % D.d2)
                    image[target] = image.get(target, 0) + c
                expected = {k: sign * c for k, c in v.items()}
                assert {k: c for k, c in image.items() if c} == expected


def test_section_dims_table():
    D17 = PolarizationType(1, 7)
    assert section_dims(D17, "even") == (4, 3)
    assert section_dims(D17, "odd") == (3, 4)
    D18 = PolarizationType(1, 8)
    assert section_dims(D18, "even") == (5, 3)
    D22 = PolarizationType(2, 2)
    assert section_dims(D22, "even") == (4, 0)
    assert section_dims(D22, "odd") == (4, 0)
    with pytest.raises(ValueError):
        section_dims(D22, "bogus")


def test_lefschetz_consistency_values():
    assert lefschetz_consistency(PolarizationType(1, 7), "even") == (1, 1)
    assert lefschetz_consistency(PolarizationType(1, 8), "even") == (2, 2)
    assert lefschetz_consistency(PolarizationType(2, 2), "even") == (4, 4)
    assert a2_value_distribution(PolarizationType(1, 7), "odd") == (6, 10)


def test_gamma_z():
    D = PolarizationType(1, 8)
    rng = random.Random(5)
    z0 = KElement(D, 0, 0, 0, 0)
    g0 = gamma_z(z0)
    for _ in range(10):
        h = _rand_element(D, rng)
        assert g0.apply(h) == h
    z = KElement(D, 0, 4, 0, 0)
    g = gamma_z(z)
    assert g.commutes_with_involution()
    # automorphism law and direct commutation check on generators
    for h1 in generators(D):
        for h2 in generators(D):
            assert g.apply(heis_mul(h1, h2)) == heis_mul(g.apply(h1), g.apply(h2))
        assert g.apply(involution_on_heis(h1)) == involution_on_heis(g.apply(h1))
    D7 = PolarizationType(1, 7)
    g7 = gamma_z(KElement(D7, 0, 1, 0, 0))
    assert not g7.commutes_with_involution()
    assert any(
        g7.apply(involution_on_heis(h)) != involution_on_heis(g7.apply(h))
        for h in generators(D7)
    )


def test_symmetric_counts():
    assert symmetric_counts(2, PolarizationType(1, 7)) == (16, 1)
    assert symmetric_counts(2, PolarizationType(2, 2)) == (1, 16)
    assert symmetric_counts(2, PolarizationType(1, 8)) == (4, 4)
    assert symmetric_counts(1, PolarizationType(1, 3)) == (4, 1)
    assert symmetric_counts(1, PolarizationType(1, 4)) == (1, 4)
    for d1, d2 in ((1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 4), (3, 3), (4, 4)):
        D = PolarizationType(d1, d2)
        b, s = symmetric_counts(2, D)
        assert b * s == 16
        # structures per level datum = number of 2-torsion lattice elements
        torsion = sum(
            1
            for a1 in range(d1)
            for a2 in range(d2)
            for b1 in range(d1)
            for b2 in range(d2)
            if KElement(D, a1, a2, b1, b2).double_is_zero()
        )
        assert s == torsion


def test_polarization_validation():
    with pytest.raises(ValueError):
        PolarizationType(2, 3)
    with pytest.raises(ValueError):
        heis_mul(
            heis_identity(PolarizationType(1, 3)),
            heis_identity(PolarizationType(1, 5)),
        )
