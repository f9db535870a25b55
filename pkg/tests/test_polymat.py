import random

import pytest

from symtheta.poly import QQ, parse_poly, xring
from symtheta.polymat import (
    NotAntisymmetricError,
    PolyMatrix,
    check_antisymmetric,
    determinant,
    hessian,
    kernel_pfaffians,
    pfaffian,
    principal_pfaffians,
)


def _rand_antisym(size, ring, rng, deg=1):
    gens = ring.gens()
    rows = [[ring.zero() for _ in range(size)] for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            p = ring.const(rng.randint(-3, 3))
            for _ in range(deg):
                p = p + gens[rng.randrange(len(gens))].scale(rng.randint(-2, 2))
            rows[i][j] = p
            rows[j][i] = -p
    return PolyMatrix(rows)


def test_determinant_diagonal():
    ring = xring(3, QQ, prefix="x")
    x, y, z = ring.gens()
    m = PolyMatrix([
        [x, ring.zero(), ring.zero()],
        [ring.zero(), y + z, ring.zero()],
        [ring.zero(), ring.zero(), z**2],
    ])
    assert determinant(m) == x * (y + z) * z**2


def test_determinant_nonsquare():
    ring = xring(2, QQ)
    x, y = ring.gens()
    with pytest.raises(ValueError):
        determinant(PolyMatrix([[x, y]]))


def test_hessian_determinant_identity():
    ring = xring(4, QQ, prefix="x", start=0)
    g = parse_poly("x0*x2^3-x1^3*x3-x1*x3^3", ring)
    h = hessian(g)
    root = parse_poly("9*x2^2*(x1^2-x3^2)", ring)
    assert determinant(h) == root * root
    assert determinant(h) == parse_poly("81*x2^4*(x1^2-x3^2)^2", ring)


def test_hessian_of_quadratic_is_doubled_gram():
    ring = xring(3, QQ, prefix="x")
    a = [[2, 1, 0], [1, -3, 4], [0, 4, 5]]
    q = ring.zero()
    for i in range(3):
        for j in range(3):
            q = q + (ring.gen(i) * ring.gen(j)).scale(a[i][j])
    h = hessian(q)
    for i in range(3):
        for j in range(3):
            assert h[i, j] == ring.const(2 * a[i][j])
        # symmetry
        for j in range(3):
            assert h[i, j] == h[j, i]


def test_pfaffian_two_by_two():
    ring = xring(1, QQ, prefix="a")
    a = ring.gen(0)
    m = PolyMatrix([[ring.zero(), a], [-a, ring.zero()]])
    assert pfaffian(m) == a


def test_pfaffian_four_by_four_classical():
    ring = xring(6, QQ, prefix="a")
    a01, a02, a03, a12, a13, a23 = ring.gens()
    z = ring.zero()
    m = PolyMatrix([
        [z, a01, a02, a03],
        [-a01, z, a12, a13],
        [-a02, -a12, z, a23],
        [-a03, -a13, -a23, z],
    ])
    assert pfaffian(m) == a01 * a23 - a02 * a13 + a03 * a12


def test_pfaffian_squared_is_determinant():
    rng = random.Random(2)
    ring = xring(3, QQ, prefix="t")
    for size in (2, 4, 6, 8):
        m = _rand_antisym(size, ring, rng)
        assert pfaffian(m) ** 2 == determinant(m)
    for size in (3, 5, 7):
        m = _rand_antisym(size, ring, rng)
        assert determinant(m).is_zero()


def test_antisymmetry_is_checked():
    ring = xring(2, QQ)
    x, y = ring.gens()
    bad = PolyMatrix([[ring.zero(), x], [x, ring.zero()]])
    with pytest.raises(NotAntisymmetricError) as err:
        pfaffian(bad)
    assert err.value.entry == (0, 1)
    with pytest.raises(ValueError):
        pfaffian(PolyMatrix([[ring.zero()]]))


def test_kernel_pfaffians_identity():
    rng = random.Random(3)
    ring = xring(4, QQ, prefix="t")
    for _ in range(20):
        m = _rand_antisym(5, ring, rng)
        v = kernel_pfaffians(m)
        assert all(p.is_zero() for p in m.matvec(v))
    with pytest.raises(ValueError):
        kernel_pfaffians(_rand_antisym(4, ring, rng))


def test_principal_pfaffians_count():
    rng = random.Random(4)
    ring = xring(2, QQ)
    m = _rand_antisym(6, ring, rng)
    assert len(principal_pfaffians(m, 4)) == 15
    check_antisymmetric(m)
