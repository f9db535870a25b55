import random

import numpy as np
import pytest

from symtheta import gb_kernels_numba, gb_kernels_numpy
from symtheta.groebner import (
    Ideal,
    groebner_basis,
    is_groebner_basis,
    monomial_minimal_primes,
    multiplicity_at,
    reduce_by_basis,
    singular_locus_ideal,
    summary_from_leading_terms,
    zero_dim_degree,
)
from symtheta.packing import pack_poly
from symtheta.poly import GF, QQ, Ring, parse_poly, xring

P = 31991


def test_basic_bases():
    ring = Ring(["x", "y"], GF(P))
    gb = Ideal(ring, ["x", "y"]).groebner_basis()
    assert {str(g) for g in gb} == {"x", "y"}
    principal = Ideal(ring, ["3*x^2-6*y"]).groebner_basis()
    assert len(principal) == 1
    assert principal[0].leading_coefficient() == 1


def test_monomial_ideal_basis_is_minimal_generating_set():
    # the monomial fast path also covers rings beyond the packed-width limit
    ring = Ring([f"x{i}" for i in range(8)], GF(P))
    gb = Ideal(ring, ["x2*x6", "x3*x7", "x0*x4", "x1*x5", "x0*x4*x6^2"]).groebner_basis()
    assert {str(g) for g in gb} == {"x0*x4", "x1*x5", "x2*x6", "x3*x7"}
    assert is_groebner_basis_monomial_case(gb)


def is_groebner_basis_monomial_case(gb):
    # S-pairs of monomials always reduce to zero; the check here is that the
    # output is reduced: no leading monomial divides another
    lts = [g.leading_term()[0] for g in gb]
    for i, a in enumerate(lts):
        for j, b in enumerate(lts):
            if i != j and all(x <= y for x, y in zip(a, b)):
                return False
    return True


def test_s_polynomial_criterion_and_membership():
    ring = Ring(["x", "y", "z", "w"], GF(P))
    gens = ["x*z-y^2", "x*w-y*z", "y*w-z^2"]
    ideal = Ideal(ring, gens)
    gb = ideal.groebner_basis()
    assert is_groebner_basis(gb)
    for g in ideal.generators:
        assert reduce_by_basis(g, gb).is_zero()


def test_qq_engine():
    ring = Ring(["x", "y", "z"], QQ)
    gb = groebner_basis([parse_poly("x^2+y", ring), parse_poly("x*y-z", ring)])
    assert is_groebner_basis(gb)
    for g in gb:
        assert g.leading_coefficient() == 1


def test_hilbert_hypersurface():
    ring = Ring([f"x{i}" for i in range(5)], GF(P))
    hs = Ideal(ring, ["x0^6+x1^6+x2^5*x3+x4^6"]).hilbert_summary()
    assert (hs.proj_dimension, hs.degree) == (3, 6)


def test_hilbert_complete_intersection_degree():
    ring = Ring([f"x{i}" for i in range(4)], GF(P))
    hs = Ideal(ring, ["x0^2+x1^2+x2^2+x3^2", "x0*x1+x2*x3"]).hilbert_summary()
    assert (hs.proj_dimension, hs.degree, hs.arithmetic_genus) == (1, 4, 1)
    # degree of the Hilbert polynomial data: leading coeff * dim! = degree
    lead = hs.hilbert_polynomial[-1]
    assert lead * 1 == hs.degree  # dim 1: leading coefficient equals degree


def test_hilbert_degenerate_policies():
    ring = Ring(["x", "y", "z"], GF(P))
    zero = Ideal(ring, [])
    hs = zero.hilbert_summary()
    assert (hs.proj_dimension, hs.degree) == (2, 1)
    unit = Ideal(ring, ["2"])
    hs2 = unit.hilbert_summary()
    assert hs2.proj_dimension == -1 and hs2.degree is None


def test_hilbert_inhomogeneous_rejected():
    ring = Ring(["x", "y"], GF(P))
    with pytest.raises(ValueError):
        Ideal(ring, ["x^2+y"]).hilbert_summary()


def test_non_prime_modulus_rejected():
    with pytest.raises(ValueError):
        GF(91)


def test_hilbert_redundant_generators():
    ring = Ring([f"x{i}" for i in range(4)], GF(P))
    gens = ["x0*x2-x1^2", "x0*x3-x1*x2", "x1*x3-x2^2"]
    base = Ideal(ring, gens).hilbert_summary()
    extra = Ideal(ring, gens + ["(x0*x2-x1^2)*(x1+x3)", "(x1*x3-x2^2)*x0^2"])
    redundant = extra.hilbert_summary()
    assert base.hilbert_polynomial == redundant.hilbert_polynomial
    assert (base.proj_dimension, base.degree) == (redundant.proj_dimension, redundant.degree)


def test_monomial_minimal_primes():
    ring = Ring(["x", "y"], QQ)
    assert monomial_minimal_primes(Ideal(ring, ["x*y"])) == [("x",), ("y",)]
    assert monomial_minimal_primes(Ideal(ring, ["x^2"])) == [("x",)]
    ring8 = Ring([f"x{i}" for i in range(8)], QQ)
    primes = monomial_minimal_primes(
        Ideal(ring8, ["x2*x6", "x3*x7", "x0*x4", "x1*x5"])
    )
    assert len(primes) == 16
    # 2^k law for k pairwise-disjoint quadratic monomials
    for k in (1, 2, 3):
        ring2k = Ring([f"x{i}" for i in range(2 * k)], QQ)
        gens = [f"x{2*i}*x{2*i+1}" for i in range(k)]
        assert len(monomial_minimal_primes(Ideal(ring2k, gens))) == 2**k
    with pytest.raises(ValueError):
        monomial_minimal_primes(Ideal(ring, ["x+y"]))


def test_zero_dim_degree():
    ring = Ring(["x", "y"], GF(P))
    assert zero_dim_degree(Ideal(ring, ["x-1", "y-2"])) == 1
    assert zero_dim_degree(Ideal(ring, ["x^2", "y"])) == 2
    with pytest.raises(ValueError) as err:
        zero_dim_degree(Ideal(ring, ["x^2"]))
    assert "dimension 1" in str(err.value)


def test_multiplicity_at():
    ring = xring(4, QQ, prefix="x", start=0)
    g = parse_poly("x0*x2^3-x1^3*x3-x1*x3^3", ring)
    mult, cone, chart = multiplicity_at(g, (1, 0, 0, 0))
    assert mult == 3
    assert cone == parse_poly("x2^3", chart)
    # a point off the hypersurface has multiplicity 0
    mult2, _, _ = multiplicity_at(g, (1, 1, 1, 1))
    assert mult2 == 0


def test_multiplicity_smooth_point():
    ring = xring(3, QQ, prefix="x", start=0)
    q = parse_poly("x0*x2-x1^2", ring)
    mult, cone, _ = multiplicity_at(q, (1, 0, 0))
    assert mult == 1


def test_singular_locus_smooth_quadric():
    ring = Ring([f"x{i}" for i in range(4)], GF(P))
    sl = singular_locus_ideal(Ideal(ring, ["x0^2+x1^2+x2^2+x3^2"]), 1)
    assert sl.hilbert_summary().proj_dimension == -1


def test_ideal_json_roundtrip():
    ring = Ring(["x", "y"], GF(P))
    ideal = Ideal(ring, ["x^2-y", "3*x*y"])
    back = Ideal.from_json(ideal.to_json())
    assert back.ring == ideal.ring
    assert back.generators == ideal.generators


def test_kernel_backends_agree():
    rng = random.Random(9)
    ring = Ring(["x", "y", "z"], GF(P))
    polys = []
    for _ in range(4):
        terms = {}
        for _ in range(6):
            e = tuple(rng.randint(0, 3) for _ in range(3))
            c = rng.randrange(1, P)
            terms[e] = c
        polys.append(terms)
    packed = [pack_poly(t, 3, P) for t in polys]
    basis = packed[:3]
    gk = np.concatenate([b[0] for b in basis])
    gc = np.concatenate([b[1] for b in basis])
    glen = np.array([b[0].size for b in basis], dtype=np.int64)
    goff = np.zeros(3, dtype=np.int64)
    np.cumsum(glen[:-1], out=goff[1:])
    glm = np.array([b[0][0] for b in basis], dtype=np.int64)
    # make basis monic for the contract
    for i, (k, c) in enumerate(basis):
        inv = pow(int(c[0]), P - 2, P)
        gc[goff[i]:goff[i]+glen[i]] = (c * inv) % P
    f = packed[3]
    ra = gb_kernels_numba.normal_form(f[0], f[1], gk, gc, goff, glen, glm, P)
    rb = gb_kernels_numpy.normal_form(f[0], f[1], gk, gc, goff, glen, glm, P)
    assert ra[0].tolist() == rb[0].tolist()
    assert ra[1].tolist() == rb[1].tolist()


def test_summary_from_leading_terms_direct():
    # twisted cubic leading terms in degrevlex: y^2, yz, z^2 pattern
    hs = summary_from_leading_terms([(0, 2, 0, 0), (0, 1, 1, 0), (0, 0, 2, 0)], 4)
    assert (hs.proj_dimension, hs.degree, hs.arithmetic_genus) == (1, 3, 0)


def _brute_hilbert_function(lt, nvars, m):
    """Count degree-m monomials outside the monomial ideal, by enumeration."""
    from itertools import combinations_with_replacement

    count = 0
    for pick in combinations_with_replacement(range(nvars), m):
        e = [0] * nvars
        for i in pick:
            e[i] += 1
        if not any(all(a >= b for a, b in zip(e, g)) for g in lt):
            count += 1
    return count


def test_hilbert_polynomial_against_enumeration():
    # the certified Hilbert polynomial must agree with the brute-force
    # Hilbert function in large degrees, on a real catalog ideal
    from symtheta.ranklocus import catalog

    rec = catalog("d11")[1]  # the degree-20 genus-26 curve
    ring = Ring(rec.ideal.ring.variables, GF(P))
    ideal = Ideal(ring, [g.reduce_mod(ring) for g in rec.ideal.generators])
    gb = ideal.groebner_basis()
    lt = [g.leading_term()[0] for g in gb]
    hs = ideal.hilbert_summary()
    assert (hs.proj_dimension, hs.degree, hs.arithmetic_genus) == (1, 20, 26)
    for m in (8, 11, 14):
        assert hs.hp_at(m) == _brute_hilbert_function(lt, ring.nvars, m)
    # degree = leading coefficient times (dim)!
    from math import factorial

    assert hs.hilbert_polynomial[-1] * factorial(hs.proj_dimension) == hs.degree
