import random
from fractions import Fraction

import numpy as np
import pytest

from symtheta.arithgroups import (
    f_D,
    f_D_inv,
    identity4,
    igusa_index,
    in_congruence,
    in_gamma,
    is_congruent_identity,
    lift_mod2_class,
    mat,
    reduction_mod2_symplectic,
    sample_congruence,
    stabilizer_element_mod2,
    subgroup_generated_mod2,
    transvection,
)
from symtheta.characteristics import J2


def test_identity_in_every_tag():
    I = identity4()
    admissible = {
        "GammaD": (1, 3),
        "GammaDD": (1, 3),
        "GammaD2D": (1, 3),
        "GammaMinus": (3, 3),
        "GammaPlus": (1, 7),
        "GammaIntMinus": (1, 8),
        "GammaIntPlus": (1, 2),
        "Gamma24": (2, 2),
        "GammaEvenSym": (2, 4),
    }
    for tag, D in admissible.items():
        assert in_congruence(I, tag, D), tag


def test_tag_parity_validation():
    I = identity4()
    with pytest.raises(ValueError):
        in_congruence(I, "GammaMinus", (1, 2))
    with pytest.raises(ValueError):
        in_congruence(I, "GammaIntMinus", (1, 3))
    with pytest.raises(ValueError):
        in_congruence(I, "GammaEvenSym", (1, 2))
    with pytest.raises(ValueError):
        in_congruence(I, "NoSuchTag", (1, 3))


def test_printed_example_matrix():
    m = mat([[1, 1, 1, 1], [2, 1, 2, 1], [2, 0, 1, 1], [0, 2, 2, 1]])
    assert in_gamma(m, (1, 2))
    n, symplectic = reduction_mod2_symplectic(m)
    assert not symplectic
    prod = (n.astype(np.int64) @ J2.astype(np.int64) @ n.astype(np.int64).T) % 2
    printed = np.array([[0, 0, 0, 1], [0, 0, 1, 1], [0, 1, 0, 0], [1, 1, 0, 0]])
    assert (prod == printed).all()


def test_random_non_symplectic_rejected():
    rng = random.Random(0)
    hits = 0
    for _ in range(50):
        m = mat([[rng.randint(-3, 3) for _ in range(4)] for _ in range(4)])
        if not in_gamma(m, (1, 3)):
            hits += 1
    assert hits >= 45  # a random integer matrix almost never preserves the form


def test_f_D_roundtrip_and_homomorphism():
    D = (1, 3)
    rng_samples = [sample_congruence(3, 10, s) for s in range(30)]
    for n in rng_samples:
        r = f_D_inv(n, D)
        assert in_gamma(r, D)
        assert (f_D(r, D) == n).all()
    for a, b in zip(rng_samples[:10], rng_samples[10:20]):
        ra, rb = f_D_inv(a, D), f_D_inv(b, D)
        assert (f_D(ra @ rb, D) == a @ b).all()
    # rational round trip the other way: f_D of a form-preserving integer
    # matrix may have rational entries, and the inverse conjugation restores it
    D2 = (3, 9)
    for s in range(10):
        r = f_D_inv(sample_congruence(27, 9, s), D2)
        n = f_D(r, D2)
        back = f_D_inv(n, D2, require_integral=False)
        assert (back == r).all()


def test_f_D_integrality_error():
    D = (1, 3)
    n = identity4()
    n[0, 3] = 1  # needs division by 3 after conjugation
    with pytest.raises(ValueError):
        f_D_inv(n, D)
    out = f_D_inv(n, D, require_integral=False)
    assert out[0, 3] == Fraction(1, 3)


def test_conjugation_divisibility_pattern():
    d1, d2 = 3, 9
    D = (d1, d2)
    d = d1 * d2
    n = sample_congruence(d, 12, 5)
    r = f_D_inv(n, D)
    # the conjugated matrix scales column blocks by D^-1 and row blocks by D
    assert r[0, 2] % d2 == 0 and r[1, 2] % d2 == 0
    assert r[0, 3] % d1 == 0 and r[1, 3] % d1 == 0
    assert r[2, 0] % (d1 * d1 * d2) == 0
    assert r[3, 0] % (d1 * d2 * d2) == 0
    assert (r[2, 2] - 1) % d == 0 and (r[3, 3] - 1) % d == 0


def test_igusa_values():
    assert igusa_index(1) == 1
    assert igusa_index(2) == 720
    assert igusa_index(3) == 51840
    for d in range(1, 30, 2):
        assert igusa_index(2 * d) // igusa_index(d) == 720
        assert igusa_index(2 * d) % igusa_index(d) == 0


def test_sampler_properties():
    assert (sample_congruence(5, 0, 0) == identity4()).all()
    for seed in range(50):
        m = 6
        s = sample_congruence(m, 7, seed)
        assert in_gamma(s, (1, 1))
        assert is_congruent_identity(s, m)
    # deterministic given (m, length, seed)
    assert (sample_congruence(3, 9, 4) == sample_congruence(3, 9, 4)).all()


def test_sampler_mod2_closure_reaches_720():
    samples = [sample_congruence(3, 10, s) for s in range(120)]
    assert len(subgroup_generated_mod2(samples)) == 720


def test_transvections_are_symplectic():
    rng = random.Random(1)
    for _ in range(20):
        v = [rng.randint(-2, 2) for _ in range(4)]
        if not any(v):
            v[0] = 1
        t = transvection(v, rng.randint(-3, 3))
        assert in_gamma(t, (1, 1))


def test_lift_mod2_class():
    group_sample = stabilizer_element_mod2("odd")
    lift = lift_mod2_class(group_sample, 9)
    assert in_gamma(lift, (1, 1))
    assert is_congruent_identity(lift, 9)
    assert ((lift % 2).astype(np.int64) == (group_sample % 2)).all()
    with pytest.raises(ValueError):
        lift_mod2_class(group_sample, 4)


def test_parity_selecting_subgroups():
    D = (1, 3)
    d = 3
    for parity, good_tag, bad_tag in (
        ("odd", "GammaMinus", "GammaPlus"),
        ("even", "GammaPlus", "GammaMinus"),
    ):
        sigma = stabilizer_element_mod2(parity)
        r = f_D_inv(lift_mod2_class(sigma, d * d), D)
        assert in_congruence(r, "GammaDD", D)
        assert in_congruence(r, good_tag, D)
        assert not in_congruence(r, bad_tag, D)


def test_nesting_on_samples():
    D = (1, 7)
    d = 7
    sigma = stabilizer_element_mod2("odd")
    twist = f_D_inv(lift_mod2_class(sigma, d * d), D)
    for s in range(15):
        deep = f_D_inv(sample_congruence(4 * d * d, 8, s), D)
        assert in_congruence(deep, "GammaD2D", D)
        assert in_congruence(deep, "GammaMinus", D)
        assert in_congruence(deep, "GammaPlus", D)
        assert in_congruence(deep, "GammaDD", D)
        assert in_congruence(deep, "GammaD", D)
        # a sample congruent to the identity mod 2 keeps the twist's mod-2
        # class, so the product stays in the odd-stabilizer subgroup
        mid = f_D_inv(sample_congruence(2 * d * d, 8, s), D) @ twist
        assert in_congruence(mid, "GammaMinus", D)
        assert not in_congruence(mid, "GammaPlus", D)
        assert in_congruence(mid, "GammaDD", D)
        assert in_congruence(mid, "GammaD", D)


def test_kernel_statement_on_samples():
    D = (3, 3)
    d = 9
    sigma = stabilizer_element_mod2("odd")
    twist = f_D_inv(lift_mod2_class(sigma, d * d), D)
    for s in range(20):
        r = f_D_inv(sample_congruence(d * d, 9, s), D)
        if s % 2:
            r = r @ twist
        lhs = in_congruence(r, "GammaDD", D) and is_congruent_identity(r, 2)
        rhs = in_congruence(r, "GammaD2D", D)
        assert lhs == rhs


def test_even_tags_agree_at_22():
    # the special-case definition at (2,2) coincides with the general even one
    for s in range(10):
        r = sample_congruence(2 + 2 * (s % 2), 8, s)
        a = in_congruence(r, "Gamma24", (2, 2))
        b = in_congruence(r, "GammaEvenSym", (2, 2))
        assert a == b


def test_intermediate_tags_closed_under_products():
    D = (1, 2)
    d2 = 2
    samples = [f_D_inv(sample_congruence(4 * (d2**2), 6, s), D) for s in range(12)]
    for s in samples:
        assert in_congruence(s, "GammaIntMinus", D)
        assert in_congruence(s, "GammaIntPlus", D)
    for a in samples[:6]:
        for b in samples[6:]:
            assert in_congruence(a @ b, "GammaIntMinus", D)
            assert in_congruence(a @ b, "GammaIntPlus", D)


def test_intermediate_negative_example():
    # an element of the level-D group whose off-diagonal block is divisible
    # by d2 but not by 2 d2 is excluded from the intermediate subgroup
    D = (1, 2)
    r = identity4()
    r[1, 3] = 2  # upper block diag(0, 2); symmetric against J_D
    assert in_gamma(r, D)
    assert in_congruence(r, "GammaDD", D)
    assert not in_congruence(r, "GammaIntMinus", D)
