import random
from itertools import product

import numpy as np
import pytest

from symtheta.characteristics import (
    J2,
    REF_ODD,
    all_characteristics,
    arf_parity,
    bilinear_form,
    census,
    char_action,
    char_action_2x2,
    char_orbits,
    is_symplectic_f2,
    o2_order,
    refinement_distribution,
    refinements,
    sp4f2_enumerate,
    stabilizer_order,
    theta_index_formula,
)


def test_arf_values():
    assert arf_parity(((0, 0), (0, 0))) == 1
    assert arf_parity(((1, 1), (1, 1))) == 1
    assert arf_parity(REF_ODD) == -1
    chars = all_characteristics()
    assert sum(1 for m in chars if arf_parity(m) == 1) == 10
    assert sum(1 for m in chars if arf_parity(m) == -1) == 6


def test_bilinear_forms():
    b = bilinear_form("odd", "odd")
    assert (b == J2).all()
    assert (bilinear_form("even", "even") == 0).all()
    assert np.linalg.matrix_rank(bilinear_form("odd", "even")) == 2


def test_refinements_count_and_torsor():
    for t in (("odd", "odd"), ("odd", "even"), ("even", "even")):
        qs = refinements(bilinear_form(*t))
        assert len(qs) == 16
    # zero form: the 16 group characters
    chars16 = refinements(np.zeros((4, 4), dtype=np.uint8))
    points = list(product((0, 1), repeat=4))
    for q in chars16:
        for x in points:
            for y in points:
                s = tuple((a + b) % 2 for a, b in zip(x, y))
                assert q[x] * q[y] == q[s]
    # torsor: the ratio of two refinements is a character
    qs = refinements(bilinear_form("odd", "odd"))
    q1, q2 = qs[3], qs[11]
    ratio = {x: q1[x] * q2[x] for x in points}
    for x in points:
        for y in points:
            s = tuple((a + b) % 2 for a, b in zip(x, y))
            assert ratio[x] * ratio[y] == ratio[s]


def test_refinements_rejects_non_alternating():
    bad = np.eye(4, dtype=np.uint8)
    with pytest.raises(ValueError):
        refinements(bad)


def test_censuses():
    assert census("odd", "odd") == {(10, 6): 10, (6, 10): 6}
    assert census("odd", "even") == {(12, 4): 3, (4, 12): 1, (8, 8): 12}
    assert census("even", "even") == {(16, 0): 1, (8, 8): 15}


def test_census_matches_parity_census():
    # in the nondegenerate case, refinement distributions match the
    # characteristic parity census: 10 even-type and 6 odd-type
    qs = refinements(bilinear_form("odd", "odd"))
    dists = [refinement_distribution(q) for q in qs]
    assert dists.count((10, 6)) == 10
    assert dists.count((6, 10)) == 6


def test_sp4_enumeration():
    group = sp4f2_enumerate()
    assert len(group) == 720
    identity = tuple(map(tuple, np.eye(4, dtype=np.uint8)))
    assert identity in group
    rng = random.Random(0)
    members = set(group)
    for _ in range(500):
        a = np.array(rng.choice(group), dtype=np.uint8)
        b = np.array(rng.choice(group), dtype=np.uint8)
        assert tuple(map(tuple, (a @ b) % 2)) in members


def test_char_action_is_group_action():
    rng = random.Random(1)
    group = sp4f2_enumerate()
    chars = all_characteristics()
    identity = np.eye(4, dtype=int)
    assert all(char_action(identity, m) == m for m in chars)
    for _ in range(100):
        m1 = np.array(rng.choice(group), dtype=np.int64)
        m2 = np.array(rng.choice(group), dtype=np.int64)
        c = rng.choice(chars)
        assert char_action((m1 @ m2) % 2, c) == char_action(m1, char_action(m2, c))


def test_char_action_block_swap():
    m = np.block([
        [np.zeros((2, 2), dtype=int), np.eye(2, dtype=int)],
        [-np.eye(2, dtype=int), np.zeros((2, 2), dtype=int)],
    ])
    for c in all_characteristics():
        a, b = c
        assert char_action(m, c) == (b, a)


def test_char_action_lift_independence():
    rng = random.Random(2)
    group = sp4f2_enumerate()
    for _ in range(50):
        g = np.array(rng.choice(group), dtype=np.int64)
        lift = g + 2 * np.array(
            [[rng.randint(-2, 2) for _ in range(4)] for _ in range(4)]
        )
        for c in all_characteristics():
            assert char_action(g, c) == char_action(lift, c)


def test_orbits_and_stabilizers():
    orbits = char_orbits()
    info = sorted((len(o), arf_parity(o[0])) for o in orbits)
    assert info == [(6, -1), (10, 1)]
    for o in orbits:
        assert len({arf_parity(m) for m in o}) == 1
    assert stabilizer_order("odd") == 120
    assert stabilizer_order("even") == 72
    assert 720 == 6 * 120 == 10 * 72


def test_o2_orders_and_index_formulas():
    assert o2_order("+") == 2
    assert o2_order("-") == 6
    assert theta_index_formula(2, "-") == 6
    assert theta_index_formula(2, "+") == 10


def test_char_action_2x2_stabilizers():
    # the even binary characteristic has a 2-element stabilizer, the odd one
    # is fixed by all of Sp2(F2)
    from symtheta.characteristics import sl2f2_elements

    group = sl2f2_elements()
    assert len(group) == 6
    assert sum(1 for m in group if char_action_2x2(m, (0, 0)) == (0, 0)) == 2
    assert sum(1 for m in group if char_action_2x2(m, (1, 1)) == (1, 1)) == 6


def test_is_symplectic_f2():
    assert is_symplectic_f2(np.eye(4, dtype=int))
    bad = np.eye(4, dtype=int)
    bad[0, 1] = 1
    assert not is_symplectic_f2(bad)
