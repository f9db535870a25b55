"""Check registry: every certified claim is a named, independently runnable
check bound to library operations through a static table.

Checks are data, not code paths: CHECKS maps an id to a descriptor holding
the target module, a human-readable claim anchor, parameters and expected
values, plus the bound callable.  Gröbner-backed checks run at two primes
and pass only on agreement; a disagreement pulls in a third prime and is
reported in the notes.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import apolarity, arithgroups, characteristics as chars, heisenberg as heis
from .groebner import (
    CROSSCHECK_PRIME,
    DEFAULT_PRIME,
    THIRD_PRIME,
    Ideal,
    monomial_minimal_primes,
    singular_locus_ideal,
    zero_dim_degree,
)
from .poly import GF, QQ, ParseError, Polynomial, Ring, parse_poly, xring
from .polymat import PolyMatrix, determinant, pfaffian
from .ranklocus import catalog
from . import linalg


@dataclass(frozen=True)
class Options:
    primes: tuple = (DEFAULT_PRIME, CROSSCHECK_PRIME)
    seed: int = 0
    field: str | None = None


@dataclass(frozen=True)
class CheckDescriptor:
    id: str
    module: str
    anchor: str
    parameters: dict
    expected: object
    fields: tuple = ("any",)


@dataclass
class CheckReport:
    id: str
    status: str
    expected: object
    computed: object
    primes: tuple
    seed: int
    runtime_ms: int
    notes: list = field(default_factory=list)


def to_jsonable(value):
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator)
    if isinstance(value, Polynomial):
        return str(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in sorted(value.items(), key=lambda kv: str(kv[0]))}
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    return str(value)


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


def _summary_dict(hs):
    out = {"dim": hs.proj_dimension, "degree": hs.degree,
           "hp": tuple(hs.hilbert_polynomial)}
    if hs.arithmetic_genus is not None:
        out["genus"] = hs.arithmetic_genus
    return out


def _hilbert_multi_prime(gens_q, primes, notes):
    """Hilbert summary over at least two primes; escalate on disagreement."""
    ring = gens_q[0].ring
    results = []
    used = list(primes[:2]) if len(primes) >= 2 else [primes[0], CROSSCHECK_PRIME]
    for p in used:
        target = Ring(ring.variables, GF(p))
        hs = Ideal(target, [g.reduce_mod(target) for g in gens_q]).hilbert_summary()
        results.append(_summary_dict(hs))
    if results[0] != results[1]:
        notes.append(f"prime disagreement at {used}; escalating to {THIRD_PRIME}")
        target = Ring(ring.variables, GF(THIRD_PRIME))
        hs = Ideal(target, [g.reduce_mod(target) for g in gens_q]).hilbert_summary()
        third = _summary_dict(hs)
        used.append(THIRD_PRIME)
        for cand in results:
            if cand == third:
                return cand, used
        return None, used
    return results[0], used


def _validate_field(descriptor, options):
    if options.field is None or "any" in descriptor.fields:
        return
    if options.field not in descriptor.fields:
        raise ValueError(
            f"check {descriptor.id} does not support field {options.field!r}"
        )


# ---------------------------------------------------------------------------
# check implementations; each returns (ok, expected, computed, notes)
# ---------------------------------------------------------------------------


def _check_sp4_order(options):
    group = chars.sp4f2_enumerate()
    return len(group) == 720, 720, len(group), []


def _check_chars_orbits(options):
    orbits = chars.char_orbits()
    sizes = sorted((len(o), chars.arf_parity(o[0])) for o in orbits)
    expected = [(6, -1), (10, 1)]
    constant = all(len({chars.arf_parity(m) for m in o}) == 1 for o in orbits)
    return sizes == expected and constant, expected, sizes, []


def _check_chars_stabilizers(options):
    odd = chars.stabilizer_order("odd")
    even = chars.stabilizer_order("even")
    computed = {"odd": odd, "even": even, "6*120": 6 * odd, "10*72": 10 * even}
    ok = odd == 120 and even == 72 and 6 * odd == 720 and 10 * even == 720
    return ok, {"odd": 120, "even": 72, "products": 720}, computed, []


def _check_chars_census(options):
    computed = {
        "odd/odd": chars.census("odd", "odd"),
        "odd/even": chars.census("odd", "even"),
        "even/even": chars.census("even", "even"),
    }
    expected = {
        "odd/odd": {(10, 6): 10, (6, 10): 6},
        "odd/even": {(12, 4): 3, (4, 12): 1, (8, 8): 12},
        "even/even": {(16, 0): 1, (8, 8): 15},
    }
    return computed == expected, expected, computed, []


HEIS_REP_TYPES = ((1, 5), (1, 7), (1, 8), (1, 12), (2, 2), (2, 4))


def _check_heis_rep(options):
    rng = random.Random(repr(("heis.rep", options.seed)))
    computed = {}
    for d1, d2 in HEIS_REP_TYPES:
        D = heis.PolarizationType(d1, d2)
        gens = heis.generators(D)
        ok = True
        for g in gens:
            for h in gens:
                mg, mh = heis.schrodinger_matrix(g), heis.schrodinger_matrix(h)
                if mg * mh != heis.schrodinger_matrix(heis.heis_mul(g, h)):
                    ok = False
                comm = mg.commutator(mh)
                if comm.as_scalar() != heis.ed_pairing(g.k, h.k):
                    ok = False
        for _ in range(25):
            h1 = heis.heis_element(
                D, rng.randrange(D.phase_modulus), rng.randrange(D.d1),
                rng.randrange(D.d2), rng.randrange(D.d1), rng.randrange(D.d2))
            h2 = heis.heis_element(
                D, rng.randrange(D.phase_modulus), rng.randrange(D.d1),
                rng.randrange(D.d2), rng.randrange(D.d1), rng.randrange(D.d2))
            lhs = heis.schrodinger_matrix(h1) * heis.schrodinger_matrix(h2)
            if lhs != heis.schrodinger_matrix(heis.heis_mul(h1, h2)):
                ok = False
        computed[(d1, d2)] = ok
    return all(computed.values()), "homomorphism + commutator pairing", computed, []


def _all_types_up_to(n_max):
    out = []
    for d1 in range(1, n_max + 1):
        for d2 in range(d1, n_max + 1):
            if d2 % d1 == 0 and d1 * d2 <= n_max:
                out.append((d1, d2))
    return out


def _check_heis_dims(options):
    computed = {}
    ok = True
    for d1, d2 in _all_types_up_to(16):
        D = heis.PolarizationType(d1, d2)
        eig = heis.eigenspace_dims(D)
        sec_even = heis.section_dims(D, "even")
        sec_odd = heis.section_dims(D, "odd")
        entry = {"eig": eig, "even": sec_even, "odd": sec_odd}
        good = eig == sec_even
        if D.parity_type() == "odd":
            good = good and sec_odd == (sec_even[1], sec_even[0])
        for parity in ("even", "odd"):
            a, b = heis.lefschetz_consistency(D, parity)
            good = good and a == b
            entry[f"lefschetz_{parity}"] = (a, b)
        good = good and sec_even[0] - sec_even[1] in (1, 2, 4)
        # basis dimensions agree with the matrix eigenspaces
        plus = heis.eigenspace_basis(D, 1)
        minus = heis.eigenspace_basis(D, -1)
        good = good and (len(plus), len(minus)) == eig
        computed[(d1, d2)] = entry
        ok = ok and good
    return ok, "eigenspace = even-bundle section dimensions; fixed-point consistency", computed, []


def _check_groups_igusa(options):
    ratio_ok = all(
        arithgroups.igusa_index(2 * d) // arithgroups.igusa_index(d) == 720
        for d in range(1, 100, 2)
    )
    val = arithgroups.igusa_index(3)
    computed = {"ratios_720": ratio_ok, "igusa(3)": val}
    return ratio_ok and val == 51840, {"ratios_720": True, "igusa(3)": 51840}, computed, []


LIFT_TYPES = ((1, 3), (3, 3), (1, 7), (3, 9))


def _check_groups_lift(options):
    computed = {}
    ok = True
    for d1, d2 in LIFT_TYPES:
        D = (d1, d2)
        d = d1 * d2
        good = True
        samples = []
        for s in range(250):
            n = arithgroups.sample_congruence(d, 8, (options.seed, s))
            r = arithgroups.f_D_inv(n, D)
            samples.append(n)
            if not arithgroups.in_gamma(r, D):
                good = False
            if not arithgroups.reduction_mod2_symplectic(r)[1]:
                good = False
        for s in range(250):
            n = arithgroups.sample_congruence(d * d, 8, (options.seed, "sq", s))
            r = arithgroups.f_D_inv(n, D)
            if not arithgroups.in_congruence(r, "GammaDD", D):
                good = False
            if not arithgroups.reduction_mod2_symplectic(r)[1]:
                good = False
        closure = arithgroups.subgroup_generated_mod2(samples[:200])
        computed[D] = {"memberships": good, "mod2_closure": len(closure)}
        ok = ok and good and len(closure) == 720
    return ok, "lifts land in the target groups; reductions generate all 720", computed, []


def _check_groups_nonsurj(options):
    M = arithgroups.mat([[1, 1, 1, 1], [2, 1, 2, 1], [2, 0, 1, 1], [0, 2, 2, 1]])
    in_gd = arithgroups.in_gamma(M, (1, 2))
    n, sym = arithgroups.reduction_mod2_symplectic(M)
    prod = (n.astype(np.int64) @ chars.J2.astype(np.int64) @ n.astype(np.int64).T) % 2
    printed = np.array(
        [[0, 0, 0, 1], [0, 0, 1, 1], [0, 1, 0, 0], [1, 1, 0, 0]], dtype=np.int64
    )
    product_matches = bool((prod == printed).all())
    computed = {
        "in_gamma_D": in_gd,
        "mod2_symplectic": sym,
        "product_matches": product_matches,
    }
    ok = in_gd and not sym and product_matches
    return ok, {"in_gamma_D": True, "mod2_symplectic": False, "product_matches": True}, computed, []


def _check_groups_kernel(options):
    computed = {}
    ok = True
    for d1, d2 in LIFT_TYPES:
        D = (d1, d2)
        d = d1 * d2
        sig = arithgroups.stabilizer_element_mod2("odd")
        twist = arithgroups.f_D_inv(arithgroups.lift_mod2_class(sig, d * d), D)
        good = True
        for s in range(30):
            r = arithgroups.f_D_inv(
                arithgroups.sample_congruence(d * d, 10, (options.seed, "k", s)), D
            )
            if s % 3 == 1:
                r = r @ twist
            if s % 3 == 2:
                r = arithgroups.f_D_inv(
                    arithgroups.sample_congruence(4 * d * d, 8, (options.seed, "k2", s)), D
                )
            lhs = arithgroups.in_congruence(r, "GammaDD", D) and arithgroups.is_congruent_identity(r, 2)
            rhs = arithgroups.in_congruence(r, "GammaD2D", D)
            if lhs != rhs:
                good = False
        computed[D] = good
        ok = ok and good
    return ok, "level-2D membership = trivial mod-2 reduction, on samples", computed, []


def _check_d9_steinerian(options):
    rec = catalog("d9")[0]
    t4 = rec.data["matrix"]
    ys = rec.data["kernel"]
    ring = t4.ring
    notes = [rec.data["typo_note"]]
    frozen = [parse_poly(t, ring) for t in rec.expected["components"]]
    matches = ys == frozen
    degrees = [y.total_degree() for y in ys]
    relation = (ys[0] + ys[3]).is_zero()
    in_kernel = all(p.is_zero() for p in t4.matvec(ys))
    monomials = sorted({e for y in ys for e in y.terms})
    coeff_matrix = [[Fraction(y.terms.get(e, 0)) for e in monomials] for y in ys]
    rank = linalg.rank(coeff_matrix)
    computed = {
        "components_match": matches,
        "degrees": degrees,
        "linear_relation_y0_plus_y3": relation,
        "kernel_identity": in_kernel,
        "coefficient_rank": rank,
    }
    ok = matches and degrees == [4] * 5 and relation and in_kernel and rank == 4
    expected = {
        "components_match": True,
        "degrees": [4] * 5,
        "linear_relation_y0_plus_y3": True,
        "kernel_identity": True,
        "coefficient_rank": 4,
    }
    return ok, expected, computed, notes


def _check_d9_fiber_degree(options):
    rec = catalog("d9")[0]
    ys = rec.data["kernel"]
    notes = []
    computed = {}
    ok = True
    seeds = [options.seed + k for k in range(3)]
    for p in options.primes[:2]:
        ring = Ring([f"x{i}" for i in range(1, 5)], GF(p))
        ysp = [y.reduce_mod(ring) for y in ys]
        for seed in seeds:
            rng = random.Random(repr((p, seed)))
            while True:
                s = tuple(rng.randrange(p) for _ in range(4))
                q = [y.evaluate(s) for y in ysp]
                if any(q):
                    break
            gens = [y - ring.const(qi) for y, qi in zip(ysp, q)]
            length = zero_dim_degree(Ideal(ring, gens))
            deg = length // 4 if length % 4 == 0 else None
            computed[(p, seed)] = {"quotient_length": length, "fiber_degree": deg}
            ok = ok and deg == 6
    notes.append("quotient length 24 = 4 fourth-roots of unity x 6 fiber points")
    return ok, {"fiber_degree": 6, "seeds": seeds}, computed, notes


def _check_d11_sextic(options):
    notes = []
    hyper, curve = catalog("d11")
    t5 = hyper.data["matrix"]
    pf = hyper.data["pfaffian"]
    det = determinant(t5)
    det_ok = det == pf * pf
    deg_ok = pf.total_degree() == 6
    hyper_hs, _ = _hilbert_multi_prime(hyper.ideal.generators, options.primes, notes)
    curve_hs, _ = _hilbert_multi_prime(curve.ideal.generators, options.primes, notes)
    computed = {
        "det_equals_pfaffian_squared": det_ok,
        "pfaffian_degree": pf.total_degree(),
        "hypersurface": hyper_hs,
        "rank2_curve": curve_hs,
    }
    ok = (
        det_ok
        and deg_ok
        and hyper_hs is not None
        and (hyper_hs["dim"], hyper_hs["degree"]) == (3, 6)
        and curve_hs is not None
        and (curve_hs["dim"], curve_hs["degree"], curve_hs.get("genus")) == (1, 20, 26)
    )
    expected = {
        "det_equals_pfaffian_squared": True,
        "pfaffian_degree": 6,
        "hypersurface": (3, 6),
        "rank2_curve": (1, 20, 26),
    }
    return ok, expected, computed, notes


def _check_d13_degree21(options):
    rec = catalog("d13")[0]
    ring = rec.ideal.ring
    notes = [rec.data["typo_note"]]
    frozen = [parse_poly(t, ring) for t in rec.expected["texts"]]
    matches = rec.data["three"] == frozen
    three_hs, _ = _hilbert_multi_prime(rec.data["three"], options.primes, notes)
    seven_hs, _ = _hilbert_multi_prime(rec.data["seven"], options.primes, notes)
    same_hp = (
        three_hs is not None
        and seven_hs is not None
        and three_hs["hp"] == seven_hs["hp"]
    )
    if not same_hp and three_hs and seven_hs:
        notes.append(
            "the three printed pfaffians generate strictly less than the full "
            "pfaffian ideal: the Hilbert polynomials differ by a dimension-2 "
            "tail, so the triple does not cut the locus scheme-theoretically; "
            "dimension and degree (3, 21) agree"
        )
    computed = {
        "texts_match": matches,
        "three": three_hs,
        "seven": seven_hs,
        "same_hilbert_polynomial": same_hp,
    }
    ok = (
        matches
        and three_hs is not None
        and (three_hs["dim"], three_hs["degree"]) == (3, 21)
        and same_hp
    )
    expected = {
        "texts_match": True,
        "three": (3, 21),
        "same_hilbert_polynomial": True,
    }
    return ok, expected, computed, notes


def _check_d12_pfaffian(options):
    rec = catalog("d12")[0]
    ok = rec.data["pfaffian"] == rec.data["target"]
    return ok, rec.expected["text"], str(rec.data["pfaffian"]), []


def _check_d12_segre(options):
    records = apolarity.tangency_suite(options.primes)
    computed = {r["name"]: r["ok"] for r in records}
    details = {r["name"]: to_jsonable(r["computed"]) for r in records if not r["ok"]}
    notes = [f"failing record {k}: {v}" for k, v in details.items()]
    return all(computed.values()), "all seven tangency records", computed, notes


def _check_d8_suite(options):
    notes = []
    quad, pull, smooth, degen = catalog("d8")
    ring = quad.data["polys"][0].ring
    quad_ok = all(
        p == parse_poly(t, ring) for p, t in zip(quad.data["polys"], quad.expected["texts"])
    )
    pull_ok = pull.data["computed"] == pull.data["target"]
    deg_ok = pull.data["computed"].total_degree() == 8
    sing = singular_locus_ideal(smooth.ideal, 1)
    empty = {"Q": sing.hilbert_summary().proj_dimension < 0}
    for p in options.primes[:2]:
        empty[f"F{p}"] = sing.with_field(GF(p)).hilbert_summary().proj_dimension < 0
    primes_list = monomial_minimal_primes(degen.ideal)
    pairs = degen.expected["pairs"]
    shape_ok = len(primes_list) == 16 and all(
        len(pr) == 4 and all(sum(1 for v in pair if v in pr) == 1 for pair in pairs)
        for pr in primes_list
    )
    computed = {
        "quadrics_match": quad_ok,
        "pullback_matches": pull_ok,
        "pullback_degree": pull.data["computed"].total_degree(),
        "discriminant_smooth": empty,
        "minimal_primes": len(primes_list),
        "primes_shape": shape_ok,
    }
    ok = quad_ok and pull_ok and deg_ok and all(empty.values()) and shape_ok
    expected = {
        "quadrics_match": True,
        "pullback_matches": True,
        "pullback_degree": 8,
        "discriminant_smooth": True,
        "minimal_primes": 16,
        "primes_shape": True,
    }
    return ok, expected, computed, notes


def _check_d10_trivial(options):
    rec = catalog("d10")[0]
    det = determinant(rec.data["matrix"])
    return det.is_zero(), "identically zero determinant", str(det), []


def _check_d14_suite(options):
    rec = catalog("d14")[0]
    ring = rec.ideal.ring
    notes = [rec.data["typo_note"]]
    f_ok = rec.data["f"] == parse_poly(rec.expected["f"], ring)
    g_ok = rec.data["g"] == parse_poly(rec.expected["g"], ring)
    ci_hs, _ = _hilbert_multi_prime([rec.data["f"], rec.data["g"]], options.primes, notes)
    sing = singular_locus_ideal(rec.ideal, 2)
    sing_hs, _ = _hilbert_multi_prime(sing.generators, options.primes, notes)
    computed = {
        "f_matches": f_ok,
        "g_matches": g_ok,
        "complete_intersection": ci_hs,
        "singular_locus": sing_hs,
    }
    ok = (
        f_ok
        and g_ok
        and ci_hs is not None
        and (ci_hs["dim"], ci_hs["degree"]) == (3, 16)
        and sing_hs is not None
        and (sing_hs["dim"], sing_hs["degree"]) == (1, 24)
    )
    expected = {
        "f_matches": True,
        "g_matches": True,
        "complete_intersection": (3, 16),
        "singular_locus": (1, 24),
    }
    return ok, expected, computed, notes


def _check_d16_degree40(options):
    rec = catalog("d16")[0]
    notes = []
    hs, _ = _hilbert_multi_prime(rec.ideal.generators, options.primes, notes)
    ok = hs is not None and (hs["dim"], hs["degree"]) == (3, 40)
    return ok, {"dim": 3, "degree": 40}, hs, notes


def _check_vsp_catalecticant(options):
    rng = random.Random(repr(("vsp.catalecticant", options.seed)))
    ring = xring(3, QQ, prefix="x", start=0)

    def rand_linear():
        while True:
            v = [rng.randint(-4, 4) for _ in range(3)]
            if any(v):
                return v

    rank5_ok = True
    for _ in range(5):
        f = ring.zero()
        for _ in range(5):
            c = rand_linear()
            L = sum((ring.gen(i).scale(c[i]) for i in range(3)), ring.zero())
            f = f + L**4
        if apolarity.catalecticant_det(f) != 0:
            rank5_ok = False
    generic_ok = True
    from itertools import combinations_with_replacement

    basis = list(combinations_with_replacement(range(3), 4))
    for _ in range(20):
        terms = {}
        for pick in basis:
            e = [0, 0, 0]
            for i in pick:
                e[i] += 1
            c = rng.randint(-9, 9)
            if c:
                terms[tuple(e)] = QQ.coerce(c)
        f = Polynomial(ring, terms)
        if apolarity.catalecticant_det(f) == 0:
            generic_ok = False
    power_rank = apolarity.catalecticant_rank(parse_poly("x0^4", ring))
    computed = {
        "rank5_det_zero": rank5_ok,
        "generic_det_nonzero": generic_ok,
        "pure_power_rank": power_rank,
    }
    ok = rank5_ok and generic_ok and power_rank == 1
    expected = {"rank5_det_zero": True, "generic_det_nonzero": True, "pure_power_rank": 1}
    return ok, expected, computed, []


def _check_vsp_dim(options):
    computed = {
        "(2,4,6)": apolarity.vsp_dim(2, 4, 6),
        "(1,8,5)": apolarity.vsp_dim(1, 8, 5),
    }
    expected = {"(2,4,6)": 3, "(1,8,5)": 1}
    return computed == expected, expected, computed, []


def _check_vsp_two_conics(options):
    rec = apolarity.two_forms_example()
    if rec["rank2_member"] is None and rec["determinant_matches"] and rec["segre_matches"]:
        return None, "rank-2 pencil member with rational modulus", rec, [
            "no rational rank-2 member found; reducibility not decided"
        ]
    ok = rec["determinant_matches"] and rec["segre_matches"] and rec["two_conics_certified"]
    return ok, "printed determinant and quadric forms; rank-2 pencil member", rec, [
        f"coordinate identification: {rec['segre_substitution']}"
    ]


def _check_counts_symmetric(options):
    named = {
        (1, 7): (16, 1),
        (2, 2): (1, 16),
        (1, 8): (4, 4),
    }
    computed = {}
    ok = True
    for (d1, d2), want in named.items():
        got = heis.symmetric_counts(2, heis.PolarizationType(d1, d2))
        computed[(d1, d2)] = got
        ok = ok and got == want
    product_ok = True
    for d1 in range(1, 5):
        for d2 in range(d1, 5):
            if d2 % d1:
                continue
            b, s = heis.symmetric_counts(2, heis.PolarizationType(d1, d2))
            computed[(d1, d2)] = (b, s)
            if b * s != 16:
                product_ok = False
    ok = ok and product_ok
    computed["product_16"] = product_ok
    return ok, {**{str(k): v for k, v in named.items()}, "product_16": True}, computed, []


def _rand_poly(ring, rng, nterms, degree):
    terms = {}
    for _ in range(nterms):
        e = [0] * ring.nvars
        for _ in range(degree):
            e[rng.randrange(ring.nvars)] += 1
        c = rng.randint(-5, 5)
        if c:
            terms[tuple(e)] = ring.field.coerce(c)
    return Polynomial(ring, terms)


def _check_prop_pfaffian_det(options):
    rng = random.Random(repr(("prop.pfaffian-det", options.seed)))
    ring = xring(4, QQ, prefix="a")
    ok = True
    for size in (2, 3, 4, 5, 6, 7, 8):
        for _ in range(3):
            rows = [[ring.zero() for _ in range(size)] for _ in range(size)]
            for i in range(size):
                for j in range(i + 1, size):
                    p = _rand_poly(ring, rng, 2, 1)
                    rows[i][j] = p
                    rows[j][i] = -p
            m = PolyMatrix(rows)
            if size % 2 == 0:
                if pfaffian(m) ** 2 != determinant(m):
                    ok = False
            else:
                if not determinant(m).is_zero():
                    ok = False
    return ok, "pfaffian^2 = det (even sizes); det = 0 (odd sizes)", ok, []


def _check_prop_hilbert_redundant(options):
    rng = random.Random(repr(("prop.hilbert-redundant", options.seed)))
    notes = []
    ok = True
    computed = {}
    d11 = catalog("d11")
    targets = {
        "d11.sextic": d11[0].ideal,
        "d11.rank2": d11[1].ideal,
        "d13.three": catalog("d13")[0].ideal,
        "d14.ci": catalog("d14")[0].ideal,
        "d16.rank2": catalog("d16")[0].ideal,
        "d8.discriminant": catalog("d8")[2].ideal,
        "d8.degeneration": catalog("d8")[3].ideal,
    }
    p = options.primes[0]
    for name, ideal_q in targets.items():
        target = Ring(ideal_q.ring.variables, GF(p))
        gens = [g.reduce_mod(target) for g in ideal_q.generators]
        base = Ideal(target, gens).hilbert_summary()
        extra = gens[rng.randrange(len(gens))] * gens[rng.randrange(len(gens))]
        extra2 = gens[0] * target.gen(rng.randrange(target.nvars)) ** 2
        redundant = Ideal(target, gens + [extra, extra2]).hilbert_summary()
        same = (
            base.proj_dimension == redundant.proj_dimension
            and base.degree == redundant.degree
            and base.hilbert_polynomial == redundant.hilbert_polynomial
        )
        computed[name] = same
        ok = ok and same
    return ok, "summary invariant under redundant generators", computed, notes


def _check_prop_euler(options):
    rng = random.Random(repr(("prop.euler", options.seed)))
    ok = True
    for field in (QQ, GF(DEFAULT_PRIME)):
        ring = xring(4, field, prefix="x")
        for _ in range(50):
            d = rng.randint(1, 6)
            p = _rand_poly(ring, rng, 4, d)
            if p.is_zero():
                continue
            euler = ring.zero()
            for i in range(ring.nvars):
                euler = euler + ring.gen(i) * p.partial_derivative(i)
            if euler != p.scale(d):
                ok = False
    return ok, "sum x_i d_i p = deg(p) p on homogeneous inputs", ok, []


def _check_prop_roundtrip(options):
    rng = random.Random(repr(("prop.roundtrip", options.seed)))
    ok = True
    count = 0
    for field in (QQ, GF(DEFAULT_PRIME)):
        ring = xring(3, field, prefix="x")
        for _ in range(1000):
            terms = {}
            for _ in range(rng.randint(1, 6)):
                e = tuple(rng.randint(0, 5) for _ in range(3))
                if field == QQ:
                    c = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
                else:
                    c = rng.randrange(DEFAULT_PRIME)
                if c:
                    terms[e] = field.coerce(c)
            p = Polynomial(ring, terms) if terms else ring.zero()
            try:
                q = parse_poly(str(p), ring)
            except ParseError:
                ok = False
                continue
            count += 1
            if q != p:
                ok = False
    return ok, "parse(print(p)) = p", {"count": count, "ok": ok}, []


# ---------------------------------------------------------------------------
# the registry table
# ---------------------------------------------------------------------------

_CHECK_FUNCS = {}


def _register(descriptor, func):
    _CHECK_FUNCS[descriptor.id] = (descriptor, func)


_register(CheckDescriptor(
    "chars.census", "characteristics",
    "value censuses of the 16 quadratic refinements for the three parity types",
    {}, {"odd/odd": {"(10,6)": 10, "(6,10)": 6},
         "odd/even": {"(12,4)": 3, "(4,12)": 1, "(8,8)": 12},
         "even/even": {"(16,0)": 1, "(8,8)": 15}}), _check_chars_census)
_register(CheckDescriptor(
    "chars.orbits", "characteristics",
    "two orbits on the 16 characteristics, split 10 even / 6 odd",
    {}, {"sizes": [10, 6]}), _check_chars_orbits)
_register(CheckDescriptor(
    "chars.stabilizers", "characteristics",
    "stabilizer orders 120 (odd) and 72 (even); 720 = 6*120 = 10*72",
    {}, {"odd": 120, "even": 72}), _check_chars_stabilizers)
_register(CheckDescriptor(
    "counts.symmetric", "heisenberg",
    "symmetric bundle/structure counts (16,1), (1,16), (4,4); product 16",
    {}, {"(1,7)": [16, 1], "(2,2)": [1, 16], "(1,8)": [4, 4]}), _check_counts_symmetric)
_register(CheckDescriptor(
    "d10.trivial", "ranklocus",
    "determinant of the restricted 5x5 matrix is identically zero",
    {}, 0), _check_d10_trivial)
_register(CheckDescriptor(
    "d11.sextic", "ranklocus",
    "sextic pfaffian hypersurface; rank-2 curve of degree 20 and genus 26",
    {}, {"hypersurface": [3, 6], "curve": [1, 20, 26]}, fields=("Fp",)), _check_d11_sextic)
_register(CheckDescriptor(
    "d12.pfaffian", "ranklocus",
    "pfaffian of the restricted upper-left block matches the stored quartic",
    {}, "2*(x1*x3^3+x3^3*x5-x2^3*x4-x2*x4^3+x1^3*x5+x1*x5^3)"), _check_d12_pfaffian)
_register(CheckDescriptor(
    "d12.segre", "apolarity",
    "tangency suite for the smooth quartic threefold: tangent hyperplane, "
    "smoothness, section geometry, triple tangent with residual point",
    {}, "all records pass", fields=("any",)), _check_d12_segre)
_register(CheckDescriptor(
    "d13.degree21", "ranklocus",
    "threefold of degree 21 from three sextic pfaffians; full pfaffian ideal "
    "expected to give the same Hilbert polynomial",
    {}, {"dim": 3, "degree": 21, "same_hp": True}, fields=("Fp",)), _check_d13_degree21)
_register(CheckDescriptor(
    "d14.suite", "ranklocus",
    "two quartic pfaffians: complete intersection (3,16), singular curve (1,24)",
    {}, {"ci": [3, 16], "singular": [1, 24]}, fields=("Fp",)), _check_d14_suite)
_register(CheckDescriptor(
    "d16.degree40", "ranklocus",
    "rank-2 pfaffian locus of the 8x8 restriction: threefold of degree 40",
    {}, {"dim": 3, "degree": 40}, fields=("Fp",)), _check_d16_degree40)
_register(CheckDescriptor(
    "d8.suite", "ranklocus",
    "quotient pullback of the discriminant, its smoothness, and the 16 "
    "coordinate 3-spaces of the boundary fiber",
    {}, {"pullback_degree": 8, "minimal_primes": 16}), _check_d8_suite)
_register(CheckDescriptor(
    "d9.fiber-degree", "ranklocus",
    "kernel map is dominant of degree 6 onto its hyperplane image",
    {"seeds": "seed..seed+2"}, 6, fields=("Fp",)), _check_d9_fiber_degree)
_register(CheckDescriptor(
    "d9.steinerian", "ranklocus",
    "kernel pfaffians: quartic components, linear relation, kernel identity",
    {}, {"coefficient_rank": 4}), _check_d9_steinerian)
_register(CheckDescriptor(
    "groups.igusa", "arithgroups",
    "index-formula ratios equal 720 for odd levels; value 51840 at level 3",
    {"range": "odd d <= 99"}, {"ratio": 720, "igusa(3)": 51840}), _check_groups_igusa)
_register(CheckDescriptor(
    "groups.kernel", "arithgroups",
    "inside the level-D group, trivial mod-2 reduction = level-2D membership",
    {"types": list(LIFT_TYPES)}, True), _check_groups_kernel)
_register(CheckDescriptor(
    "groups.lift", "arithgroups",
    "conjugation lifts of principal-level samples land in the form-preserving "
    "groups; mod-2 reductions generate the full group of order 720",
    {"types": list(LIFT_TYPES), "samples": 500}, True), _check_groups_lift)
_register(CheckDescriptor(
    "groups.nonsurj", "arithgroups",
    "the stored (1,2) example preserves the form yet reduces non-symplectically",
    {}, {"in_gamma_D": True, "mod2_symplectic": False}), _check_groups_nonsurj)
_register(CheckDescriptor(
    "heis.dims", "heisenberg",
    "involution eigenspace dimensions match even-bundle section counts; "
    "fixed-point formula consistency",
    {"types": "d1*d2 <= 16"}, True), _check_heis_dims)
_register(CheckDescriptor(
    "heis.rep", "heisenberg",
    "matrix model is a homomorphism; commutators realize the pairing",
    {"types": list(HEIS_REP_TYPES)}, True), _check_heis_rep)
_register(CheckDescriptor(
    "prop.euler", "poly",
    "Euler identity on random homogeneous polynomials",
    {"samples": 100}, True), _check_prop_euler)
_register(CheckDescriptor(
    "prop.hilbert-redundant", "groebner",
    "Hilbert summary invariant under redundant generators on catalog ideals",
    {}, True), _check_prop_hilbert_redundant)
_register(CheckDescriptor(
    "prop.pfaffian-det", "polymat",
    "pfaffian squared equals determinant on random antisymmetric matrices",
    {"sizes": [2, 3, 4, 5, 6, 7, 8]}, True), _check_prop_pfaffian_det)
_register(CheckDescriptor(
    "prop.roundtrip", "poly",
    "parse/print round-trip on random canonical polynomials",
    {"samples": 2000}, True), _check_prop_roundtrip)
_register(CheckDescriptor(
    "sp4.order", "characteristics",
    "the symplectic group over the two-element field has order 720",
    {}, 720), _check_sp4_order)
_register(CheckDescriptor(
    "vsp.catalecticant", "apolarity",
    "rank-5 power sums kill the catalecticant determinant; generic quartics "
    "do not; a fourth power has rank 1",
    {"generic_samples": 20}, True), _check_vsp_catalecticant)
_register(CheckDescriptor(
    "vsp.dim", "apolarity",
    "power-sum variety dimension count",
    {}, {"(2,4,6)": 3, "(1,8,5)": 1}), _check_vsp_dim)
_register(CheckDescriptor(
    "vsp.two-conics", "apolarity",
    "ordered two-form decompositions of a rank-1 binary quadric: printed "
    "determinant, quadric-coordinate form, split into two conics",
    {}, True), _check_vsp_two_conics)


def list_checks():
    """All descriptors, deterministically ordered by id."""
    return [desc for desc, _ in (
        _CHECK_FUNCS[k] for k in sorted(_CHECK_FUNCS)
    )]


def run(check_id: str, options: Options | None = None) -> CheckReport:
    """Execute one check; deterministic given (primes, seed)."""
    if options is None:
        options = Options()
    if check_id not in _CHECK_FUNCS:
        raise KeyError(f"unknown check id {check_id!r}")
    for p in options.primes:
        from .poly import _is_prime

        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
    descriptor, func = _CHECK_FUNCS[check_id]
    _validate_field(descriptor, options)
    t0 = time.perf_counter()
    ok, expected, computed, notes = func(options)
    ms = int((time.perf_counter() - t0) * 1000)
    status = "PASS" if ok else ("INCONCLUSIVE" if ok is None else "FAIL")
    return CheckReport(
        id=check_id,
        status=status,
        expected=to_jsonable(expected),
        computed=to_jsonable(computed),
        primes=tuple(options.primes),
        seed=options.seed,
        runtime_ms=ms,
        notes=list(notes),
    )


def run_all(options: Options | None = None, workers: int = 1):
    """Run every check; returns (reports sorted by id, summary dict)."""
    if options is None:
        options = Options()
    ids = sorted(_CHECK_FUNCS)
    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda i: run(i, options), ids))
    else:
        reports = [run(i, options) for i in ids]
    summary = {
        "pass": sum(1 for r in reports if r.status == "PASS"),
        "fail": sum(1 for r in reports if r.status == "FAIL"),
        "inconclusive": sum(1 for r in reports if r.status == "INCONCLUSIVE"),
    }
    return reports, summary
