"""Catalecticant and apolarity machinery for ternary quartics, the power-sum
variety dimension count, the ordered two-forms worked example, and the
tangency computations certifying the unirationality criterion for the
quartic threefold.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, factorial

from . import linalg
from .groebner import Ideal, multiplicity_at, singular_locus_ideal
from .lines import restrict_to_line
from .poly import GF, QQ, Polynomial, Ring, parse_poly, xring
from .polymat import PolyMatrix, determinant

QUARTIC_X43 = "x0*x2^3+x2^3*x4-x1^3*x3-x1*x3^3+x0^3*x4+x0*x4^3"
SURFACE_G = "x0*x2^3-x1^3*x3-x1*x3^3"


def _deg2_indices(nvars=3):
    return list(combinations_with_replacement(range(nvars), 2))


def _pair_exponent(pair, nvars=3):
    e = [0] * nvars
    for i in pair:
        e[i] += 1
    return tuple(e)


def catalecticant(f: Polynomial):
    """Middle catalecticant of a ternary quartic, as a symmetric 6x6 matrix
    of exact numbers.

    Entry (i, j) is the result of applying the operators u_i and u_j to f:
    the coefficient of f at u_i + u_j times the factorial of that exponent.
    This is a column rescaling of the matrix of second partials written in
    the quadric monomial basis, so the rank equals the dimension of their
    span and the vanishing of the determinant does not depend on the
    scaling.
    """
    if f.ring.nvars != 3:
        raise ValueError("catalecticant expects 3 variables")
    if not f.is_homogeneous() or f.total_degree() not in (-1, 4):
        raise ValueError("catalecticant expects a homogeneous quartic")
    pairs = _deg2_indices()
    size = len(pairs)
    out = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        ui = _pair_exponent(pairs[i])
        for j in range(size):
            uj = _pair_exponent(pairs[j])
            e = tuple(a + b for a, b in zip(ui, uj))
            c = f.terms.get(e, 0)
            if c:
                scale = 1
                for k in e:
                    scale *= factorial(k)
                out[i][j] = Fraction(c) * scale
    return out


def catalecticant_rank(f: Polynomial) -> int:
    return linalg.rank(catalecticant(f))


def catalecticant_det(f: Polynomial) -> Fraction:
    return linalg.det(catalecticant(f))


def _power_vector(linear_coeffs, d: int, nvars: int):
    """Coefficient vector of (sum_i c_i x_i)^d in the degree-d monomial basis."""
    basis = list(combinations_with_replacement(range(nvars), d))
    vec = []
    for pick in basis:
        e = [0] * nvars
        for i in pick:
            e[i] += 1
        coeff = Fraction(factorial(d))
        for k in e:
            coeff /= factorial(k)
        for i, k in enumerate(e):
            coeff *= Fraction(linear_coeffs[i]) ** k
        vec.append(coeff)
    return basis, vec


def apolar_membership(f: Polynomial, linear_forms):
    """Does f lie in the span of the fourth powers of the given forms?

    linear_forms: list of coefficient tuples.  Returns (True, lambdas) with
    the exact solution of f = sum lambda_i L_i^4, or (False, None).
    """
    n = f.ring.nvars
    basis = list(combinations_with_replacement(range(n), 4))
    index = {}
    for k, pick in enumerate(basis):
        e = [0] * n
        for i in pick:
            e[i] += 1
        index[tuple(e)] = k
    target = [Fraction(0)] * len(basis)
    for e, c in f.terms.items():
        target[index[e]] = Fraction(c)
    cols = []
    for lf in linear_forms:
        _, vec = _power_vector(lf, 4, n)
        cols.append(vec)
    rows = [[cols[j][i] for j in range(len(cols))] for i in range(len(basis))]
    sol = linalg.solve(rows, target)
    if sol is None:
        return False, None
    return True, sol


def vsp_dim(n: int, d: int, h: int) -> int:
    """h(n+1) - N(n,d) - 1; negative output means the span is too small."""
    return h * (n + 1) - (comb(n + d, d) - 1) - 1


# ---------------------------------------------------------------------------
# ordered power decompositions of a binary quadric: the two-forms example
# ---------------------------------------------------------------------------

TWO_FORMS_DET = (
    "a1*b1*b2^2-b1^2*a2*b2+a1^2*a2*b2-2*a1^2*b2^2+2*a2^2*b1^2-a2^2*a1*b1"
)
TWO_FORMS_SEGRE = "Y*W-Z*W+X*Y-2*Y^2+2*Z^2-X*Z"


def two_forms_curve() -> Polynomial:
    """det [[1,2,1],[a1^2,a1 b1,b1^2],[a2^2,a2 b2,b2^2]]: the curve of
    ordered pairs (L1, L2) with x0^2+2x0x1+x1^2 in <L1^2, L2^2>."""
    ring = Ring(["a1", "b1", "a2", "b2"], QQ)
    a1, b1, a2, b2 = ring.gens()
    rows = [
        [ring.const(1), ring.const(2), ring.const(1)],
        [a1 * a1, a1 * b1, b1 * b1],
        [a2 * a2, a2 * b2, b2 * b2],
    ]
    return determinant(PolyMatrix(rows))


def segre_embed_22(curve: Polynomial) -> Polynomial:
    """Rewrite a bidegree-(2,2) form on P^1 x P^1 in the coordinates
    X = a1 a2, Y = a1 b2, Z = b1 a2, W = b1 b2 of the Segre quadric.

    Raises if a monomial has an ambiguous rewriting (a1 b1 a2 b2 can be XW
    or YZ); the inputs used here have none.
    """
    target = Ring(["X", "Y", "Z", "W"], QQ)
    out = target.zero()
    for e, c in curve.terms.items():
        ea1, eb1, ea2, eb2 = e
        if ea1 + eb1 != 2 or ea2 + eb2 != 2:
            raise ValueError("not bidegree (2,2)")
        solutions = []
        for alpha in range(3):
            beta = ea1 - alpha
            gamma = ea2 - alpha
            delta = eb2 - beta
            if min(beta, gamma, delta) < 0:
                continue
            if gamma + delta != eb1:
                continue
            solutions.append((alpha, beta, gamma, delta))
        if len(solutions) != 1:
            raise ValueError(f"ambiguous Segre rewriting for exponent {e}")
        out = out + Polynomial(target, {solutions[0]: QQ.coerce(c)})
    return out


def gram_matrix(q: Polynomial):
    """Doubled Gram matrix of a quadratic form (integer for integer input)."""
    n = q.ring.nvars
    m = [[Fraction(0)] * n for _ in range(n)]
    for e, c in q.terms.items():
        nz = [i for i, x in enumerate(e) if x]
        if sum(e) != 2:
            raise ValueError("not a quadratic form")
        if len(nz) == 1:
            i = nz[0]
            m[i][i] = 2 * Fraction(c)
        else:
            i, j = nz
            m[i][j] = m[j][i] = Fraction(c)
    return m


def gram_rank(q: Polynomial) -> int:
    return linalg.rank(gram_matrix(q))


def pencil_rank2_certificate(q1: Polynomial, q2: Polynomial):
    """A rational point of the pencil lambda q1 + mu q2 where the Gram rank
    drops to <= 2, found through the rational roots of the degree-4 binary
    determinant.  Returns ((lambda, mu), rank) or None."""
    m1 = gram_matrix(q1)
    m2 = gram_matrix(q2)
    st = Ring(["s", "t"], QQ)
    s, t = st.gens()
    entries = [
        [s.scale(m1[i][j]) + t.scale(m2[i][j]) for j in range(4)] for i in range(4)
    ]
    detp = determinant(PolyMatrix(entries))
    from .lines import _binary_coeffs, _rational_roots_of_binary_form

    if detp.is_zero():
        candidates = [(1, 0), (0, 1), (1, 1)]
    else:
        roots, _ = _rational_roots_of_binary_form(_binary_coeffs(detp))
        candidates = [r for r, _m in roots]
    for lam, mu in candidates:
        m = [
            [lam * m1[i][j] + mu * m2[i][j] for j in range(4)] for i in range(4)
        ]
        r = linalg.rank(m)
        if r <= 2:
            return (lam, mu), r
    return None


def two_forms_example():
    """Verification record for the ordered decompositions of a rank-1
    binary quadric: the printed determinant, its Segre-coordinate form and
    the split into two conics via a rank-2 member of the pencil."""
    ring = Ring(["a1", "b1", "a2", "b2"], QQ)
    target = Ring(["X", "Y", "Z", "W"], QQ)
    curve = two_forms_curve()
    det_matches = curve == parse_poly(TWO_FORMS_DET, ring)
    segre = segre_embed_22(curve)
    segre_matches = segre == parse_poly(TWO_FORMS_SEGRE, target)
    quadric = parse_poly("X*W-Y*Z", target)
    cert = pencil_rank2_certificate(quadric, segre)
    return {
        "determinant_matches": det_matches,
        "segre_matches": segre_matches,
        "segre_substitution": "X=a1*a2, Y=a1*b2, Z=b1*a2, W=b1*b2",
        "rank2_member": None if cert is None else {"point": cert[0], "rank": cert[1]},
        "two_conics_certified": cert is not None,
    }


# ---------------------------------------------------------------------------
# the smooth quartic threefold and its triple-tangent geometry
# ---------------------------------------------------------------------------


def _quartic_threefold() -> Polynomial:
    return parse_poly(QUARTIC_X43, xring(5, QQ, prefix="x", start=0))


def _surface_g() -> Polynomial:
    return parse_poly(SURFACE_G, xring(4, QQ, prefix="x", start=0))


def tangency_suite(primes=(31991, 32003)):
    """The seven tangency/smoothness records for the quartic threefold.

    Returns a list of dicts with name, ok, expected, computed.
    """
    records = []
    X = _quartic_threefold()
    ringX = X.ring
    p_point = (10, 2, 1, 1, 0)

    # (a) tangent hyperplane at p
    grad_p = [g.evaluate(p_point) for g in X.gradient()]
    records.append(
        {
            "name": "tangent-hyperplane-at-p",
            "expected": [1, -13, 30, -14, 1001],
            "computed": grad_p,
            "ok": grad_p == [1, -13, 30, -14, 1001],
        }
    )

    # (b) smoothness over Q and two primes
    sing = singular_locus_ideal(Ideal(ringX, [X]), 1)
    empty = {"Q": sing.hilbert_summary().proj_dimension < 0}
    for p in primes:
        empty[f"F{p}"] = sing.with_field(GF(p)).hilbert_summary().proj_dimension < 0
    records.append(
        {
            "name": "smoothness",
            "expected": "projectively empty singular locus",
            "computed": empty,
            "ok": all(empty.values()),
        }
    )

    # (c) tangent hyperplane at q is {x4 = 0} and the section is G
    q_point = (1, 0, 0, 0, 0)
    grad_q = [g.evaluate(q_point) for g in X.gradient()]
    ok_c = grad_q[:4] == [0, 0, 0, 0] and grad_q[4] != 0
    ringG = xring(4, QQ, prefix="x", start=0)
    section = X.substitute(
        {i: (ringG.gen(i) if i < 4 else ringG.zero()) for i in range(5)}
    )
    G = _surface_g()
    ok_c = ok_c and section == G
    records.append(
        {
            "name": "hyperplane-section-G",
            "expected": "grad ~ (0,0,0,0,1); section matches the stored quartic",
            "computed": {"grad": grad_q, "section_matches": section == G},
            "ok": ok_c,
        }
    )

    # (d) partials, symmetric second-derivative matrix, its determinant
    from .polymat import hessian

    parts = G.gradient()
    printed_parts = [
        parse_poly("x2^3", ringG),
        parse_poly("-3*x1^2*x3-x3^3", ringG),
        parse_poly("3*x0*x2^2", ringG),
        parse_poly("-x1^3-3*x1*x3^2", ringG),
    ]
    hess = hessian(G)
    printed_hess = [
        ["0", "0", "3*x2^2", "0"],
        ["0", "-6*x1*x3", "0", "-3*x1^2-3*x3^2"],
        ["3*x2^2", "0", "6*x0*x2", "0"],
        ["0", "-3*x1^2-3*x3^2", "0", "-6*x1*x3"],
    ]
    hess_ok = all(
        hess.entries[i][j] == parse_poly(printed_hess[i][j], ringG)
        for i in range(4)
        for j in range(4)
    )
    det_h = determinant(hess)
    root = parse_poly("9*x2^2*(x1^2-x3^2)", ringG)
    records.append(
        {
            "name": "hessian-identity",
            "expected": "partials and second-derivative matrix as stored; det = (9 x2^2 (x1^2-x3^2))^2",
            "computed": {
                "partials_match": parts == printed_parts,
                "hessian_matches": hess_ok,
                "det_is_square_of_root": det_h == root * root,
            },
            "ok": parts == printed_parts and hess_ok and det_h == root * root,
        }
    )

    # (e) triple point of the section
    mult, cone, _chart = multiplicity_at(G, (1, 0, 0, 0))
    third = G.partial_derivative(2).partial_derivative(2).partial_derivative(2)
    records.append(
        {
            "name": "section-triple-point",
            "expected": {"multiplicity": 3, "third_x2_partial_nonzero": True},
            "computed": {
                "multiplicity": mult,
                "third_x2_partial_nonzero": third.evaluate((1, 0, 0, 0)) != 0,
            },
            "ok": mult == 3 and third.evaluate((1, 0, 0, 0)) != 0,
        }
    )

    # (f) the triple tangent line and its residual point
    basis = linalg.nullspace([[0, 2, -5, 1], [2, 0, -5, -15]])
    fact = restrict_to_line(G, basis[0], basis[1])
    roots = {tuple(pt): m for pt, m in fact.roots}
    ok_f = (
        not fact.identically_zero
        and roots.get((10, 2, 1, 1)) == 3
        and roots.get((65, 1, 2, 8)) == 1
        and fact.nonsplit_factor is None
    )
    records.append(
        {
            "name": "triple-tangent-line",
            "expected": {"(10,2,1,1)": 3, "(65,1,2,8)": 1},
            "computed": {str(k): v for k, v in roots.items()},
            "ok": ok_f,
        }
    )

    # (g) double point with irreducible quadratic cone on the tangent section
    ringS = xring(4, QQ, prefix="x", start=1)
    images = {
        0: parse_poly("13*x1-30*x2+14*x3-1001*x4", ringS),
        1: ringS.gen(0),
        2: ringS.gen(1),
        3: ringS.gen(2),
        4: ringS.gen(3),
    }
    section_p = X.substitute(images)
    mult2, cone2, _ = multiplicity_at(section_p, (2, 1, 1, 0))
    cone_rank = gram_rank(cone2)
    records.append(
        {
            "name": "tangent-section-double-point",
            "expected": {"multiplicity": 2, "cone_rank": 3},
            "computed": {"multiplicity": mult2, "cone_rank": cone_rank},
            "ok": mult2 == 2 and cone_rank == 3,
        }
    )

    return records
