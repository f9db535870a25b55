"""Restriction of forms to lines and rational factorization of binary forms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .poly import QQ, Polynomial, Ring


def normalize_projective(point):
    """Scale a rational tuple to coprime integers with positive first nonzero."""
    point = [Fraction(x) for x in point]
    if all(x == 0 for x in point):
        raise ValueError("zero vector is not a projective point")
    den = 1
    for x in point:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in point]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    ints = [x // g for x in ints]
    for x in ints:
        if x != 0:
            if x < 0:
                ints = [-y for y in ints]
            break
    return tuple(ints)


@dataclass
class BinaryFormFactorization:
    """Rational roots (as projective points on the line) with multiplicities,
    plus whatever factor does not split over Q.  identically_zero marks the
    degenerate outcome where the form vanishes on the whole line."""

    degree: int
    roots: list  # list of (point tuple, multiplicity)
    nonsplit_factor: Polynomial | None
    identically_zero: bool = False

    def check(self):
        if self.identically_zero:
            return
        total = sum(m for _, m in self.roots)
        rest = 0 if self.nonsplit_factor is None else self.nonsplit_factor.total_degree()
        assert total + rest == self.degree


def _binary_coeffs(form: Polynomial):
    """Coefficients c[i] of s^i t^(n-i) for a binary form in ring (s, t)."""
    n = form.total_degree()
    c = [Fraction(0)] * (n + 1)
    for (a, b), v in form.terms.items():
        assert a + b == n
        c[a] = Fraction(v)
    return c


def _rational_roots_of_binary_form(c):
    """All projective rational roots [s0:t0] of sum c[i] s^i t^(n-i), with
    multiplicities, plus the Q-coefficients of the nonsplit cofactor."""
    roots = []
    # roots at t = 0, i.e. [1:0]: multiplicity = t-adic valuation of the form
    mult_inf = 0
    cc = list(c)
    while len(cc) > 1 and cc[-1] == 0:
        cc.pop()  # divide by t ... wait: c[i] multiplies s^i t^(n-i)
        mult_inf += 1
    # after popping, cc represents a form of degree n-mult_inf with c[deg] != 0
    if mult_inf:
        roots.append(((1, 0), mult_inf))
    # dehomogenize: u = s/t -> polynomial sum cc[i] u^i, find rational roots
    poly = cc
    while len(poly) > 1:
        root = _find_rational_root(poly)
        if root is None:
            break
        mult = 0
        while True:
            quo, rem = _divide_linear(poly, root)
            if rem != 0:
                break
            poly = quo
            mult += 1
            if len(poly) == 1:
                break
        roots.append(((root.numerator, root.denominator), mult))
    return roots, poly


def _find_rational_root(poly):
    """One rational root of sum poly[i] u^i with poly[-1] != 0, or None."""
    # strip u = 0 roots first
    if poly[0] == 0:
        return Fraction(0)
    den = 1
    for c in poly:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in poly]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    ints = [v // g for v in ints]
    a0, an = ints[0], ints[-1]

    def divisors(m):
        m = abs(m)
        out = []
        d = 1
        while d * d <= m:
            if m % d == 0:
                out.append(d)
                out.append(m // d)
            d += 1
        return sorted(set(out))

    for p in divisors(a0):
        for q in divisors(an):
            if gcd(p, q) != 1:
                continue
            for s in (1, -1):
                u = Fraction(s * p, q)
                val = Fraction(0)
                for c in reversed(ints):
                    val = val * u + c
                if val == 0:
                    return u
    return None


def _divide_linear(poly, root):
    """Divide sum poly[i] u^i by (u - root); returns (quotient, remainder)."""
    out = [Fraction(0)] * (len(poly) - 1)
    acc = Fraction(0)
    for i in range(len(poly) - 1, 0, -1):
        acc = acc * root + poly[i]
        out[i - 1] = acc
    rem = acc * root + poly[0]
    return out, rem


def restrict_to_line(form: Polynomial, p, q) -> BinaryFormFactorization:
    """Restrict a homogeneous form over Q to the line through p and q.

    Substitutes s*p + t*q, factors the binary form over Q, and maps each
    rational root [s0:t0] back to the projective point s0*p + t0*q.  A form
    containing the line is reported via identically_zero.
    """
    ring = form.ring
    if ring.field != QQ:
        raise ValueError("restrict_to_line works over Q")
    if not form.is_homogeneous():
        raise ValueError("form must be homogeneous")
    p = normalize_projective(p)
    q = normalize_projective(q)
    if p == q:
        raise ValueError("the two points must be distinct")
    st = Ring(["s", "t"], QQ)
    s, t = st.gens()
    images = {}
    for i in range(ring.nvars):
        images[i] = s.scale(p[i]) + t.scale(q[i])
    restricted = form.substitute(images)
    n = form.total_degree()
    if restricted.is_zero():
        return BinaryFormFactorization(n, [], None, identically_zero=True)
    coeffs = _binary_coeffs(restricted)
    raw_roots, leftover = _rational_roots_of_binary_form(coeffs)
    roots = []
    for (s0, t0), mult in raw_roots:
        pt = normalize_projective([s0 * a + t0 * b for a, b in zip(p, q)])
        roots.append((pt, mult))
    nonsplit = None
    if len(leftover) > 1:
        terms = {}
        for i, c in enumerate(leftover):
            if c != 0:
                terms[(i, len(leftover) - 1 - i)] = QQ.coerce(c)
        nonsplit = Polynomial(st, terms)
    fact = BinaryFormFactorization(n, roots, nonsplit)
    fact.check()
    return fact
