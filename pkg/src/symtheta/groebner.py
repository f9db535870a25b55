"""Buchberger engine and Hilbert-polynomial certification.

Gröbner bases are computed in graded reverse lexicographic order with
Gebauer-Möller pair elimination and normal selection.  Over F_p the inner
reduction runs on packed int64 monomial arrays through the selected kernel
backend (numba or numpy); over Q a dict-based reduction with exact
Fractions is used for the small inputs that need characteristic zero.

Dimension, degree and arithmetic genus of a projective scheme are read off
the Hilbert polynomial of the leading-term ideal, which makes the answers
independent of saturation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial

import numpy as np

from . import gb_backend
from .packing import (
    key_divides,
    key_lcm,
    key_mul,
    pack_exponent,
    pack_poly,
    unpack_poly,
)
from .poly import Polynomial, PrimeField, RationalField, Ring, grevlex_key

DEFAULT_PRIME = 31991
CROSSCHECK_PRIME = 32003
THIRD_PRIME = 32009


# ---------------------------------------------------------------------------
# pair management (shared by both coefficient engines)
# ---------------------------------------------------------------------------


def _gm_update(pairs, lms, t):
    """Gebauer-Möller installation of element t into the pair set.

    ``pairs`` is a list of (lcm_key, i, j); ``lms`` the leading-monomial keys
    of the basis including the new element at index t.
    """
    new_lcm = [key_lcm(lms[i], lms[t]) for i in range(t)]
    keep = []
    for i in range(t):
        li = new_lcm[i]
        dominated = False
        for j in range(t):
            lj = new_lcm[j]
            if j != i and lj != li and key_divides(lj, li):
                dominated = True
                break
        if not dominated:
            keep.append(i)
    by_lcm = {}
    for i in keep:
        by_lcm.setdefault(new_lcm[i], []).append(i)
    fresh = []
    for l in sorted(by_lcm):
        idxs = by_lcm[l]
        if any(key_mul(lms[i], lms[t]) == l for i in idxs):
            continue  # coprime leading monomials: S-polynomial reduces to 0
        fresh.append((l, idxs[0], t))
    out = []
    for (l, i, j) in pairs:
        if (
            key_divides(lms[t], l)
            and key_lcm(lms[i], lms[t]) != l
            and key_lcm(lms[j], lms[t]) != l
        ):
            continue
        out.append((l, i, j))
    out.extend(fresh)
    return out


def _buchberger(seed_polys, engine):
    """Generic Buchberger loop; engine supplies nf/spoly/lm primitives."""
    basis = []
    lms = []
    pairs = []
    todo = sorted(seed_polys, key=engine.lm_key_of)
    for f in todo:
        r = engine.nf(f, basis)
        if engine.is_zero(r):
            continue
        basis.append(engine.monic(r))
        lms.append(engine.lm_key_of(basis[-1]))
        engine.on_basis_change(basis)
        pairs = _gm_update(pairs, lms, len(basis) - 1)
    while pairs:
        k = min(range(len(pairs)), key=lambda idx: pairs[idx][0])
        _, i, j = pairs.pop(k)
        s = engine.spoly(basis[i], basis[j])
        r = engine.nf(s, basis)
        if engine.is_zero(r):
            continue
        basis.append(engine.monic(r))
        lms.append(engine.lm_key_of(basis[-1]))
        engine.on_basis_change(basis)
        pairs = _gm_update(pairs, lms, len(basis) - 1)
    # minimalize
    order = sorted(range(len(basis)), key=lambda i: lms[i])
    kept = []
    for i in order:
        if any(key_divides(lms[j], lms[i]) for j in kept):
            continue
        kept.append(i)
    minimal = [basis[i] for i in kept]
    # interreduce tails
    reduced = []
    for i in range(len(minimal)):
        others = [g for j, g in enumerate(minimal) if j != i]
        engine.on_basis_change(others)
        reduced.append(engine.monic(engine.nf(minimal[i], others)))
    engine.on_basis_change(reduced)
    reduced.sort(key=engine.lm_key_of)
    return reduced


class _FpEngine:
    """Packed-array engine over F_p; reduction goes through gb_backend."""

    def __init__(self, p):
        self.p = p
        self._flat = None

    def lm_key_of(self, f):
        return int(f[0][0])

    def is_zero(self, f):
        return f[0].size == 0

    def monic(self, f):
        keys, coeffs = f
        lc = int(coeffs[0])
        if lc == 1:
            return f
        inv = pow(lc, self.p - 2, self.p)
        return keys, (coeffs * inv) % self.p

    def on_basis_change(self, basis):
        self._flat = None
        self._basis_ref = basis

    def _flatten(self):
        if self._flat is None:
            basis = self._basis_ref
            if basis:
                gk = np.concatenate([f[0] for f in basis])
                gc = np.concatenate([f[1] for f in basis])
                glen = np.array([f[0].size for f in basis], dtype=np.int64)
                goff = np.zeros(len(basis), dtype=np.int64)
                np.cumsum(glen[:-1], out=goff[1:])
                glm = np.array([f[0][0] for f in basis], dtype=np.int64)
            else:
                gk = np.empty(0, np.int64)
                gc = np.empty(0, np.int64)
                glen = np.empty(0, np.int64)
                goff = np.empty(0, np.int64)
                glm = np.empty(0, np.int64)
            self._flat = (gk, gc, goff, glen, glm)
        return self._flat

    def nf(self, f, basis):
        if not basis:
            return f
        self.on_basis_change(basis)
        gk, gc, goff, glen, glm = self._flatten()
        keys, coeffs = gb_backend.normal_form(f[0], f[1], gk, gc, goff, glen, glm, self.p)
        return keys, coeffs

    def spoly(self, f, g):
        lf = int(f[0][0])
        lg = int(g[0][0])
        l = key_lcm(lf, lg)
        return gb_backend.add_scaled_shifted(
            f[0], f[1], 1, l - lf, g[0], g[1], self.p - 1, l - lg, self.p
        )


class _QQEngine:
    """Dict-based engine over Q with exact Fraction arithmetic."""

    def lm_key_of(self, f):
        return pack_exponent(max(f, key=grevlex_key))

    def is_zero(self, f):
        return not f

    def monic(self, f):
        lm = max(f, key=grevlex_key)
        lc = f[lm]
        if lc == 1:
            return dict(f)
        return {e: _qdiv(c, lc) for e, c in f.items()}

    def on_basis_change(self, basis):
        pass

    def nf(self, f, basis):
        f = dict(f)
        lm_cache = [(max(g, key=grevlex_key), g) for g in basis]
        out = {}
        while f:
            lm = max(f, key=grevlex_key)
            hit = None
            for glm, g in lm_cache:
                if all(a >= b for a, b in zip(lm, glm)):
                    hit = (glm, g)
                    break
            if hit is None:
                out[lm] = f.pop(lm)
                continue
            glm, g = hit
            c = _qdiv(f[lm], g[glm])
            delta = tuple(a - b for a, b in zip(lm, glm))
            for e, v in g.items():
                e2 = tuple(a + b for a, b in zip(e, delta))
                s = f.get(e2, 0) - c * v
                if s == 0:
                    f.pop(e2, None)
                else:
                    f[e2] = s
        return out

    def spoly(self, f, g):
        lmf = max(f, key=grevlex_key)
        lmg = max(g, key=grevlex_key)
        l = tuple(max(a, b) for a, b in zip(lmf, lmg))
        df = tuple(a - b for a, b in zip(l, lmf))
        dg = tuple(a - b for a, b in zip(l, lmg))
        out = {}
        for e, v in f.items():
            e2 = tuple(a + b for a, b in zip(e, df))
            out[e2] = out.get(e2, 0) + _qdiv(v, f[lmf])
        for e, v in g.items():
            e2 = tuple(a + b for a, b in zip(e, dg))
            s = out.get(e2, 0) - _qdiv(v, g[lmg])
            if s == 0:
                out.pop(e2, None)
            else:
                out[e2] = s
        return {e: v for e, v in out.items() if v != 0}


def _qdiv(a, b):
    c = Fraction(a) / Fraction(b)
    return int(c) if c.denominator == 1 else c


def groebner_basis(generators, ring=None):
    """Reduced Gröbner basis (degrevlex) of a list of Polynomials.

    The coefficient field is the ring's own; returns monic Polynomials
    sorted by ascending leading monomial.
    """
    gens = [g for g in generators if not g.is_zero()]
    if ring is None:
        if not gens:
            raise ValueError("no generators and no ring given")
        ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise ValueError("generators live in different rings")
    field = ring.field
    if gens and all(len(g.terms) == 1 for g in gens):
        # a monomial ideal's reduced basis is its minimal generating set
        minimal = minimalize_monomials([next(iter(g.terms)) for g in gens])
        one = field.coerce(1)
        return [
            Polynomial(ring, {e: one})
            for e in sorted(minimal, key=lambda e: grevlex_key(e))
        ]
    if isinstance(field, PrimeField):
        engine = _FpEngine(field.p)
        packed = [pack_poly(g.terms, ring.nvars, field.p) for g in gens]
        packed = [f for f in packed if f[0].size]
        reduced = _buchberger(packed, engine)
        return [
            Polynomial(ring, unpack_poly(keys, coeffs, ring.nvars))
            for keys, coeffs in reduced
        ]
    if isinstance(field, RationalField):
        engine = _QQEngine()
        dicts = [dict(g.terms) for g in gens]
        reduced = _buchberger(dicts, engine)
        return [Polynomial(ring, d) for d in reduced]
    raise ValueError(f"unsupported coefficient field {field!r}")


def reduce_by_basis(f: Polynomial, basis) -> Polynomial:
    """Full normal form of f against a Gröbner basis."""
    ring = f.ring
    field = ring.field
    if isinstance(field, PrimeField):
        engine = _FpEngine(field.p)
        packed = [pack_poly(g.terms, ring.nvars, field.p) for g in basis]
        fk = pack_poly(f.terms, ring.nvars, field.p)
        keys, coeffs = engine.nf(fk, packed)
        return Polynomial(ring, unpack_poly(keys, coeffs, ring.nvars))
    engine = _QQEngine()
    return Polynomial(ring, engine.nf(dict(f.terms), [dict(g.terms) for g in basis]))


def is_groebner_basis(basis) -> bool:
    """Brute-force S-polynomial criterion (for tests and audits)."""
    if not basis:
        return True
    ring = basis[0].ring
    field = ring.field
    if isinstance(field, PrimeField):
        engine = _FpEngine(field.p)
        packed = [pack_poly(g.terms, ring.nvars, field.p) for g in basis]
        for i, j in combinations(range(len(packed)), 2):
            s = engine.spoly(packed[i], packed[j])
            if not engine.is_zero(engine.nf(s, packed)):
                return False
        return True
    engine = _QQEngine()
    dicts = [dict(g.terms) for g in basis]
    for i, j in combinations(range(len(dicts)), 2):
        s = engine.spoly(dicts[i], dicts[j])
        if not engine.is_zero(engine.nf(s, dicts)):
            return False
    return True


# ---------------------------------------------------------------------------
# Hilbert series of monomial ideals
# ---------------------------------------------------------------------------


def minimalize_monomials(exps):
    """Minimal generating set of the monomial ideal spanned by ``exps``."""
    uniq = sorted(set(map(tuple, exps)), key=lambda e: (sum(e), e))
    out = []
    for e in uniq:
        if not any(all(a >= b for a, b in zip(e, f)) for f in out):
            out.append(e)
    return out


def _series_mul_one_minus(coeffs, d):
    out = list(coeffs) + [0] * d
    for i, c in enumerate(coeffs):
        out[i + d] -= c
    return out


def _series_add_shift(a, b, shift):
    out = list(a) + [0] * max(0, shift + len(b) - len(a))
    for i, c in enumerate(b):
        out[i + shift] += c
    return out


def hilbert_numerator(exps, nvars):
    """Numerator of the Hilbert series of R/I over (1-t)^nvars, I monomial."""
    gens = minimalize_monomials(exps)
    memo = {}

    def rec(gens):
        if not gens:
            return [1]
        if any(sum(e) == 0 for e in gens):
            return [0]
        key = tuple(gens)
        got = memo.get(key)
        if got is not None:
            return got
        pure = [e for e in gens if sum(1 for x in e if x) == 1]
        if len(pure) == len(gens):
            out = [1]
            for e in gens:
                out = _series_mul_one_minus(out, sum(e))
            memo[key] = out
            return out
        # pivot: the variable hitting the most mixed generators
        counts = [0] * nvars
        for e in gens:
            if sum(1 for x in e if x) > 1:
                for i, x in enumerate(e):
                    if x:
                        counts[i] += 1
        piv = max(range(nvars), key=lambda i: counts[i])
        # I + (x_piv)
        plus = [e for e in gens if e[piv] == 0]
        e_piv = tuple(1 if i == piv else 0 for i in range(nvars))
        plus.append(e_piv)
        # I : x_piv
        quot = minimalize_monomials(
            [tuple(max(0, x - 1) if i == piv else x for i, x in enumerate(e)) for e in gens]
        )
        out = _series_add_shift(rec(tuple(sorted(plus))), rec(tuple(sorted(quot))), 1)
        memo[key] = out
        return out

    return rec(tuple(sorted(gens)))


@dataclass
class HilbertSummary:
    """Projective dimension, degree and Hilbert polynomial of R/I."""

    proj_dimension: int
    degree: int | None
    hilbert_polynomial: list  # Fraction coefficients, ascending powers of m
    arithmetic_genus: int | None = None

    def hp_at(self, m):
        return sum(c * m**i for i, c in enumerate(self.hilbert_polynomial))


def _binomial_poly(offset, top):
    """Coefficients of binomial(m + offset, top) as a polynomial in m."""
    # product_{r=1..top} (m + offset - top + r) / top!
    coeffs = [Fraction(1)]
    for r in range(1, top + 1):
        c = offset - top + r
        new = [Fraction(0)] * (len(coeffs) + 1)
        for i, a in enumerate(coeffs):
            new[i] += a * c
            new[i + 1] += a
        coeffs = new
    f = Fraction(1, factorial(top))
    return [a * f for a in coeffs]


def summary_from_leading_terms(lt_exps, nvars) -> HilbertSummary:
    num = hilbert_numerator(lt_exps, nvars)
    while num and num[-1] == 0:
        num.pop()
    if not num:  # unit ideal
        return HilbertSummary(-1, None, [])
    # cancel (1-t)^k
    k = 0
    q = list(num)
    while sum(q) == 0:
        # synthetic division by (1 - t): q / (1-t)
        acc = 0
        out = []
        for c in q[:-1]:
            acc += c
            out.append(acc)
        q = out
        k += 1
    dim_proj = (nvars - k) - 1
    if dim_proj < 0:
        return HilbertSummary(-1, None, [])
    degree = sum(q)
    top = dim_proj
    hp = [Fraction(0)] * (top + 1)
    for j, c in enumerate(q):
        if c == 0:
            continue
        for i, a in enumerate(_binomial_poly(top - j, top)):
            hp[i] += c * a
    genus = None
    if dim_proj == 1:
        genus = int(1 - hp[0])
    return HilbertSummary(dim_proj, int(degree), hp, genus)


# ---------------------------------------------------------------------------
# ideals and the certified queries
# ---------------------------------------------------------------------------


class Ideal:
    """Generator list with a cached reduced Gröbner basis per field."""

    def __init__(self, ring: Ring, generators):
        self.ring = ring
        gens = []
        for g in generators:
            if isinstance(g, str):
                from .poly import parse_poly

                g = parse_poly(g, ring)
            if g.ring != ring:
                raise ValueError("generator ring mismatch")
            if not g.is_zero():
                gens.append(g)
        self.generators = gens
        self._cache = {}

    def groebner_basis(self):
        key = self.ring.field
        if key not in self._cache:
            self._cache[key] = groebner_basis(self.generators, self.ring)
        return self._cache[key]

    def with_field(self, field) -> "Ideal":
        if field == self.ring.field:
            return self
        target = Ring(self.ring.variables, field)
        return Ideal(target, [g.reduce_mod(target) for g in self.generators])

    def hilbert_summary(self) -> HilbertSummary:
        for g in self.generators:
            if not g.is_homogeneous():
                raise ValueError("hilbert_summary requires homogeneous generators")
        gb = self.groebner_basis()
        lt = [g.leading_term()[0] for g in gb]
        return summary_from_leading_terms(lt, self.ring.nvars)

    def to_json(self) -> str:
        return json.dumps(
            {
                "ring": list(self.ring.variables),
                "field": self.ring.field.name,
                "generators": [str(g) for g in self.generators],
            }
        )

    @staticmethod
    def from_json(text: str) -> "Ideal":
        from .poly import field_from_name, parse_poly

        data = json.loads(text)
        ring = Ring(data["ring"], field_from_name(data["field"]))
        return Ideal(ring, [parse_poly(s, ring) for s in data["generators"]])

    def __repr__(self):
        return f"<Ideal with {len(self.generators)} generators over {self.ring!r}>"


def hilbert_summary(ideal: Ideal) -> HilbertSummary:
    return ideal.hilbert_summary()


def singular_locus_ideal(ideal: Ideal, expected_codim: int) -> Ideal:
    """The ideal plus the expected_codim-minors of the Jacobian matrix."""
    from .polymat import PolyMatrix, determinant

    gens = ideal.generators
    jac = [[g.partial_derivative(i) for i in range(ideal.ring.nvars)] for g in gens]
    minors = []
    c = expected_codim
    for rows in combinations(range(len(gens)), c):
        for cols in combinations(range(ideal.ring.nvars), c):
            sub = PolyMatrix([[jac[i][j] for j in cols] for i in rows])
            d = determinant(sub)
            if not d.is_zero():
                minors.append(d)
    return Ideal(ideal.ring, list(gens) + minors)


def is_projectively_empty(ideal: Ideal) -> bool:
    return ideal.hilbert_summary().proj_dimension < 0


def monomial_minimal_primes(ideal: Ideal):
    """Minimal primes of a monomial ideal, as sorted tuples of variable names."""
    supports = []
    for g in ideal.generators:
        if len(g.terms) != 1:
            raise ValueError(f"non-monomial generator {g}")
        (e,) = g.terms
        supports.append(frozenset(i for i, x in enumerate(e) if x))
    supports = [s for s in supports if s]  # constants excluded upstream
    primes = [frozenset()]
    for sup in sorted(supports, key=len):
        new = []
        for s in primes:
            if s & sup:
                new.append(s)
            else:
                for v in sorted(sup):
                    new.append(s | {v})
        # prune non-minimal candidates as we go
        new = sorted(set(new), key=len)
        pruned = []
        for s in new:
            if not any(t < s for t in pruned):
                pruned.append(s)
        primes = pruned
    primes = [s for s in primes if not any(t < s for t in primes)]
    names = ideal.ring.variables
    return sorted(tuple(sorted(names[i] for i in s)) for s in set(primes))


def zero_dim_degree(ideal: Ideal) -> int:
    """Vector-space dimension of ring/ideal for a zero-dimensional ideal.

    Generators may be inhomogeneous (affine fiber ideals).  On
    positive-dimensional input raises ValueError reporting the affine
    dimension found.
    """
    gb = ideal.groebner_basis()
    if any(g.is_constant() and not g.is_zero() for g in gb):
        return 0
    n = ideal.ring.nvars
    lt = minimalize_monomials([g.leading_term()[0] for g in gb])
    bounds = [None] * n
    for e in lt:
        nz = [i for i, x in enumerate(e) if x]
        if len(nz) == 1:
            i = nz[0]
            if bounds[i] is None or e[i] < bounds[i]:
                bounds[i] = e[i]
    if any(b is None for b in bounds):
        mon = Ideal(ideal.ring, [Polynomial(ideal.ring, {e: ideal.ring.field.coerce(1)}) for e in lt])
        primes = monomial_minimal_primes(mon)
        dim = n - min(len(s) for s in primes)
        raise ValueError(f"ideal is not zero-dimensional (affine dimension {dim})")

    from itertools import product as iproduct

    count = 0
    for exp in iproduct(*(range(b) for b in bounds)):
        if not any(all(a >= b for a, b in zip(exp, e)) for e in lt):
            count += 1
    return count


def multiplicity_at(form: Polynomial, point):
    """Multiplicity of a homogeneous form at a projective point, with the
    tangent cone (lowest-degree homogeneous part after translation).

    Returns (multiplicity, tangent_cone, chart_ring) where the tangent cone
    lives in the affine chart ring obtained by deleting the pivot variable.
    """
    from .lines import normalize_projective

    ring = form.ring
    pt = [Fraction(x) for x in point]
    if all(x == 0 for x in pt):
        raise ValueError("zero vector is not a projective point")
    pivot = next(i for i, x in enumerate(pt) if x != 0)
    pt = [x / pt[pivot] for x in pt]
    chart_vars = [v for i, v in enumerate(ring.variables) if i != pivot]
    chart = Ring(chart_vars, ring.field)
    gens = chart.gens()
    images = {}
    gi = 0
    for i in range(ring.nvars):
        if i == pivot:
            images[i] = chart.one()
        else:
            images[i] = gens[gi] + chart.const(pt[i])
            gi += 1
    local = form.substitute(images)
    if local.is_zero():
        raise ValueError("form vanishes identically in the chart")
    mult = local.min_degree()
    cone = local.homogeneous_part(mult)
    _ = normalize_projective(point)  # validates the input point
    return mult, cone, chart
