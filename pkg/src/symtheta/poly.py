"""Sparse multivariate polynomials with exact coefficients.

Two coefficient domains are supported: the rationals (arbitrary-precision
``int``/``Fraction``) and prime fields F_p with p < 2**31.  No floating
point is used anywhere.  Terms are stored as a dict mapping exponent
tuples to nonzero coefficients; printing and the default monomial order
are graded reverse lexicographic.
"""

from __future__ import annotations

import re
from fractions import Fraction


class RationalField:
    """The field Q.  Coefficients are Python ints or Fractions."""

    name = "Q"

    def coerce(self, x):
        if isinstance(x, (int, Fraction)):
            if isinstance(x, Fraction) and x.denominator == 1:
                return int(x)
            return x
        raise TypeError(f"cannot coerce {x!r} into Q")

    def add(self, a, b):
        c = a + b
        if isinstance(c, Fraction) and c.denominator == 1:
            return int(c)
        return c

    def mul(self, a, b):
        c = a * b
        if isinstance(c, Fraction) and c.denominator == 1:
            return int(c)
        return c

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return self.coerce(Fraction(1, 1) / a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin, valid for n < 3.3e24
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The field F_p for a prime p < 2**31."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        if p >= 2**31:
            raise ValueError("prime too large for the packed kernels")
        self.p = p
        self.name = f"Fp:{p}"

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return x.numerator * pow(den, self.p - 2, self.p) % self.p
        raise TypeError(f"cannot coerce {x!r} into F_{self.p}")

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in F_{self.p}")
        return pow(a, self.p - 2, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_name(name: str):
    if name == "Q":
        return QQ
    if name.startswith("Fp:"):
        return GF(int(name[3:]))
    raise ValueError(f"unknown field name {name!r}")


class Ring:
    """A polynomial ring: an ordered tuple of variable names over a field."""

    def __init__(self, variables, field=QQ):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        for v in variables:
            if not re.fullmatch(r"[a-zA-Z][a-zA-Z0-9]*", v):
                raise ValueError(f"bad variable name {v!r}")
        self.variables = variables
        self.field = field
        self.nvars = len(variables)
        self._index = {v: i for i, v in enumerate(variables)}

    def var_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = self.field.coerce(c)
        if c == 0:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.nvars: c})

    def gen(self, i) -> "Polynomial":
        if isinstance(i, str):
            i = self.var_index(i)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.coerce(1)})

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and other.variables == self.variables
            and other.field == self.field
        )

    def __hash__(self):
        return hash((self.variables, self.field))

    def __repr__(self):
        return f"{self.field.name}[{','.join(self.variables)}]"


def xring(n: int, field=QQ, prefix="x", start=0) -> Ring:
    """Ring with variables prefix0..prefix{n-1} (or starting at `start`)."""
    return Ring([f"{prefix}{i}" for i in range(start, start + n)], field)


def grevlex_key(exp):
    """Sort key: bigger key = bigger monomial in graded reverse lex."""
    return (sum(exp),) + tuple(-e for e in reversed(exp))


class Polynomial:
    """Immutable sparse polynomial.  Do not mutate ``terms`` after creation."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def from_terms(ring, items) -> "Polynomial":
        f = ring.field
        terms = {}
        for exp, c in items:
            exp = tuple(exp)
            if len(exp) != ring.nvars:
                raise ValueError("exponent length does not match ring")
            c = f.coerce(c)
            if exp in terms:
                c = f.add(terms[exp], c)
            if c == 0:
                terms.pop(exp, None)
            else:
                terms[exp] = c
        return Polynomial(ring, terms)

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(e) == 0 for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def min_degree(self) -> int:
        if not self.terms:
            return -1
        return min(sum(e) for e in self.terms)

    def degree_in(self, var) -> int:
        if isinstance(var, str):
            var = self.ring.var_index(var)
        if not self.terms:
            return -1
        return max(e[var] for e in self.terms)

    # -- arithmetic ----------------------------------------------------------

    def _coerce_other(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce_other(other)
        f = self.ring.field
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = f.add(terms.get(e, 0), c)
            if s == 0:
                terms.pop(e, None)
            else:
                terms[e] = s
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, {e: f.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce_other(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce_other(other)
        f = self.ring.field
        n = self.ring.nvars
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(e1[i] + e2[i] for i in range(n))
                s = f.add(terms.get(e, 0), f.mul(c1, c2))
                if s == 0:
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        f = self.ring.field
        c = f.coerce(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, {e: f.mul(v, c) for e, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- structure -----------------------------------------------------------

    def sorted_terms(self):
        """Terms in descending graded reverse lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grevlex_key)
        return e, self.terms[e]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(self.ring.field.inv(self.leading_coefficient()))

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial(self.ring, {e: c for e, c in self.terms.items() if sum(e) == d})

    def content_and_primitive(self):
        """Over Q only: (c, p) with self = c*p, p integer with content 1.

        The sign of c is chosen so that p has positive leading coefficient.
        """
        from math import gcd

        if self.ring.field != QQ:
            raise ValueError("content only defined over Q")
        if self.is_zero():
            return 0, self
        den = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                den = den * c.denominator // gcd(den, c.denominator)
        ints = {e: int(c * den) for e, c in self.terms.items()}
        g = 0
        for c in ints.values():
            g = gcd(g, abs(c))
        lead = ints[max(ints, key=grevlex_key)]
        if lead < 0:
            g = -g
        prim = Polynomial(self.ring, {e: c // g for e, c in ints.items()})
        return Fraction(g, den), prim

    def primitive(self) -> "Polynomial":
        return self.content_and_primitive()[1]

    # -- calculus ------------------------------------------------------------

    def partial_derivative(self, var) -> "Polynomial":
        if isinstance(var, str):
            var = self.ring.var_index(var)
        f = self.ring.field
        terms = {}
        for e, c in self.terms.items():
            k = e[var]
            if k == 0:
                continue
            e2 = e[:var] + (k - 1,) + e[var + 1 :]
            s = f.add(terms.get(e2, 0), f.mul(c, f.coerce(k)))
            if s == 0:
                terms.pop(e2, None)
            else:
                terms[e2] = s
        return Polynomial(self.ring, terms)

    def gradient(self):
        return [self.partial_derivative(i) for i in range(self.ring.nvars)]

    # -- maps ----------------------------------------------------------------

    def substitute(self, assignment: dict) -> "Polynomial":
        """Compose with the ring map sending each variable to a polynomial.

        ``assignment`` maps variable names (or indices) to Polynomials over a
        single common target ring; constants are accepted too.  Every variable
        actually occurring in self must be covered.
        """
        ring = self.ring
        images = {}
        target = None
        for k, v in assignment.items():
            i = ring.var_index(k) if isinstance(k, str) else k
            if isinstance(v, Polynomial):
                if target is None:
                    target = v.ring
                elif v.ring != target:
                    raise ValueError("assignment images live in different rings")
            images[i] = v
        if target is None:
            target = ring
        used = set()
        for e in self.terms:
            for i, k in enumerate(e):
                if k:
                    used.add(i)
        missing = used - set(images)
        if missing:
            names = [ring.variables[i] for i in sorted(missing)]
            raise ValueError(f"assignment does not cover variables {names}")
        for i in images:
            if not isinstance(images[i], Polynomial):
                images[i] = target.const(images[i])
        result = target.zero()
        # cache powers of each image
        powers = {i: {0: target.one()} for i in images}

        def img_pow(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = img_pow(i, k - 1) * images[i]
            return cache[k]

        for e, c in self.terms.items():
            t = target.const(c if not isinstance(c, Fraction) else c)
            for i, k in enumerate(e):
                if k:
                    t = t * img_pow(i, k)
            result = result + t
        return result

    def evaluate(self, point):
        """Evaluate at a tuple of field elements (exact)."""
        f = self.ring.field
        point = [f.coerce(x) for x in point]
        if len(point) != self.ring.nvars:
            raise ValueError("point length does not match ring")
        total = f.coerce(0)
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                for _ in range(k):
                    v = f.mul(v, point[i])
            total = f.add(total, v)
        return total

    def reduce_mod(self, target_ring: Ring) -> "Polynomial":
        """Image under Q -> F_p on coefficients (same variable names)."""
        if target_ring.variables != self.ring.variables:
            raise ValueError("variable mismatch")
        f = target_ring.field
        terms = {}
        for e, c in self.terms.items():
            v = f.coerce(c)
            if v != 0:
                terms[e] = v
        return Polynomial(target_ring, terms)

    # -- printing ------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        vars_ = self.ring.variables
        chunks = []
        for e, c in self.sorted_terms():
            factors = []
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(vars_[i])
                elif k > 1:
                    factors.append(f"{vars_[i]}^{k}")
            neg = (isinstance(c, (int, Fraction)) and c < 0)
            mag = -c if neg else c
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            if not chunks:
                chunks.append(("-" if neg else "") + body)
            else:
                chunks.append(("- " if neg else "+ ") + body)
        return " ".join(chunks)

    def __repr__(self):
        return f"<{self} over {self.ring!r}>"


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<var>[a-zA-Z][a-zA-Z0-9]*)|(?P<op>[-+*/^()]))"
)


class ParseError(ValueError):
    pass


def _tokenize(text):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"malformed token at {text[pos:pos+10]!r}")
        if m.group("num") is not None:
            out.append(("num", int(m.group("num"))))
        elif m.group("var") is not None:
            out.append(("var", m.group("var")))
        else:
            out.append(("op", m.group("op")))
        pos = m.end()
    out.append(("end", None))
    return out


class _Parser:
    """Recursive descent over sums, products, integer/rational literals,
    powers and parenthesized groups.  The printer only ever emits the flat
    sum-of-terms form, so parse(print(p)) == p."""

    def __init__(self, tokens, ring):
        self.toks = tokens
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.i]

    def next(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val = self.next()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, got {val!r}")

    def parse_expr(self):
        sign = 1
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.next()
            sign = -1 if val == "-" else 1
        result = self.parse_term()
        if sign < 0:
            result = -result
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                term = self.parse_term()
                result = result + term if val == "+" else result - term
            else:
                return result

    def parse_term(self):
        result = self.parse_factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.next()
                result = result * self.parse_factor()
            else:
                return result

    def parse_factor(self):
        base = self.parse_atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.next()
            kind, val = self.next()
            if kind != "num":
                raise ParseError("exponent must be a nonnegative integer")
            return base**val
        return base

    def parse_atom(self):
        kind, val = self.next()
        if kind == "num":
            k2, v2 = self.peek()
            if k2 == "op" and v2 == "/":
                self.next()
                k3, v3 = self.next()
                if k3 != "num":
                    raise ParseError("coefficient must be an integer or a/b rational")
                return self.ring.const(Fraction(val, v3))
            return self.ring.const(val)
        if kind == "var":
            return self.ring.gen(self.ring.var_index(val))
        if kind == "op" and val == "(":
            inner = self.parse_expr()
            self.expect_op(")")
            return inner
        if kind == "op" and val == "-":
            return -self.parse_atom()
        raise ParseError(f"unexpected token {val!r}")


def parse_poly(text: str, ring: Ring) -> Polynomial:
    """Parse polynomial text over the given ring.

    Raises KeyError for unknown variables and ParseError for malformed input.
    """
    parser = _Parser(_tokenize(text), ring)
    p = parser.parse_expr()
    kind, val = parser.peek()
    if kind != "end":
        raise ParseError(f"trailing input at {val!r}")
    return p


def poly_str(p: Polynomial) -> str:
    return str(p)
