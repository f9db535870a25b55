"""Matrices of polynomials: division-free determinants and pfaffians.

Determinants use Laplace expansion memoized over column subsets, which is
fraction-free and fast for the sizes occurring here (up to 8).  Pfaffians
use recursive first-row expansion; the sign convention is fixed by
pf([[0, a], [-a, 0]]) = +a.
"""

from __future__ import annotations

from .poly import Polynomial, Ring


class NotAntisymmetricError(ValueError):
    def __init__(self, i, j):
        super().__init__(f"matrix is not antisymmetric at entry pair ({i},{j})/({j},{i})")
        self.entry = (i, j)


class PolyMatrix:
    """Rectangular grid of polynomials over one common ring."""

    def __init__(self, entries):
        entries = [list(row) for row in entries]
        if not entries or not entries[0]:
            raise ValueError("empty matrix")
        cols = len(entries[0])
        ring = None
        for row in entries:
            if len(row) != cols:
                raise ValueError("ragged rows")
            for p in row:
                if not isinstance(p, Polynomial):
                    raise TypeError("entries must be Polynomials")
                if ring is None:
                    ring = p.ring
                elif p.ring != ring:
                    raise ValueError("entries live in different rings")
        self.entries = entries
        self.rows = len(entries)
        self.cols = cols
        self.ring = ring

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix([[self.entries[i][j] for i in range(self.rows)]
                           for j in range(self.cols)])

    def submatrix(self, row_idx, col_idx) -> "PolyMatrix":
        return PolyMatrix([[self.entries[i][j] for j in col_idx] for i in row_idx])

    def principal(self, idx) -> "PolyMatrix":
        return self.submatrix(idx, idx)

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix([[fn(p) for p in row] for row in self.entries])

    def matvec(self, vec):
        if len(vec) != self.cols:
            raise ValueError("length mismatch")
        out = []
        for i in range(self.rows):
            s = self.ring.zero()
            for j in range(self.cols):
                s = s + self.entries[i][j] * vec[j]
            out.append(s)
        return out

    def is_antisymmetric(self) -> bool:
        try:
            check_antisymmetric(self)
        except NotAntisymmetricError:
            return False
        return True

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix) and other.rows == self.rows
                and other.cols == self.cols and other.entries == self.entries)

    def __repr__(self):
        return f"<PolyMatrix {self.rows}x{self.cols} over {self.ring!r}>"


def check_antisymmetric(m: PolyMatrix):
    """Exact check of m^T = -m, reporting the first offending entry pair."""
    if m.rows != m.cols:
        raise NotAntisymmetricError(0, 0)
    for i in range(m.rows):
        for j in range(i, m.cols):
            if not (m.entries[i][j] + m.entries[j][i]).is_zero():
                raise NotAntisymmetricError(i, j)


def determinant(m: PolyMatrix) -> Polynomial:
    """Exact determinant by memoized Laplace expansion (division-free)."""
    if m.rows != m.cols:
        raise ValueError("determinant of a nonsquare matrix")
    n = m.rows
    ring = m.ring
    cache = {}

    def minor(row, cols):
        # determinant of rows row..n-1 on the given column tuple
        if not cols:
            return ring.one()
        key = cols
        got = cache.get(key)
        if got is not None:
            return got
        total = ring.zero()
        sign = 1
        for k, j in enumerate(cols):
            a = m.entries[row][j]
            if not a.is_zero():
                rest = cols[:k] + cols[k + 1 :]
                sub = minor(row + 1, rest)
                if not sub.is_zero():
                    term = a * sub
                    total = total + (term if sign > 0 else -term)
            sign = -sign
        cache[key] = total
        return total

    return minor(0, tuple(range(n)))


def pfaffian(m: PolyMatrix, skip_check: bool = False) -> Polynomial:
    """Exact pfaffian via recursive first-row expansion.

    Requires an even-size exactly antisymmetric matrix; pfaffian**2 equals
    the determinant.
    """
    if m.rows != m.cols:
        raise ValueError("pfaffian of a nonsquare matrix")
    if m.rows % 2 != 0:
        raise ValueError("pfaffian of an odd-size matrix")
    if not skip_check:
        check_antisymmetric(m)
    ring = m.ring
    cache = {}

    def pf(idx):
        if not idx:
            return ring.one()
        got = cache.get(idx)
        if got is not None:
            return got
        i0 = idx[0]
        total = ring.zero()
        for k in range(1, len(idx)):
            a = m.entries[i0][idx[k]]
            if a.is_zero():
                continue
            rest = idx[1:k] + idx[k + 1 :]
            sub = pf(rest)
            if sub.is_zero():
                continue
            term = a * sub
            total = total + (term if k % 2 == 1 else -term)
        cache[idx] = total
        return total

    return pf(tuple(range(m.rows)))


def principal_pfaffians(m: PolyMatrix, size: int):
    """All pfaffians of principal antisymmetric size x size submatrices.

    Returns a list of (index-tuple, Polynomial).
    """
    from itertools import combinations

    check_antisymmetric(m)
    out = []
    for idx in combinations(range(m.rows), size):
        out.append((idx, pfaffian(m.principal(idx), skip_check=True)))
    return out


def kernel_pfaffians(m: PolyMatrix):
    """Kernel vector of an odd-size antisymmetric matrix of polynomials.

    Component i is (-1)**i times the pfaffian of m with row/column i
    deleted; the resulting vector v satisfies m . v = 0 identically.
    """
    if m.rows != m.cols:
        raise ValueError("kernel vector needs a square matrix")
    if m.rows % 2 == 0:
        raise ValueError("kernel pfaffians are defined for odd size only")
    check_antisymmetric(m)
    n = m.rows
    out = []
    for i in range(n):
        idx = tuple(j for j in range(n) if j != i)
        p = pfaffian(m.principal(idx), skip_check=True)
        out.append(p if i % 2 == 0 else -p)
    return out


def hessian(p: Polynomial) -> PolyMatrix:
    """Symmetric matrix of second partial derivatives."""
    n = p.ring.nvars
    firsts = [p.partial_derivative(i) for i in range(n)]
    return PolyMatrix([[firsts[i].partial_derivative(j) for j in range(n)]
                       for i in range(n)])


def matrix_of_strings(texts, ring: Ring) -> PolyMatrix:
    from .poly import parse_poly

    return PolyMatrix([[parse_poly(t, ring) for t in row] for row in texts])
