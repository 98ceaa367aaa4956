"""Exact dense linear algebra over Q (Fraction) and prime fields.

Matrices are lists of row lists acting on column vectors.  Subspaces of
F_p^n are represented by row-reduced basis matrices, which doubles as a
canonical form for dictionary keys.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import gcd


class QQ:
    """Rational field operations."""

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def of(x):
        return Fraction(x)

    @staticmethod
    def inv(x):
        return 1 / Fraction(x)


class GF:
    """Prime field F_p with plain int arithmetic mod p."""

    def __init__(self, p: int):
        self.p = p
        self.zero = 0
        self.one = 1

    def of(self, x):
        return x % self.p

    def inv(self, x):
        return pow(x, self.p - 2, self.p)


def _normalize(field, x):
    return x % field.p if isinstance(field, GF) else x


def rref(rows, field):
    """Row-reduce a copy of rows; returns (reduced rows, pivot columns)."""
    mat = [[_normalize(field, field.of(x)) for x in row] for row in rows]
    pivots = []
    r = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        pr = next((k for k in range(r, len(mat)) if mat[k][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = field.inv(mat[r][c])
        mat[r] = [_normalize(field, v * inv) for v in mat[r]]
        for k in range(len(mat)):
            if k != r and mat[k][c]:
                f = mat[k][c]
                mat[k] = [_normalize(field, a - f * b)
                          for a, b in zip(mat[k], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [row for row in mat[:r]], pivots


def rank(rows, field) -> int:
    return len(rref(rows, field)[1])


def nullspace(rows, ncols, field):
    """Basis of {x : A x = 0} for the matrix with the given rows."""
    red, pivots = rref(rows, field)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [field.zero] * ncols
        vec[fc] = field.one
        for r, pc in enumerate(pivots):
            vec[pc] = _normalize(field, -red[r][fc])
        basis.append(vec)
    return basis


def mat_mul(A, B, field):
    if not A or not B:
        return []
    n, m, k = len(A), len(B), len(B[0])
    return [[_normalize(field,
                        sum(A[i][t] * B[t][j] for t in range(m)))
             for j in range(k)] for i in range(n)]


def mat_vec(A, v, field):
    return [_normalize(field, sum(a * x for a, x in zip(row, v))) for row in A]


def transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def zero_matrix(nrows, ncols):
    return [[0] * ncols for _ in range(nrows)]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def primitive_int_vector(vec):
    """Scale a Fraction vector to a primitive integer vector."""
    denoms = [Fraction(x).denominator for x in vec]
    lcm = 1
    for d in denoms:
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(Fraction(x) * lcm) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return ints


# --- subspaces of F_p^n ---------------------------------------------------

def span_canonical(vectors, ncols, field):
    """Canonical (RREF) basis rows of the span."""
    if not vectors:
        return []
    red, _ = rref(vectors, field)
    return red


def annihilator(basis, ncols, field):
    """Linear forms vanishing on span(basis), as row vectors."""
    if not basis:
        return identity(ncols)
    return nullspace(basis, ncols, field)


def preimage(A, sub_basis, src_dim, field):
    """Basis of {x : A x in span(sub_basis)} for A with src_dim columns."""
    if not A:
        # zero-dimensional target: everything maps into the subspace
        return identity(src_dim)
    ann = annihilator(sub_basis, len(A), field)
    if not ann:
        return identity(src_dim)
    constraint = mat_mul(ann, A, field)
    return nullspace(constraint, src_dim, field)


def intersect(basis1, basis2, ncols, field):
    stacked = annihilator(basis1, ncols, field) + annihilator(basis2, ncols, field)
    if not stacked:
        return identity(ncols)
    return nullspace(stacked, ncols, field)


def _rref_patterns(r, k, p):
    """All k x r matrices over F_p in reduced row echelon form."""
    for pivots in combinations(range(r), k):
        free_pos = [(i, j) for i in range(k) for j in range(r)
                    if j > pivots[i] and j not in pivots]
        for values in product(range(p), repeat=len(free_pos)):
            mat = zero_matrix(k, r)
            for i, pc in enumerate(pivots):
                mat[i][pc] = 1
            for (i, j), v in zip(free_pos, values):
                mat[i][j] = v
            yield mat


def subspaces_of(basis, k, ncols, field):
    """All k-dimensional subspaces of span(basis), canonical bases."""
    r = len(basis)
    if k == 0:
        yield []
        return
    if k > r:
        return
    for pat in _rref_patterns(r, k, field.p):
        rows = mat_mul(pat, basis, field)
        yield span_canonical(rows, ncols, field)


def gaussian_binomial(n, k, p):
    num, den = 1, 1
    for t in range(k):
        num *= p ** (n - t) - 1
        den *= p ** (t + 1) - 1
    return num // den
