"""Exact linear algebra over the prime fields GF(p), p in {2, 3, 5, 7, 11, 13}.

Vectors are tuples of ints in [0, p); matrices are tuples of row vectors and
act on the right of row vectors (v @ M combines rows of M).  Every subspace is
stored as its reduced row echelon basis, which is canonical: two Subspace
values are equal (and hash equal) iff they are the same subspace.  That
canonicality is what the rest of the package leans on for caching, set
membership and deterministic output, so nothing here ever returns an
unreduced basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import prod

from .errors import DimensionMismatch, UnsupportedPrime

SUPPORTED_PRIMES = (2, 3, 5, 7, 11, 13)

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def check_prime(p: int) -> int:
    if p not in SUPPORTED_PRIMES:
        raise UnsupportedPrime(f"characteristic {p!r} not in {SUPPORTED_PRIMES}")
    return p


def inv_mod(a: int, p: int) -> int:
    """Multiplicative inverse of a nonzero residue."""
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


def vec_add(u: Vector, v: Vector, p: int) -> Vector:
    return tuple((a + b) % p for a, b in zip(u, v, strict=True))


def vec_sub(u: Vector, v: Vector, p: int) -> Vector:
    return tuple((a - b) % p for a, b in zip(u, v, strict=True))


def vec_scale(c: int, v: Vector, p: int) -> Vector:
    c %= p
    return tuple((c * a) % p for a in v)


def vec_is_zero(v: Vector) -> bool:
    return all(a == 0 for a in v)


def unit_vector(n: int, i: int) -> Vector:
    return tuple(1 if j == i else 0 for j in range(n))


def encode_vector(v: Vector, p: int) -> int:
    """Pack a vector into an int (base-p digits); used for fast vector sets."""
    code = 0
    for a in reversed(v):
        code = code * p + a
    return code


def rref(rows, p: int) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form.

    Returns (rows, pivot_columns) with zero rows dropped, pivots scaled to 1
    and pivot columns cleared above and below.  Input entries may be any ints;
    they are reduced mod p.
    """
    mat = [[a % p for a in row] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = inv_mod(mat[r][c], p)
        if inv != 1:
            mat[r] = [(inv * a) % p for a in mat[r]]
        for i in range(nrows):
            f = mat[i][c]
            if i != r and f:
                row_r = mat[r]
                mat[i] = [(a - f * b) % p for a, b in zip(mat[i], row_r)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return tuple(tuple(row) for row in mat[:r]), tuple(pivots)


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(p)^ambient in canonical (RREF basis) form.

    Construct via span / zero / full, never directly: the rows must already
    be a reduced echelon basis for equality and hashing to mean anything.
    """

    p: int
    ambient: int
    rows: Matrix
    pivots: tuple[int, ...] = field(compare=False, repr=False)

    @classmethod
    def span(cls, p: int, ambient: int, vectors) -> "Subspace":
        check_prime(p)
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient:
                raise DimensionMismatch(
                    f"vector of length {len(v)} in ambient dimension {ambient}"
                )
        rows, pivots = rref(vectors, p)
        return cls(p, ambient, rows, pivots)

    @classmethod
    def zero(cls, p: int, ambient: int) -> "Subspace":
        check_prime(p)
        return cls(p, ambient, (), ())

    @classmethod
    def full(cls, p: int, ambient: int) -> "Subspace":
        check_prime(p)
        rows = tuple(unit_vector(ambient, i) for i in range(ambient))
        return cls(p, ambient, rows, tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def key(self) -> tuple:
        """Deterministic sort key: (dimension, basis rows)."""
        return (len(self.rows), self.rows)

    def _check_compatible(self, other: "Subspace") -> None:
        if self.p != other.p or self.ambient != other.ambient:
            raise DimensionMismatch(
                f"mixing GF({self.p})^{self.ambient} with GF({other.p})^{other.ambient}"
            )

    def reduce(self, v: Vector) -> Vector:
        """Residue of v modulo this subspace (clear all pivot coordinates)."""
        if len(v) != self.ambient:
            raise DimensionMismatch(f"vector length {len(v)} != ambient {self.ambient}")
        p = self.p
        w = [a % p for a in v]
        for row, c in zip(self.rows, self.pivots):
            f = w[c]
            if f:
                for k in range(c, self.ambient):
                    w[k] = (w[k] - f * row[k]) % p
        return tuple(w)

    def contains_vector(self, v: Vector) -> bool:
        return vec_is_zero(self.reduce(v))

    def contains(self, other: "Subspace") -> bool:
        """True iff other is a subspace of self."""
        self._check_compatible(other)
        return all(self.contains_vector(r) for r in other.rows)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains(self)

    def __lt__(self, other: "Subspace") -> bool:
        return self.dim < other.dim and other.contains(self)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_compatible(other)
        if not other.rows:
            return self
        if not self.rows:
            return other
        return Subspace.span(self.p, self.ambient, self.rows + other.rows)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: row reduce [A|A; B|0], read the intersection off the
        right block of rows whose left block vanished."""
        self._check_compatible(other)
        n = self.ambient
        zero = (0,) * n
        stacked = [r + r for r in self.rows] + [r + zero for r in other.rows]
        red, _ = rref(stacked, self.p)
        inter = [row[n:] for row in red if vec_is_zero(row[:n])]
        return Subspace.span(self.p, n, inter)

    def vectors(self):
        """All p^dim vectors, zero first, in lex order of coefficient tuples."""
        p, n = self.p, self.ambient
        for coeffs in itertools.product(range(p), repeat=self.dim):
            v = [0] * n
            for c, row in zip(coeffs, self.rows):
                if c:
                    for k in range(n):
                        v[k] = (v[k] + c * row[k]) % p
            yield tuple(v)

    def nonzero_vectors(self):
        it = self.vectors()
        next(it)
        return it

    def __repr__(self) -> str:
        return f"Subspace(GF({self.p})^{self.ambient}, dim={self.dim}, rows={self.rows})"


def complete_basis(inner: Subspace, outer: Subspace) -> list[Vector]:
    """Rows of outer's basis extending inner's to a basis of outer.

    Scans outer.rows in order and keeps each row not already in the span so
    far, so the result is deterministic and consists of rows of outer.rows.
    """
    inner._check_compatible(outer)
    if not outer.contains(inner):
        raise DimensionMismatch("complete_basis: inner subspace not contained in outer")
    work = inner
    out = []
    for row in outer.rows:
        if not work.contains_vector(row):
            out.append(row)
            work = work.sum(Subspace.span(work.p, work.ambient, [row]))
    assert len(out) == outer.dim - inner.dim
    return out


# -- matrices ---------------------------------------------------------------


def identity_matrix(n: int) -> Matrix:
    return tuple(unit_vector(n, i) for i in range(n))


def zero_matrix(rows: int, cols: int) -> Matrix:
    return tuple((0,) * cols for _ in range(rows))


def mat_add(a: Matrix, b: Matrix, p: int) -> Matrix:
    return tuple(vec_add(ra, rb, p) for ra, rb in zip(a, b, strict=True))


def mat_scale(c: int, m: Matrix, p: int) -> Matrix:
    return tuple(vec_scale(c, row, p) for row in m)


def vec_mat(v: Vector, m: Matrix, p: int) -> Vector:
    """Row vector times matrix: the v-weighted combination of m's rows."""
    if len(v) != len(m):
        raise DimensionMismatch(f"vector length {len(v)} != matrix rows {len(m)}")
    cols = len(m[0]) if m else 0
    out = [0] * cols
    for a, row in zip(v, m):
        if a:
            for k in range(cols):
                out[k] = (out[k] + a * row[k]) % p
    return tuple(out)


def mat_mul(a: Matrix, b: Matrix, p: int) -> Matrix:
    return tuple(vec_mat(row, b, p) for row in a)


def mat_pow(m: Matrix, e: int, p: int) -> Matrix:
    result = identity_matrix(len(m))
    base = m
    while e:
        if e & 1:
            result = mat_mul(result, base, p)
        base = mat_mul(base, base, p)
        e >>= 1
    return result


def is_zero_matrix(m: Matrix) -> bool:
    return all(vec_is_zero(row) for row in m)


def mat_inv(m: Matrix, p: int) -> Matrix:
    """Inverse of a square matrix by Gauss-Jordan on [M | I]."""
    n = len(m)
    aug = [list(row) + list(unit_vector(n, i)) for i, row in enumerate(m)]
    red, pivots = rref(aug, p)
    if len(pivots) != n or pivots != tuple(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return tuple(row[n:] for row in red)


def left_kernel(m: Matrix, p: int, nrows: int) -> Subspace:
    """{x in GF(p)^nrows : x @ m = 0}, via RREF of [M | I] read on the right.

    nrows is passed explicitly so the kernel of an empty matrix (no columns of
    constraint) still knows its ambient dimension.
    """
    if len(m) != nrows:
        raise DimensionMismatch(f"matrix has {len(m)} rows, expected {nrows}")
    width = len(m[0]) if m else 0
    if width == 0:
        return Subspace.full(p, nrows)
    aug = [tuple(row) + unit_vector(nrows, i) for i, row in enumerate(m)]
    red, _ = rref(aug, p)
    ker = [row[width:] for row in red if vec_is_zero(row[:width])]
    return Subspace.span(p, nrows, ker)


# -- counting and enumeration ----------------------------------------------


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of GF(p)^n."""
    if k < 0 or k > n:
        return 0
    num = prod(p**n - p**i for i in range(k))
    den = prod(p**k - p**i for i in range(k))
    return num // den


def galois_number(n: int, p: int) -> int:
    """Total number of subspaces of GF(p)^n."""
    return sum(gaussian_binomial(n, k, p) for k in range(n + 1))


def enumerate_rref(p: int, n: int):
    """Yield every RREF matrix over GF(p) with n columns, as a rows tuple.

    One matrix per subspace of GF(p)^n.  For each dimension k (ascending) and
    each pivot-column choice (lex ascending), the non-pivot entries run
    through all assignments in lex order, so the overall order is
    deterministic.  An entry in row i, column c is forced to zero when c is a
    pivot column (other than row i's own) and free only when c lies right of
    row i's pivot and is not a pivot column.
    """
    check_prime(p)
    yield ()
    for k in range(1, n + 1):
        for pivots in itertools.combinations(range(n), k):
            pivot_set = set(pivots)
            free = [
                (i, c)
                for i in range(k)
                for c in range(pivots[i] + 1, n)
                if c not in pivot_set
            ]
            base = [[0] * n for _ in range(k)]
            for i, c in enumerate(pivots):
                base[i][c] = 1
            for values in itertools.product(range(p), repeat=len(free)):
                rows = [row[:] for row in base]
                for (i, c), val in zip(free, values):
                    rows[i][c] = val
                yield tuple(tuple(row) for row in rows)


def enumerate_subspaces(p: int, n: int) -> list[Subspace]:
    """All subspaces of GF(p)^n, sorted by (dim, rows)."""
    out = []
    for rows in enumerate_rref(p, n):
        pivots = tuple(next(c for c, a in enumerate(row) if a) for row in rows)
        out.append(Subspace(p, n, rows, pivots))
    out.sort(key=lambda s: s.key)
    return out


def enumerate_subspaces_between(lower: Subspace, upper: Subspace) -> list[Subspace]:
    """All subspaces S with lower <= S <= upper, sorted by (dim, rows).

    Works in the quotient upper/lower: subspaces between the two correspond
    to subspaces of a (dim upper - dim lower)-dimensional space, lifted back
    through a fixed transversal.
    """
    lower._check_compatible(upper)
    if not upper.contains(lower):
        raise DimensionMismatch("enumerate_subspaces_between: lower not inside upper")
    p, n = lower.p, lower.ambient
    d = upper.dim - lower.dim
    if d == 0:
        return [lower]
    section = complete_basis(lower, upper)
    out = []
    for rows_q in enumerate_rref(p, d):
        lifted = [vec_mat(q, tuple(section), p) for q in rows_q]
        out.append(Subspace.span(p, n, tuple(lower.rows) + tuple(lifted)))
    out.sort(key=lambda s: s.key)
    return out
