"""Finite-dimensional Lie algebras over GF(p), given by structure constants.

A LieAlgebra stores the full n*n table of basis brackets [e_i, e_j] as
vectors; construction from sparse i < j data fills in antisymmetry and zero
diagonal, and validation checks the Jacobi identity exactly.  Subspaces of
the underlying vector space come from .gfp; this module adds the bracket,
closure operators, the standard series, and quotient / subalgebra
presentations that are themselves LieAlgebra values.

Labels are carried for readable output only: they are excluded from equality
and hashing, so e.g. two quotient presentations of the same algebra by the
same ideal compare equal and share caches.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    DimensionMismatch,
    InvalidStructure,
    NotAnIdeal,
    NotASubalgebra,
)
from .gfp import (
    Matrix,
    Subspace,
    Vector,
    check_prime,
    complete_basis,
    left_kernel,
    mat_inv,
    rref,
    unit_vector,
    vec_add,
    vec_is_zero,
    vec_mat,
    vec_sub,
)


@dataclass(frozen=True)
class StructureViolation:
    """First Lie-axiom failure found in a structure table."""

    kind: str  # "antisymmetry" | "jacobi"
    indices: tuple[int, ...]
    value: Vector


class LieAlgebra:
    """Immutable Lie algebra over GF(p) with a distinguished ordered basis.

    structure[i][j] is the coordinate vector of [e_i, e_j].  Equality and
    hashing ignore labels.
    """

    __slots__ = ("p", "dim", "labels", "structure", "_hash")

    def __init__(self, p: int, labels: tuple[str, ...], structure):
        check_prime(p)
        labels = tuple(labels)
        n = len(labels)
        structure = tuple(
            tuple(tuple(a % p for a in vec) for vec in plane) for plane in structure
        )
        if len(structure) != n or any(
            len(plane) != n or any(len(vec) != n for vec in plane)
            for plane in structure
        ):
            raise DimensionMismatch(f"structure table is not {n}x{n}x{n}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "dim", n)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "structure", structure)
        object.__setattr__(self, "_hash", hash((p, n, structure)))

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, LieAlgebra)
            and self.p == other.p
            and self.structure == other.structure
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"LieAlgebra(GF({self.p}), dim={self.dim}, basis={list(self.labels)})"

    @classmethod
    def from_brackets(cls, p, labels, brackets, *, validate=True) -> "LieAlgebra":
        """Build from sparse data {(i, j): [(coeff, k), ...]} with i < j.

        Entries for j > i are filled by antisymmetry, the diagonal is zero.
        """
        check_prime(p)
        labels = tuple(labels)
        n = len(labels)
        table = [[[0] * n for _ in range(n)] for _ in range(n)]
        for (i, j), terms in brackets.items():
            if not (0 <= i < n and 0 <= j < n):
                raise DimensionMismatch(f"bracket index ({i}, {j}) out of range 0..{n - 1}")
            if i >= j:
                raise DimensionMismatch(
                    f"bracket ({i}, {j}): only i < j entries may be given"
                )
            for coeff, k in terms:
                if not 0 <= k < n:
                    raise DimensionMismatch(f"bracket ({i}, {j}): target index {k} out of range")
                table[i][j][k] = (table[i][j][k] + coeff) % p
            for k in range(n):
                table[j][i][k] = -table[i][j][k] % p
        alg = cls(p, labels, table)
        if validate:
            check_structure(alg)
        return alg


def bracket(L: LieAlgebra, x: Vector, y: Vector) -> Vector:
    """[x, y], extended bilinearly from the structure table."""
    n, p = L.dim, L.p
    if len(x) != n or len(y) != n:
        raise DimensionMismatch(f"bracket operands must have length {n}")
    out = [0] * n
    structure = L.structure
    for i, xi in enumerate(x):
        if not xi:
            continue
        plane = structure[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            f = (xi * yj) % p
            if not f:
                continue
            cij = plane[j]
            for k, c in enumerate(cij):
                if c:
                    out[k] = (out[k] + f * c) % p
    return tuple(out)


def validate_structure(L: LieAlgebra) -> StructureViolation | None:
    """Return the first antisymmetry or Jacobi failure, or None if valid.

    The diagonal [e_i, e_i] = 0 is part of the antisymmetry check (needed in
    characteristic 2, where [x, y] = -[y, x] alone does not force it).
    """
    n, p = L.dim, L.p
    s = L.structure
    for i in range(n):
        if not vec_is_zero(s[i][i]):
            return StructureViolation("antisymmetry", (i, i), s[i][i])
        for j in range(i + 1, n):
            anti = vec_add(s[i][j], s[j][i], p)
            if not vec_is_zero(anti):
                return StructureViolation("antisymmetry", (i, j), anti)
    basis = [unit_vector(n, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                acc = bracket(L, bracket(L, basis[i], basis[j]), basis[k])
                acc = vec_add(acc, bracket(L, bracket(L, basis[j], basis[k]), basis[i]), p)
                acc = vec_add(acc, bracket(L, bracket(L, basis[k], basis[i]), basis[j]), p)
                if not vec_is_zero(acc):
                    return StructureViolation("jacobi", (i, j, k), acc)
    return None


def check_structure(L: LieAlgebra) -> None:
    violation = validate_structure(L)
    if violation is not None:
        raise InvalidStructure(violation.kind, violation.indices, violation.value)


def zero_space(L: LieAlgebra) -> Subspace:
    return Subspace.zero(L.p, L.dim)


def full_space(L: LieAlgebra) -> Subspace:
    return Subspace.full(L.p, L.dim)


def product_space(L: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    """[A, B]: the span of all brackets of basis rows."""
    products = [bracket(L, ra, rb) for ra in a.rows for rb in b.rows]
    return Subspace.span(L.p, L.dim, [v for v in products if not vec_is_zero(v)])


def subalgebra_closure(L: LieAlgebra, v: Subspace) -> Subspace:
    """Smallest bracket-closed subspace containing v (fixpoint of V + [V, V])."""
    current = v
    while True:
        nxt = current.sum(product_space(L, current, current))
        if nxt == current:
            return current
        current = nxt


def generated_subalgebra(L: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    """<A, B>: the subalgebra generated by A and B together."""
    return subalgebra_closure(L, a.sum(b))


def ideal_closure(L: LieAlgebra, v: Subspace) -> Subspace:
    """Smallest ideal containing v (fixpoint of V + [V, L])."""
    full = full_space(L)
    current = v
    while True:
        nxt = current.sum(product_space(L, current, full))
        if nxt == current:
            return current
        current = nxt


def is_subalgebra(L: LieAlgebra, v: Subspace) -> bool:
    return v.contains(product_space(L, v, v))


def require_subalgebra(L: LieAlgebra, v: Subspace) -> Subspace:
    """Return v if bracket-closed, else raise with a witness pair of rows."""
    for ra in v.rows:
        for rb in v.rows:
            prod = bracket(L, ra, rb)
            if not v.contains_vector(prod):
                raise NotASubalgebra(ra, rb, prod)
    return v


def is_ideal(L: LieAlgebra, v: Subspace) -> bool:
    return v.contains(product_space(L, v, full_space(L)))


def require_ideal(L: LieAlgebra, v: Subspace) -> Subspace:
    if not is_ideal(L, v):
        raise NotAnIdeal(f"subspace with rows {v.rows} is not an ideal")
    return v


def centraliser(L: LieAlgebra, b: Subspace) -> Subspace:
    """C_L(B) = {x : [x, B] = 0}, as the left kernel of x -> ([x, b_1], ..)."""
    n, p = L.dim, L.p
    if b.dim == 0:
        return full_space(L)
    rows = []
    for i in range(n):
        e = unit_vector(n, i)
        chunk = ()
        for rb in b.rows:
            chunk += bracket(L, e, rb)
        rows.append(chunk)
    return left_kernel(tuple(rows), p, n)


def centre(L: LieAlgebra) -> Subspace:
    return centraliser(L, full_space(L))


def _series(L: LieAlgebra, start: Subspace, step) -> list[Subspace]:
    terms = [start]
    while terms[-1].dim:
        nxt = step(terms[-1])
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    return terms


def derived_series(L: LieAlgebra) -> list[Subspace]:
    """[L, L^(1), L^(2), ...] down to the stable term (0 iff solvable)."""
    return _series(L, full_space(L), lambda t: product_space(L, t, t))


def lower_central_series(L: LieAlgebra, a: Subspace | None = None) -> list[Subspace]:
    """[A, A^2=[A,A], A^3=[A^2,A], ...] down to the stable term.

    With a=None the series of L itself; otherwise a must be a subalgebra and
    the series is intrinsic to it (each step brackets with a, not with L).
    """
    if a is None:
        a = full_space(L)
    else:
        require_subalgebra(L, a)
    return _series(L, a, lambda t: product_space(L, t, a))


def nilpotent_residual(L: LieAlgebra) -> Subspace:
    """L^infinity: the stable term of the lower central series."""
    return lower_central_series(L)[-1]


def is_solvable(L: LieAlgebra) -> bool:
    return derived_series(L)[-1].dim == 0


def is_nilpotent(L: LieAlgebra, a: Subspace | None = None) -> bool:
    return lower_central_series(L, a)[-1].dim == 0


def nilpotency_class(L: LieAlgebra, a: Subspace | None = None) -> int:
    """Smallest c with A^(c+1) = 0; 0 for the zero subalgebra."""
    terms = lower_central_series(L, a)
    if terms[-1].dim:
        raise ValueError("nilpotency_class: subalgebra is not nilpotent")
    return len(terms) - 1


def is_completely_solvable(L: LieAlgebra) -> bool:
    """True iff L^2 = [L, L] is nilpotent (as an algebra in its own right)."""
    l2 = product_space(L, full_space(L), full_space(L))
    return is_nilpotent(L, l2)


# -- presentations ----------------------------------------------------------


@dataclass(frozen=True)
class QuotientPresentation:
    """L/A as a LieAlgebra, with explicit project/lift maps.

    section holds the chosen transversal rows (unit vectors of the parent),
    basis_inverse the inverse of the stacked (kernel rows + section) basis;
    projection reads the last dim(L/A) coordinates of v @ basis_inverse.
    """

    parent: LieAlgebra
    kernel: Subspace
    algebra: LieAlgebra
    section: Matrix
    basis_inverse: Matrix = field(repr=False)

    def project_vector(self, v: Vector) -> Vector:
        coords = vec_mat(tuple(v), self.basis_inverse, self.parent.p)
        return coords[self.kernel.dim :]

    def lift_vector(self, w: Vector) -> Vector:
        if len(w) != self.algebra.dim:
            raise DimensionMismatch(
                f"quotient vector length {len(w)} != {self.algebra.dim}"
            )
        return vec_mat(tuple(w), self.section, self.parent.p)

    def project_space(self, s: Subspace) -> Subspace:
        return Subspace.span(
            self.parent.p, self.algebra.dim, [self.project_vector(r) for r in s.rows]
        )

    def lift_space(self, sbar: Subspace) -> Subspace:
        lifted = [self.lift_vector(r) for r in sbar.rows]
        return Subspace.span(
            self.parent.p, self.parent.dim, tuple(self.kernel.rows) + tuple(lifted)
        )


def quotient(L: LieAlgebra, a: Subspace) -> QuotientPresentation:
    """Present L/A with basis the unit vectors completing A to L."""
    require_ideal(L, a)
    full = full_space(L)
    section = tuple(complete_basis(a, full))
    m = len(section)
    basis = tuple(a.rows) + section
    basis_inverse = mat_inv(basis, L.p)
    pre = QuotientPresentation(L, a, None, section, basis_inverse)  # type: ignore[arg-type]

    labels = tuple(L.labels[row.index(1)] for row in section)
    brackets = {}
    for i in range(m):
        for j in range(i + 1, m):
            img = pre.project_vector(bracket(L, section[i], section[j]))
            terms = [(c, k) for k, c in enumerate(img) if c]
            if terms:
                brackets[(i, j)] = terms
    algebra = LieAlgebra.from_brackets(L.p, labels, brackets)
    return QuotientPresentation(L, a, algebra, section, basis_inverse)


@dataclass(frozen=True)
class SubalgebraPresentation:
    """A subalgebra M <= L as a LieAlgebra on M's canonical basis rows.

    Coordinates in M are read off at M's pivot columns, which is exact for
    vectors of M because its basis is in reduced echelon form.
    """

    parent: LieAlgebra
    space: Subspace
    algebra: LieAlgebra

    def restrict_vector(self, v: Vector) -> Vector:
        if not self.space.contains_vector(v):
            raise DimensionMismatch("restrict_vector: vector lies outside the subalgebra")
        return tuple(v[c] % self.parent.p for c in self.space.pivots)

    def embed_vector(self, w: Vector) -> Vector:
        return vec_mat(tuple(w), self.space.rows, self.parent.p)

    def restrict_space(self, s: Subspace) -> Subspace:
        return Subspace.span(
            self.parent.p, self.space.dim, [self.restrict_vector(r) for r in s.rows]
        )

    def embed_space(self, sbar: Subspace) -> Subspace:
        return Subspace.span(
            self.parent.p, self.parent.dim, [self.embed_vector(r) for r in sbar.rows]
        )


def restriction(L: LieAlgebra, m: Subspace) -> SubalgebraPresentation:
    """Present the subalgebra m as an algebra on its own basis."""
    require_subalgebra(L, m)
    k = m.dim
    labels = tuple(f"{L.labels[c]}'" for c in m.pivots)
    coords = lambda v: tuple(v[c] % L.p for c in m.pivots)
    brackets = {}
    for i in range(k):
        for j in range(i + 1, k):
            img = coords(bracket(L, m.rows[i], m.rows[j]))
            terms = [(c, t) for t, c in enumerate(img) if c]
            if terms:
                brackets[(i, j)] = terms
    algebra = LieAlgebra.from_brackets(L.p, labels, brackets)
    return SubalgebraPresentation(L, m, algebra)
