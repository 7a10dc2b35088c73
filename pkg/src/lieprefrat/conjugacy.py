"""Inner automorphisms exp(ad x) and conjugacy of prefrattini subalgebras.

Convention: ad x maps y to [y, x], stored as a matrix acting on row vectors
from the right (row i of the matrix is [e_i, x]).  exp(ad x) is the
truncated series sum_{r<p} (ad x)^r / r!, defined exactly when
(ad x)^p = 0.  I(L:I) is the group generated by all exp(ad x) with x in a
nilpotent ideal I of class < p; the conjugacy theorem says the U-prefrattini
subalgebras form a single orbit under I(L:L^infinity) whenever L^infinity
has class < p.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .algebra import (
    LieAlgebra,
    bracket,
    is_nilpotent,
    nilpotency_class,
    nilpotent_residual,
    require_ideal,
)
from .errors import (
    BudgetExceeded,
    HypothesisNotMet,
    LiePrefratError,
    NotExponentiable,
)
from .gfp import (
    Matrix,
    Subspace,
    Vector,
    identity_matrix,
    inv_mod,
    is_zero_matrix,
    mat_add,
    mat_mul,
    mat_scale,
    unit_vector,
    vec_mat,
)
from .prefrattini import prefrattini_set

DEFAULT_GROUP_CAP = 10**6


def group_cap_default() -> int:
    raw = os.environ.get("LIEPREFRAT_GROUP_CAP")
    return int(raw) if raw else DEFAULT_GROUP_CAP


@dataclass(frozen=True)
class InnerAutomorphism:
    """An automorphism of L as a matrix, with the exp-generator log kept for
    reporting witnesses (empty log = identity)."""

    algebra: LieAlgebra
    matrix: Matrix
    generators: tuple[Vector, ...]

    def apply_vector(self, v: Vector) -> Vector:
        return vec_mat(tuple(v), self.matrix, self.algebra.p)

    def apply_space(self, s: Subspace) -> Subspace:
        return Subspace.span(
            self.algebra.p, self.algebra.dim, [self.apply_vector(r) for r in s.rows]
        )

    def compose(self, other: "InnerAutomorphism") -> "InnerAutomorphism":
        """self followed by other (row-vector convention: matrices multiply
        in application order)."""
        return InnerAutomorphism(
            self.algebra,
            mat_mul(self.matrix, other.matrix, self.algebra.p),
            self.generators + other.generators,
        )

    @property
    def is_identity(self) -> bool:
        return self.matrix == identity_matrix(self.algebra.dim)


def identity_automorphism(L: LieAlgebra) -> InnerAutomorphism:
    return InnerAutomorphism(L, identity_matrix(L.dim), ())


def ad_matrix(L: LieAlgebra, x: Vector) -> Matrix:
    """Matrix of y -> [y, x] in the algebra basis (row-vector action)."""
    return tuple(bracket(L, unit_vector(L.dim, i), tuple(x)) for i in range(L.dim))


def exp_ad(L: LieAlgebra, x: Vector, *, verify: bool = True) -> InnerAutomorphism:
    """exp(ad x) = sum_{r=0}^{p-1} (ad x)^r / r!; requires (ad x)^p = 0."""
    n, p = L.dim, L.p
    m = ad_matrix(L, x)
    powers = [identity_matrix(n)]
    for _ in range(p):
        powers.append(mat_mul(powers[-1], m, p))
    if not is_zero_matrix(powers[p]):
        raise NotExponentiable(
            f"(ad x)^{p} != 0 for x = {tuple(x)}; series does not terminate"
        )
    total = powers[0]
    factorial = 1
    for r in range(1, p):
        factorial = (factorial * r) % p
        total = mat_add(total, mat_scale(inv_mod(factorial, p), powers[r], p), p)
    auto = InnerAutomorphism(L, total, (tuple(a % p for a in x),))
    if verify:
        _check_automorphism(auto)
    return auto


def _check_automorphism(auto: InnerAutomorphism) -> None:
    L = auto.algebra
    n = L.dim
    basis = [unit_vector(n, i) for i in range(n)]
    images = [auto.apply_vector(b) for b in basis]
    if Subspace.span(L.p, n, images).dim != n:
        raise LiePrefratError("exp(ad x) produced a singular matrix")
    for i in range(n):
        for j in range(i + 1, n):
            lhs = bracket(L, images[i], images[j])
            rhs = auto.apply_vector(bracket(L, basis[i], basis[j]))
            if lhs != rhs:
                raise LiePrefratError(
                    f"exp(ad x) is not an automorphism at basis pair ({i}, {j})"
                )


def inner_group(
    L: LieAlgebra, ideal: Subspace, cap: int | None = None
) -> list[InnerAutomorphism]:
    """I(L:I): compositional closure of {exp(ad x) : x in I}, by BFS.

    Requires I to be a nilpotent ideal of class < p (the hypothesis that
    makes every exp terminate).  Deterministic: generators in the
    coefficient-lex order of I's vectors, breadth first, first-seen matrix
    kept.  Raises BudgetExceeded past cap elements (default from
    LIEPREFRAT_GROUP_CAP, else 10^6).
    """
    require_ideal(L, ideal)
    if not is_nilpotent(L, ideal) or nilpotency_class(L, ideal) >= L.p:
        raise HypothesisNotMet(
            f"inner_group needs a nilpotent ideal of class < {L.p}"
        )
    if cap is None:
        cap = group_cap_default()
    generators = []
    seen_gen = set()
    for x in ideal.vectors():
        g = exp_ad(L, x, verify=False)
        if g.matrix not in seen_gen:
            seen_gen.add(g.matrix)
            generators.append(g)
    identity = identity_automorphism(L)
    elements: dict[Matrix, InnerAutomorphism] = {identity.matrix: identity}
    queue = [identity]
    while queue:
        current = queue.pop(0)
        for g in generators:
            nxt = current.compose(g)
            if nxt.matrix not in elements:
                if len(elements) >= cap:
                    raise BudgetExceeded(f"inner_group: more than {cap} elements")
                elements[nxt.matrix] = nxt
                queue.append(nxt)
    return list(elements.values())


def are_conjugate(
    s1: Subspace, s2: Subspace, group: list[InnerAutomorphism]
) -> InnerAutomorphism | None:
    """First automorphism in group mapping s1 onto s2, or None."""
    for g in group:
        if g.apply_space(s1) == s2:
            return g
    return None


def subspace_orbit(
    L: LieAlgebra,
    s: Subspace,
    generators: list[InnerAutomorphism],
    cap: int | None = None,
) -> dict[Subspace, InnerAutomorphism]:
    """Orbit of s under the group generated by generators, with a witness
    automorphism per orbit member (BFS, first-found)."""
    if cap is None:
        cap = group_cap_default()
    identity = identity_automorphism(L)
    orbit = {s: identity}
    queue = [(s, identity)]
    while queue:
        current, via = queue.pop(0)
        for g in generators:
            image = g.apply_space(current)
            if image not in orbit:
                if len(orbit) >= cap:
                    raise BudgetExceeded(f"subspace_orbit: more than {cap} members")
                composed = via.compose(g)
                orbit[image] = composed
                queue.append((image, composed))
    return orbit


@dataclass(frozen=True)
class ConjugacyReport:
    status: str  # "PASS" | "FAIL" | "SKIPPED(hypothesis)"
    reason: str | None
    members: tuple[Subspace, ...]
    witnesses: tuple[tuple[Subspace, InnerAutomorphism | None], ...]
    group_order: int | None


def verify_conjugacy_theorem(
    L: LieAlgebra, u: Subspace, cap: int | None = None
) -> ConjugacyReport:
    """Check that Pi(u, L) is one conjugacy class under I(L:L^infinity).

    If L^infinity is not nilpotent of class < p the check is skipped (the
    theorem's hypothesis fails); it never passes vacuously.  If the full
    group exceeds its cap, falls back to the orbit of the first member under
    the generators, which decides conjugacy all the same.
    """
    residual = nilpotent_residual(L)
    if not is_nilpotent(L, residual):
        return ConjugacyReport(
            "SKIPPED(hypothesis)",
            "nilpotent residual is not nilpotent",
            (),
            (),
            None,
        )
    klass = nilpotency_class(L, residual)
    if klass >= L.p:
        return ConjugacyReport(
            "SKIPPED(hypothesis)",
            f"nilpotency class of the residual is {klass} >= p = {L.p}",
            (),
            (),
            None,
        )
    members = prefrattini_set(L, u).members
    anchor = members[0]
    try:
        group = inner_group(L, residual, cap)
        group_order = len(group)
        witnesses = tuple((m, are_conjugate(anchor, m, group)) for m in members)
    except BudgetExceeded:
        generators = [exp_ad(L, x, verify=False) for x in residual.vectors()]
        orbit = subspace_orbit(L, anchor, generators, cap)
        group_order = None
        witnesses = tuple((m, orbit.get(m)) for m in members)
    ok = all(w is not None for _, w in witnesses)
    return ConjugacyReport(
        status="PASS" if ok else "FAIL",
        reason=None if ok else "some prefrattini members are not conjugate",
        members=members,
        witnesses=witnesses,
        group_order=group_order,
    )
