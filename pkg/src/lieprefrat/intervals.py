"""Subalgebra intervals [U:L], maximal subalgebras, phi, and Omega.

Omega(U, L) is the set of subalgebras S >= U whose upper interval [S:L] is
complemented: every B in [S:L] has a T in [S:L] with B meet T = S and
<B, T> = L.  Whether [S:L] is complemented does not depend on U, so the flag
is cached per S on a per-algebra context object, as are the subalgebra list,
maximal subalgebras, phi values and join closures.  The context also keeps a
frozenset-of-encoded-vectors view of each subalgebra, which makes the inner
loop of the complement search (intersection equality against S) a C-level
set operation instead of repeated row reduction.

All lists are ordered by Subspace.key = (dim, rows); first-found witnesses
are therefore deterministic.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .algebra import (
    LieAlgebra,
    bracket,
    full_space,
    is_ideal,
    require_subalgebra,
    subalgebra_closure,
    zero_space,
)
from .errors import BudgetExceeded, DimensionMismatch
from .gfp import Subspace, encode_vector, enumerate_rref, galois_number

# Hard desk-scale guard: refuse to enumerate subspace lattices past this
# size rather than hang; G(6, 3) = 56632 stays comfortably inside.
MAX_LATTICE = 200_000


class AlgebraContext:
    """Per-algebra memo: subalgebra lattice data reused by every query.

    Not thread-safe to build concurrently; the module-level accessor takes a
    lock around creation, and all cached values are immutable once computed,
    so concurrent reads after warm-up are fine.
    """

    def __init__(self, L: LieAlgebra):
        self.L = L
        self.full = full_space(L)
        self.zero = zero_space(L)
        self._subalgebras: tuple[Subspace, ...] | None = None
        self._ideals: tuple[Subspace, ...] | None = None
        self._maximal: tuple[Subspace, ...] | None = None
        self._vecsets: dict[Subspace, frozenset[int]] = {}
        self._phi: dict[Subspace, Subspace] = {}
        self._flags: dict[Subspace, bool] = {}
        self._join_full: dict[Subspace, bool] = {}

    def subalgebras(self) -> tuple[Subspace, ...]:
        """Every bracket-closed subspace, sorted by (dim, rows)."""
        if self._subalgebras is None:
            L, p, n = self.L, self.L.p, self.L.dim
            total = galois_number(n, p)
            if total > MAX_LATTICE:
                raise BudgetExceeded(
                    f"subspace lattice of GF({p})^{n} has {total} members, "
                    f"over the {MAX_LATTICE} enumeration guard"
                )
            found = []
            for rows in enumerate_rref(p, n):
                pivots = tuple(next(c for c, a in enumerate(row) if a) for row in rows)
                s = Subspace(p, n, rows, pivots)
                closed = True
                for a in range(len(rows)):
                    for b in range(a + 1, len(rows)):
                        if not s.contains_vector(bracket(L, rows[a], rows[b])):
                            closed = False
                            break
                    if not closed:
                        break
                if closed:
                    found.append(s)
            found.sort(key=lambda s: s.key)
            self._subalgebras = tuple(found)
        return self._subalgebras

    def ideals(self) -> tuple[Subspace, ...]:
        if self._ideals is None:
            self._ideals = tuple(
                s for s in self.subalgebras() if is_ideal(self.L, s)
            )
        return self._ideals

    def maximal(self) -> tuple[Subspace, ...]:
        """Maximal proper subalgebras, sorted by (dim, rows)."""
        if self._maximal is None:
            subs = self.subalgebras()
            out = []
            for s in subs:
                if s.dim == self.L.dim:
                    continue
                sv = self.vecset(s)
                dominated = any(
                    t.dim > s.dim and t.dim < self.L.dim and sv <= self.vecset(t)
                    for t in subs
                )
                if not dominated:
                    out.append(s)
            self._maximal = tuple(out)
        return self._maximal

    def vecset(self, s: Subspace) -> frozenset[int]:
        vs = self._vecsets.get(s)
        if vs is None:
            p = self.L.p
            vs = frozenset(encode_vector(v, p) for v in s.vectors())
            self._vecsets[s] = vs
        return vs

    def members_between(self, u: Subspace) -> list[Subspace]:
        """All subalgebras S with u <= S, in canonical order."""
        uv = self.vecset(u)
        return [s for s in self.subalgebras() if uv <= self.vecset(s)]

    def join_is_full(self, a: Subspace, b: Subspace) -> bool:
        """<a, b> = L?  Cached on the subspace sum, which determines the join."""
        ssum = a.sum(b)
        if ssum.dim == self.L.dim:
            return True
        flag = self._join_full.get(ssum)
        if flag is None:
            flag = subalgebra_closure(self.L, ssum).dim == self.L.dim
            self._join_full[ssum] = flag
        return flag

    def phi_of(self, s: Subspace) -> Subspace:
        """Intersection of maximal subalgebras containing s; L if none."""
        out = self._phi.get(s)
        if out is None:
            sv = self.vecset(s)
            out = self.full
            for m in self.maximal():
                if sv <= self.vecset(m):
                    out = out.intersect(m)
            self._phi[s] = out
        return out

    def interval_complemented(self, s: Subspace) -> bool:
        """Is [s:L] complemented?  (Independent of any lower bound below s.)

        For each B in [s:L] we need T in [s:L] with B meet T = s and
        <B, T> = L.  Since dim(B + T) = dim B + dim T - dim s <= dim L when
        the meet condition holds, T can only succeed with
        dim T <= dim L - dim B + dim s; scanning dims downward from that
        bound finds the cheap witness T = L-complement first when it exists.
        """
        flag = self._flags.get(s)
        if flag is not None:
            return flag
        n = self.L.dim
        members = self.members_between(s)
        sv = self.vecset(s)
        by_dim: dict[int, list[Subspace]] = {}
        for t in members:
            by_dim.setdefault(t.dim, []).append(t)
        flag = True
        for b in members:
            bv = self.vecset(b)
            found = False
            for td in range(n - b.dim + s.dim, s.dim - 1, -1):
                for t in by_dim.get(td, ()):
                    if (bv & self.vecset(t)) == sv and self.join_is_full(b, t):
                        found = True
                        break
                if found:
                    break
            if not found:
                flag = False
                break
        self._flags[s] = flag
        return flag


_contexts: dict[LieAlgebra, AlgebraContext] = {}
_contexts_lock = threading.Lock()


def context(L: LieAlgebra) -> AlgebraContext:
    ctx = _contexts.get(L)
    if ctx is None:
        with _contexts_lock:
            ctx = _contexts.get(L)
            if ctx is None:
                ctx = AlgebraContext(L)
                _contexts[L] = ctx
    return ctx


def clear_contexts() -> None:
    """Drop all cached lattice data (mainly for tests measuring cold runs)."""
    with _contexts_lock:
        _contexts.clear()


@dataclass(frozen=True)
class IntervalReport:
    u: Subspace
    members: tuple[Subspace, ...]
    maximal: tuple[Subspace, ...]
    phi: Subspace
    is_complemented: bool


def interval(L: LieAlgebra, u: Subspace) -> IntervalReport:
    """Everything about [u:L]: members, its maximal elements, phi(u,L), and
    whether the interval is complemented."""
    require_subalgebra(L, u)
    ctx = context(L)
    members = tuple(ctx.members_between(u))
    uv = ctx.vecset(u)
    maximal = tuple(m for m in ctx.maximal() if uv <= ctx.vecset(m))
    return IntervalReport(
        u=u,
        members=members,
        maximal=maximal,
        phi=ctx.phi_of(u),
        is_complemented=ctx.interval_complemented(u),
    )


def phi_of(L: LieAlgebra, s: Subspace) -> Subspace:
    """phi(S, L): intersection of the maximal subalgebras containing S.

    phi(L, L) = L by the empty-intersection convention.
    """
    require_subalgebra(L, s)
    return context(L).phi_of(s)


def omega(L: LieAlgebra, u: Subspace) -> list[Subspace]:
    """All S in [u:L] whose interval [S:L] is complemented, sorted."""
    require_subalgebra(L, u)
    ctx = context(L)
    return [s for s in ctx.members_between(u) if ctx.interval_complemented(s)]


def omega_min(L: LieAlgebra, u: Subspace) -> list[Subspace]:
    """Inclusion-minimal elements of omega(L, u), sorted."""
    om = omega(L, u)
    ctx = context(L)
    out = []
    for s in om:
        sv = ctx.vecset(s)
        if not any(t.dim < s.dim and ctx.vecset(t) <= sv for t in om):
            out.append(s)
    return out


def complement_in_interval(
    L: LieAlgebra, s: Subspace, u: Subspace
) -> Subspace | None:
    """First T in [u:L] with S meet T = u and <S, T> = L, or None."""
    require_subalgebra(L, s)
    require_subalgebra(L, u)
    if not s.contains(u):
        raise DimensionMismatch("complement_in_interval: u is not contained in s")
    ctx = context(L)
    sv = ctx.vecset(s)
    uv = ctx.vecset(u)
    for t in ctx.members_between(u):
        if (sv & ctx.vecset(t)) == uv and ctx.join_is_full(s, t):
            return t
    return None
