"""Chief series, minimal ideals, and U-Frattini classification of factors.

A chief series is a maximal chain of ideals 0 = A_0 < A_1 < ... < A_n = L;
each factor A_i/A_{i-1} is a minimal ideal of L/A_{i-1}.  A factor is
U-Frattini when U + A_{i-1} = L or A_i <= phi(U + A_{i-1}, L); the family
M_i of "complements" of the factor consists of the maximal subalgebras
containing U + A_{i-1} but not A_i.  The two descriptions are computed
independently here (phi test vs. maximal-subalgebra scan) so their
equivalence stays a checkable fact rather than a definition.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from .algebra import (
    LieAlgebra,
    QuotientPresentation,
    full_space,
    ideal_closure,
    is_ideal,
    is_solvable,
    quotient,
    require_subalgebra,
    zero_space,
)
from .errors import BudgetExceeded, LiePrefratError
from .gfp import Subspace

DEFAULT_NODE_BUDGET = 10**5


def node_budget_default() -> int:
    raw = os.environ.get("LIEPREFRAT_NODE_BUDGET")
    return int(raw) if raw else DEFAULT_NODE_BUDGET


@lru_cache(maxsize=None)
def quotient_presentation(L: LieAlgebra, a: Subspace) -> QuotientPresentation:
    """quotient(L, a), memoized per (algebra, ideal)."""
    return quotient(L, a)


_quotient_cached = quotient_presentation


@lru_cache(maxsize=None)
def minimal_ideals(L: LieAlgebra) -> tuple[Subspace, ...]:
    """All inclusion-minimal nonzero ideals, sorted by (dim, rows).

    Every minimal ideal is the ideal closure of any of its lines, so closing
    one representative per projective point finds them all; non-minimal
    closures are pruned afterwards.
    """
    if L.p**L.dim > 100_000:
        raise BudgetExceeded(
            f"minimal_ideals: {L.p}^{L.dim} projective-point scan over the guard"
        )
    full = full_space(L)
    closures = set()
    for v in full.nonzero_vectors():
        lead = next(a for a in v if a)
        if lead != 1:
            continue  # one representative per projective point
        closures.add(ideal_closure(L, Subspace.span(L.p, L.dim, [v])))
    candidates = sorted(closures, key=lambda s: s.key)
    out = []
    for c in candidates:
        if not any(o.dim < c.dim and c.contains(o) for o in out):
            out.append(c)
    # candidates are dim-sorted, so anything containing an earlier survivor
    # is pruned; survivors are pairwise incomparable
    return tuple(out)


@dataclass(frozen=True)
class ChiefSeries:
    algebra: LieAlgebra
    ideals: tuple[Subspace, ...]  # 0 = A_0 < A_1 < ... < A_n = L

    @property
    def length(self) -> int:
        return len(self.ideals) - 1

    def factor_dims(self) -> tuple[int, ...]:
        return tuple(
            self.ideals[i].dim - self.ideals[i - 1].dim
            for i in range(1, len(self.ideals))
        )


def validate_chief_series(L: LieAlgebra, series: ChiefSeries) -> None:
    """Raise if series is not a chief series of L."""
    if series.algebra != L:
        raise LiePrefratError("chief series belongs to a different algebra")
    ideals = series.ideals
    if not ideals or ideals[0].dim != 0 or ideals[-1] != full_space(L):
        raise LiePrefratError("chief series must run from 0 to L")
    for i in range(1, len(ideals)):
        prev, nxt = ideals[i - 1], ideals[i]
        if not (nxt.contains(prev) and nxt.dim > prev.dim):
            raise LiePrefratError(f"series terms {i - 1}, {i} do not strictly increase")
        if not is_ideal(L, nxt):
            raise LiePrefratError(f"series term {i} is not an ideal")
        q = _quotient_cached(L, prev)
        if q.project_space(nxt) not in minimal_ideals(q.algebra):
            raise LiePrefratError(f"factor {i} is not a chief factor")


def chief_series(L: LieAlgebra) -> ChiefSeries:
    """The canonical chief series: at each step lift the (dim, rows)-least
    minimal ideal of the current quotient."""
    if not is_solvable(L):
        raise LiePrefratError("chief_series requires a solvable algebra")
    full = full_space(L)
    chain = [zero_space(L)]
    while chain[-1] != full:
        q = _quotient_cached(L, chain[-1])
        least = minimal_ideals(q.algebra)[0]
        chain.append(q.lift_space(least))
    return ChiefSeries(L, tuple(chain))


def all_chief_series(L: LieAlgebra, node_budget: int | None = None) -> list[ChiefSeries]:
    """Every chief series, by branching over all minimal ideals at each step.

    Deterministic order: depth-first in the sorted minimal-ideal order.
    Raises BudgetExceeded after node_budget branch expansions (default from
    LIEPREFRAT_NODE_BUDGET, else 10^5).
    """
    if not is_solvable(L):
        raise LiePrefratError("all_chief_series requires a solvable algebra")
    budget = node_budget if node_budget is not None else node_budget_default()
    full = full_space(L)
    results: list[ChiefSeries] = []
    nodes = 0

    def extend(chain: list[Subspace]) -> None:
        nonlocal nodes
        if chain[-1] == full:
            results.append(ChiefSeries(L, tuple(chain)))
            return
        q = _quotient_cached(L, chain[-1])
        for minimal in minimal_ideals(q.algebra):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(
                    f"all_chief_series: more than {budget} branch nodes"
                )
            extend(chain + [q.lift_space(minimal)])

    extend([zero_space(L)])
    return results


@dataclass(frozen=True)
class FactorClassification:
    """One chief factor A_i/A_{i-1}, classified relative to U."""

    index: int  # 1-based position in the series
    prev: Subspace
    nxt: Subspace
    factor_dim: int
    u_frattini: bool
    complements: tuple[Subspace, ...]  # the family M_i; empty iff u_frattini


def classify_pair(
    L: LieAlgebra, prev: Subspace, nxt: Subspace, u: Subspace, index: int = 0
) -> FactorClassification:
    """Classify the chief factor nxt/prev relative to u.

    The u_frattini flag uses the definition (u + prev = L, or
    nxt <= phi(u + prev, L)); the complements family is scanned from the
    maximal subalgebras independently of that flag.
    """
    from .intervals import context

    ctx = context(L)
    v = u.sum(prev)
    vv = ctx.vecset(v)
    nv = ctx.vecset(nxt)
    if v.dim == L.dim:
        frattini = True
    else:
        frattini = ctx.phi_of(v).contains(nxt)
    complements = tuple(
        m
        for m in ctx.maximal()
        if vv <= ctx.vecset(m) and not nv <= ctx.vecset(m)
    )
    return FactorClassification(
        index=index,
        prev=prev,
        nxt=nxt,
        factor_dim=nxt.dim - prev.dim,
        u_frattini=frattini,
        complements=complements,
    )


def classify_factor(
    L: LieAlgebra, series: ChiefSeries, i: int, u: Subspace
) -> FactorClassification:
    """Classify factor i (1-based) of the series relative to u."""
    if not 1 <= i <= series.length:
        raise IndexError(f"factor index {i} out of range 1..{series.length}")
    require_subalgebra(L, u)
    return classify_pair(L, series.ideals[i - 1], series.ideals[i], u, index=i)


def classify_series(
    L: LieAlgebra, series: ChiefSeries, u: Subspace
) -> tuple[FactorClassification, ...]:
    require_subalgebra(L, u)
    return tuple(
        classify_pair(L, series.ideals[i - 1], series.ideals[i], u, index=i)
        for i in range(1, len(series.ideals))
    )


def jordan_profile(
    L: LieAlgebra, series: ChiefSeries, u: Subspace
) -> tuple[tuple[int, bool], ...]:
    """Sorted multiset of (factor dimension, u_frattini) pairs.

    The Jordan-Hoelder refinement for chief series says this is the same for
    every chief series of L, for every test subalgebra u.
    """
    pairs = [
        (c.factor_dim, c.u_frattini) for c in classify_series(L, series, u)
    ]
    return tuple(sorted(pairs))
