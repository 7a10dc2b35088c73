"""U-prefrattini subalgebras: B = intersection of one M_i from each family
M_i over the non-U-Frattini chief factor indices.

Pi(U, L) collects the distinct such intersections.  With no non-Frattini
factor the empty intersection gives Pi = {L}.  The headline facts proved
about Pi (and verified by this package): it equals Omega_min(U, L), every
member covers exactly the U-Frattini factors and avoids the rest, all
members share the dimension sum of the U-Frattini factor dimensions, their
intersection is phi(U, L), and the set does not depend on the chief series.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import LieAlgebra, full_space, require_subalgebra
from .chief import (
    ChiefSeries,
    FactorClassification,
    chief_series,
    classify_series,
    validate_chief_series,
)
from .gfp import Subspace
from .intervals import omega_min, phi_of


@dataclass(frozen=True)
class PrefrattiniResult:
    algebra: LieAlgebra
    u: Subspace
    series: ChiefSeries
    classifications: tuple[FactorClassification, ...]
    index_set: tuple[int, ...]  # the non-U-Frattini indices (1-based)
    members: tuple[Subspace, ...]  # deduplicated, sorted by (dim, rows)
    common_dim: int | None  # None would mean the dimension lemma failed


def prefrattini_set(
    L: LieAlgebra, u: Subspace, series: ChiefSeries | None = None
) -> PrefrattiniResult:
    """Compute Pi(u, L) along the given (default: canonical) chief series.

    The cartesian product over the M_i families is folded one factor at a
    time with deduplication after each step, so identical partial
    intersections are never expanded twice.
    """
    require_subalgebra(L, u)
    if series is None:
        series = chief_series(L)
    else:
        validate_chief_series(L, series)
    classifications = classify_series(L, series, u)
    index_set = tuple(c.index for c in classifications if not c.u_frattini)
    partial = {full_space(L)}
    for c in classifications:
        if c.u_frattini:
            continue
        partial = {b.intersect(m) for b in partial for m in c.complements}
    members = tuple(sorted(partial, key=lambda s: s.key))
    dims = {b.dim for b in members}
    common_dim = dims.pop() if len(dims) == 1 else None
    return PrefrattiniResult(
        algebra=L,
        u=u,
        series=series,
        classifications=classifications,
        index_set=index_set,
        members=members,
        common_dim=common_dim,
    )


def covers(L: LieAlgebra, b: Subspace, series: ChiefSeries, i: int) -> bool:
    """B covers A_i/A_{i-1} iff B + A_i = B + A_{i-1}."""
    prev, nxt = series.ideals[i - 1], series.ideals[i]
    return b.sum(nxt) == b.sum(prev)


def avoids(L: LieAlgebra, b: Subspace, series: ChiefSeries, i: int) -> bool:
    """B avoids A_i/A_{i-1} iff B meet A_i = B meet A_{i-1}."""
    prev, nxt = series.ideals[i - 1], series.ideals[i]
    return b.intersect(nxt) == b.intersect(prev)


def cover_avoid_profile(
    L: LieAlgebra, b: Subspace, series: ChiefSeries
) -> tuple[str, ...]:
    """Per-factor "covers" / "avoids" / "neither" for the subspace b."""
    out = []
    for i in range(1, len(series.ideals)):
        c = covers(L, b, series, i)
        a = avoids(L, b, series, i)
        out.append("covers" if c else "avoids" if a else "neither")
    return tuple(out)


def dimension_formula_check(
    L: LieAlgebra, u: Subspace, series: ChiefSeries | None = None
) -> tuple[int, tuple[int, ...]]:
    """(expected dim of every Pi member, actual dims).

    Expected = sum of the U-Frattini factor dimensions of the series.
    """
    result = prefrattini_set(L, u, series)
    expected = sum(
        c.factor_dim for c in result.classifications if c.u_frattini
    )
    return expected, tuple(b.dim for b in result.members)


def prefrattini_intersection(
    L: LieAlgebra, u: Subspace, series: ChiefSeries | None = None
) -> Subspace:
    """Intersection of all Pi(u, L) members (equals phi(u, L))."""
    members = prefrattini_set(L, u, series).members
    out = full_space(L)
    for b in members:
        out = out.intersect(b)
    return out


@dataclass(frozen=True)
class TheoremReport:
    """Side-by-side Omega_min vs Pi comparison."""

    omega_min: tuple[Subspace, ...]
    prefrattini: tuple[Subspace, ...]
    equal: bool
    only_omega_min: tuple[Subspace, ...]
    only_prefrattini: tuple[Subspace, ...]


def verify_prefrat_theorem(L: LieAlgebra, u: Subspace) -> TheoremReport:
    """Check Omega_min(u, L) = Pi(u, L), with discrepancy witnesses."""
    om = tuple(omega_min(L, u))
    pf = prefrattini_set(L, u).members
    om_set, pf_set = set(om), set(pf)
    return TheoremReport(
        omega_min=om,
        prefrattini=pf,
        equal=om_set == pf_set,
        only_omega_min=tuple(s for s in om if s not in pf_set),
        only_prefrattini=tuple(s for s in pf if s not in om_set),
    )


@dataclass(frozen=True)
class PhiIntersectionReport:
    phi: Subspace
    intersection: Subspace
    equal: bool


def phi_intersection_check(L: LieAlgebra, u: Subspace) -> PhiIntersectionReport:
    """Check phi(u, L) = intersection of the Pi(u, L) members."""
    phi = phi_of(L, u)
    inter = prefrattini_intersection(L, u)
    return PhiIntersectionReport(phi=phi, intersection=inter, equal=phi == inter)
