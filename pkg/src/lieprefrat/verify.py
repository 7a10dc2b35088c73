"""The verification harness: every proved statement as a named check.

A check takes (L, u, guards) and returns (passed, witnesses) where
witnesses is a list of Subspace values explaining a failure.  Checks raise
HypothesisNotMet when the statement's hypothesis fails for (L, u) -- the
harness reports SKIPPED(hypothesis), never a vacuous PASS -- and
BudgetExceeded when an enumeration guard trips, reported SKIPPED(resource).

Registry order is fixed; report rows come out in (algebra, U, check) order
regardless of how they were computed, so repeated runs are byte-identical.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .algebra import (
    LieAlgebra,
    derived_series,
    is_completely_solvable,
    is_solvable,
    restriction,
    validate_structure,
    zero_space,
)
from .chief import (
    all_chief_series,
    chief_series,
    classify_pair,
    classify_series,
    jordan_profile,
    minimal_ideals,
    quotient_presentation,
)
from .conjugacy import verify_conjugacy_theorem
from .errors import BudgetExceeded, HypothesisNotMet, LiePrefratError
from .gfp import Subspace
from .intervals import context, omega, omega_min, phi_of
from .prefrattini import (
    avoids,
    covers,
    dimension_formula_check,
    phi_intersection_check,
    prefrattini_set,
    verify_prefrat_theorem,
)


@dataclass(frozen=True)
class Guards:
    """Resource limits threaded through the checks (None = module default)."""

    node_budget: int | None = None
    group_cap: int | None = None


def check_axioms(L, u, guards):
    """Structure table satisfies the Lie axioms and L is solvable."""
    if validate_structure(L) is not None:
        return False, []
    stable = derived_series(L)[-1]
    return stable.dim == 0, [] if stable.dim == 0 else [stable]


def check_omega_phi_closed(L, u, guards):
    """Every proper S in Omega(u, L) is an intersection of maximal
    subalgebras: S = phi(S, L)."""
    bad = [s for s in omega(L, u) if s.dim < L.dim and phi_of(L, s) != s]
    return not bad, bad


def check_omega_ideal_sum(L, u, guards):
    """Omega(u, L) is closed under adding any ideal: S + I stays in Omega."""
    ctx = context(L)
    om = omega(L, u)
    om_set = set(om)
    bad = []
    for s in om:
        for ideal in ctx.ideals():
            t = s.sum(ideal)
            if t not in om_set:
                bad.extend([s, ideal])
    return not bad, bad


def check_omega_restrict(L, u, guards):
    """For a maximal subalgebra M >= u complementing a minimal ideal,
    Omega(u, M) = {S in Omega(u, L) : S <= M}."""
    ctx = context(L)
    uv = ctx.vecset(u)
    om = omega(L, u)
    bad = []
    for a in minimal_ideals(L):
        for m in ctx.maximal():
            mv = ctx.vecset(m)
            if not uv <= mv or a.intersect(m).dim != 0:
                continue
            pres = restriction(L, m)
            inner = {
                pres.embed_space(s)
                for s in omega(pres.algebra, pres.restrict_space(u))
            }
            outer = {s for s in om if ctx.vecset(s) <= mv}
            if inner != outer:
                bad.extend([a, m])
    return not bad, bad


def check_min_avoid_equivalence(L, u, guards):
    """For each minimal ideal A the three statements agree: some minimal
    Omega member misses A; some maximal subalgebra over u misses A; every
    minimal Omega member extends to a complement of A."""
    ctx = context(L)
    uv = ctx.vecset(u)
    om_min = omega_min(L, u)
    max_over_u = [m for m in ctx.maximal() if uv <= ctx.vecset(m)]
    bad = []
    for a in minimal_ideals(L):
        av = ctx.vecset(a)
        misses_min = any(not av <= ctx.vecset(s) for s in om_min)
        misses_max = any(not av <= ctx.vecset(m) for m in max_over_u)

        def complement_over(s):
            sv = ctx.vecset(s)
            return any(
                sv <= ctx.vecset(t)
                and a.intersect(t).dim == 0
                and a.sum(t).dim == L.dim
                for t in ctx.subalgebras()
            )

        all_complemented = all(complement_over(s) for s in om_min)
        if not (misses_min == misses_max == all_complemented):
            bad.append(a)
    return not bad, bad


def check_omega_min_quotient(L, u, guards):
    """For every ideal A and S in Omega_min(u, L): S + A is minimal in
    Omega(u + A, L), and its image is minimal in Omega of L/A."""
    ctx = context(L)
    om_min = omega_min(L, u)
    bad = []
    for a in ctx.ideals():
        target = set(omega_min(L, u.sum(a)))
        q = quotient_presentation(L, a)
        q_target = set(omega_min(q.algebra, q.project_space(u)))
        for s in om_min:
            lifted = s.sum(a)
            if lifted not in target or q.project_space(lifted) not in q_target:
                bad.extend([a, s])
    return not bad, bad


def check_prefrat_theorem(L, u, guards):
    """Omega_min(u, L) = Pi(u, L)."""
    report = verify_prefrat_theorem(L, u)
    return report.equal, list(report.only_omega_min + report.only_prefrattini)


def check_completely_solvable(L, u, guards):
    """For completely solvable L, both Omega_min and Pi collapse to
    {phi(u, L)}."""
    if not is_completely_solvable(L):
        raise HypothesisNotMet("algebra is not completely solvable")
    phi = phi_of(L, u)
    om = omega_min(L, u)
    pf = prefrattini_set(L, u).members
    ok = om == [phi] and pf == (phi,)
    return ok, [] if ok else list(dict.fromkeys(list(om) + list(pf)))


def check_dimension(L, u, guards):
    """All Pi members share the dimension sum of the u-Frattini factors."""
    expected, actual = dimension_formula_check(L, u)
    if all(d == expected for d in actual):
        return True, []
    members = prefrattini_set(L, u).members
    return False, [b for b in members if b.dim != expected]


def check_cover_avoid(L, u, guards):
    """Each Pi member covers exactly the u-Frattini factors of the canonical
    series and avoids all the others."""
    series = chief_series(L)
    result = prefrattini_set(L, u, series)
    frattini = {c.index for c in result.classifications if c.u_frattini}
    bad = []
    for b in result.members:
        for i in range(1, series.length + 1):
            want_cover = i in frattini
            if covers(L, b, series, i) != want_cover:
                bad.append(b)
                break
            if avoids(L, b, series, i) == want_cover:
                bad.append(b)
                break
    return not bad, bad


def check_phi_intersection(L, u, guards):
    """phi(u, L) equals the intersection of all Pi members."""
    report = phi_intersection_check(L, u)
    return report.equal, [] if report.equal else [report.phi, report.intersection]


def check_factor_complements(L, u, guards):
    """Classification sanity: u_frattini iff no complement family member,
    and every M in the family satisfies A_i + M = L, A_i meet M = A_{i-1}."""
    series = chief_series(L)
    full = context(L).full
    bad = []
    for c in classify_series(L, series, u):
        if c.u_frattini != (len(c.complements) == 0):
            bad.append(c.nxt)
        for m in c.complements:
            if c.nxt.sum(m) != full or c.nxt.intersect(m) != c.prev:
                bad.append(m)
    return not bad, bad


def check_minimal_pair_profiles(L, u, guards):
    """Two distinct minimal ideals give matching (dim, flag) profiles for
    the factor pairs through A1 + A2."""
    mins = minimal_ideals(L)
    zero = zero_space(L)
    bad = []
    for a1, a2 in combinations(mins, 2):
        asum = a1.sum(a2)

        def profile(first):
            lower = classify_pair(L, zero, first, u)
            upper = classify_pair(L, first, asum, u)
            return sorted(
                [
                    (lower.factor_dim, lower.u_frattini),
                    (upper.factor_dim, upper.u_frattini),
                ]
            )

        if profile(a1) != profile(a2):
            bad.extend([a1, a2])
    return not bad, bad


def check_jordan_holder(L, u, guards):
    """Every chief series yields the same (dim, u_frattini) multiset."""
    series_list = all_chief_series(L, guards.node_budget)
    profiles = {}
    for s in series_list:
        profiles.setdefault(jordan_profile(L, s, u), s)
    if len(profiles) == 1:
        return True, []
    witnesses = []
    for s in list(profiles.values())[:2]:
        witnesses.extend(s.ideals)
    return False, witnesses


def check_series_independence(L, u, guards):
    """Pi(u, L) does not depend on the chief series used."""
    series_list = all_chief_series(L, guards.node_budget)
    base = prefrattini_set(L, u, series_list[0]).members
    bad = []
    for s in series_list[1:]:
        members = prefrattini_set(L, u, s).members
        if members != base:
            bad.extend(set(base).symmetric_difference(members))
            break
    return not bad, bad


def check_conjugacy(L, u, guards):
    """Pi(u, L) is one orbit of I(L:L^infinity) when class(L^infinity) < p."""
    report = verify_conjugacy_theorem(L, u, guards.group_cap)
    if report.status == "SKIPPED(hypothesis)":
        raise HypothesisNotMet(report.reason or "conjugacy hypothesis fails")
    ok = report.status == "PASS"
    return ok, [m for m, w in report.witnesses if w is None]


CHECKS = {
    "axioms": check_axioms,
    "omega-phi-closed": check_omega_phi_closed,
    "omega-ideal-sum": check_omega_ideal_sum,
    "omega-restrict": check_omega_restrict,
    "min-avoid-equivalence": check_min_avoid_equivalence,
    "omega-min-quotient": check_omega_min_quotient,
    "prefrat-theorem": check_prefrat_theorem,
    "completely-solvable": check_completely_solvable,
    "dimension": check_dimension,
    "cover-avoid": check_cover_avoid,
    "phi-intersection": check_phi_intersection,
    "factor-complements": check_factor_complements,
    "minimal-pair-profiles": check_minimal_pair_profiles,
    "jordan-holder": check_jordan_holder,
    "series-independence": check_series_independence,
    "conjugacy": check_conjugacy,
}


@dataclass(frozen=True)
class CheckResult:
    algebra: str
    u: tuple
    check: str
    status: str  # PASS | FAIL | SKIPPED(hypothesis) | SKIPPED(resource)
    witnesses: tuple

    def to_json_row(self) -> dict:
        return {
            "algebra": self.algebra,
            "u": [list(row) for row in self.u],
            "check": self.check,
            "status": self.status,
            "witnesses": [
                [list(row) for row in matrix] for matrix in self.witnesses
            ],
        }


def select_checks(names) -> list[str]:
    if names in (None, "all", ["all"]):
        return list(CHECKS)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise LiePrefratError(
            f"unknown checks {unknown}; available: {', '.join(CHECKS)}"
        )
    return list(names)


def resolve_u_list(L: LieAlgebra, mode: str) -> list[Subspace]:
    """U selection: "zero", "all-subalgebras", or "sample:N" (seeded)."""
    if mode == "zero":
        return [zero_space(L)]
    subs = context(L).subalgebras()
    if mode == "all-subalgebras":
        return list(subs)
    if mode.startswith("sample:"):
        try:
            count = int(mode.split(":", 1)[1])
        except ValueError:
            raise LiePrefratError(f"bad sample count in u-mode {mode!r}") from None
        rng = random.Random(0)
        picked = sorted(rng.sample(range(len(subs)), min(count, len(subs))))
        return [subs[i] for i in picked]
    raise LiePrefratError(
        f"unknown u-mode {mode!r} (use zero, all-subalgebras, or sample:N)"
    )


def run_cell(L: LieAlgebra, u: Subspace, name: str, guards: Guards) -> tuple[str, tuple]:
    """One (algebra, u, check) cell -> (status, witnesses-as-row-tuples)."""
    try:
        passed, witnesses = CHECKS[name](L, u, guards)
    except HypothesisNotMet:
        return "SKIPPED(hypothesis)", ()
    except BudgetExceeded:
        return "SKIPPED(resource)", ()
    status = "PASS" if passed else "FAIL"
    return status, tuple(w.rows for w in witnesses)


def run_verification(
    entries,
    u_mode: str = "zero",
    checks=None,
    guards: Guards = Guards(),
) -> list[CheckResult]:
    """entries: iterable of (name, LieAlgebra).  Returns one row per
    (algebra, U, check), ordered by input order, U canonical order, registry
    order."""
    names = select_checks(checks)
    rows = []
    for entry_name, L in entries:
        try:
            u_list = resolve_u_list(L, u_mode)
        except BudgetExceeded:
            for name in names:
                rows.append(
                    CheckResult(entry_name, (), name, "SKIPPED(resource)", ())
                )
            continue
        for u in u_list:
            for name in names:
                status, witnesses = run_cell(L, u, name, guards)
                rows.append(
                    CheckResult(entry_name, u.rows, name, status, witnesses)
                )
    return rows
