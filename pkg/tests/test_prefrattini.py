"""The prefrattini construction and its structure theorems."""

import pytest

import oracles

from lieprefrat.algebra import full_space, zero_space
from lieprefrat.chief import all_chief_series, chief_series
from lieprefrat.corpus import (
    affine_line_algebra,
    heisenberg_algebra,
    scaled_heisenberg_algebra,
)
from lieprefrat.gfp import Subspace
from lieprefrat.intervals import omega_min, phi_of
from lieprefrat.errors import LiePrefratError
from lieprefrat.prefrattini import (
    avoids,
    cover_avoid_profile,
    covers,
    dimension_formula_check,
    phi_intersection_check,
    prefrattini_intersection,
    prefrattini_set,
    verify_prefrat_theorem,
)

FOUR_LINES = [
    ((0, 0, 1, 0, 0),),
    ((0, 1, 1, 0, 0),),
    ((1, 0, 1, 0, 0),),
    ((1, 1, 1, 0, 0),),
]


def test_members_frozen_for_family_p2(weyl2):
    result = prefrattini_set(weyl2, zero_space(weyl2))
    assert sorted(b.rows for b in result.members) == FOUR_LINES
    assert result.common_dim == 1
    assert result.index_set == (1, 3, 4)


def test_members_independent_of_series(weyl2):
    u = zero_space(weyl2)
    baseline = None
    for series in all_chief_series(weyl2):
        members = set(prefrattini_set(weyl2, u, series=series).members)
        if baseline is None:
            baseline = members
        assert members == baseline
    assert baseline == {Subspace.span(2, 5, [r for r in rows]) for rows in FOUR_LINES}


def test_members_match_brute_force(weyl2):
    from lieprefrat.algebra import bracket
    from lieprefrat.gfp import unit_vector

    table = {
        (i, j): bracket(weyl2, unit_vector(5, i), unit_vector(5, j))
        for i in range(5)
        for j in range(i + 1, 5)
    }
    subs = oracles.subalgebras(2, 5, table)
    chain = sorted(oracles.all_chief_chains(2, 5, table))[0]
    expected = oracles.prefrattini_sets(
        2, 5, table, frozenset({(0,) * 5}), list(chain), subs
    )
    got = {frozenset(b.vectors()) for b in prefrattini_set(weyl2, zero_space(weyl2)).members}
    assert got == {frozenset(s) for s in expected}


def test_nontrivial_u_frozen(weyl2):
    u = Subspace.span(2, 5, [(0, 0, 1, 0, 0), (0, 0, 0, 1, 0), (0, 0, 0, 0, 1)])
    result = prefrattini_set(weyl2, u)
    assert [b.rows for b in result.members] == [u.rows]
    assert result.index_set == (1,)
    assert result.common_dim == 3


def test_full_u_gives_whole_algebra(weyl2):
    result = prefrattini_set(weyl2, full_space(weyl2))
    assert [b.rows for b in result.members] == [full_space(weyl2).rows]
    assert result.index_set == ()


def test_completely_solvable_collapses_to_phi():
    for L in (
        heisenberg_algebra(2),
        heisenberg_algebra(3),
        affine_line_algebra(2),
        scaled_heisenberg_algebra(3),
    ):
        u = zero_space(L)
        result = prefrattini_set(L, u)
        assert result.members == (phi_of(L, u),)


def test_main_theorem_members_equal_omega_min(weyl2, heis2, affine2):
    for L in (weyl2, heis2, affine2):
        u = zero_space(L)
        report = verify_prefrat_theorem(L, u)
        assert report.equal
        assert report.only_omega_min == ()
        assert report.only_prefrattini == ()
        assert set(prefrattini_set(L, u).members) == set(omega_min(L, u))


def test_dimension_formula(weyl2):
    u = zero_space(weyl2)
    expected, actual = dimension_formula_check(weyl2, u)
    assert expected == 1
    assert actual == (1, 1, 1, 1)


def test_cover_avoid_profile_frozen(weyl2):
    series = chief_series(weyl2)
    c_line = Subspace.span(2, 5, [(0, 0, 1, 0, 0)])
    profile = cover_avoid_profile(weyl2, c_line, series)
    assert profile == ("avoids", "covers", "avoids", "avoids")


def test_members_cover_exactly_frattini_factors(weyl2):
    series = chief_series(weyl2)
    u = zero_space(weyl2)
    for b in prefrattini_set(weyl2, u, series=series).members:
        for i in range(1, series.length + 1):
            if i == 2:
                assert covers(weyl2, b, series, i)
            else:
                assert avoids(weyl2, b, series, i)


def test_s_line_is_not_a_member(weyl2):
    # The line through s avoids the Frattini factor instead of covering
    # it, which is what rules it out of the construction.
    series = chief_series(weyl2)
    s_line = Subspace.span(2, 5, [(0, 0, 0, 1, 0)])
    assert s_line not in prefrattini_set(weyl2, zero_space(weyl2)).members
    assert not covers(weyl2, s_line, series, 2)


def test_intersection_of_members(weyl2):
    u = zero_space(weyl2)
    assert prefrattini_intersection(weyl2, u) == zero_space(weyl2)
    report = phi_intersection_check(weyl2, u)
    assert report.phi == zero_space(weyl2)
    assert report.intersection == zero_space(weyl2)
    assert report.equal


def test_phi_always_below_members(weyl2, heis2):
    for L in (weyl2, heis2):
        u = zero_space(L)
        phi = phi_of(L, u)
        for b in prefrattini_set(L, u).members:
            assert phi <= b


def test_rejects_foreign_series(weyl2, heis2):
    series = chief_series(heis2)
    with pytest.raises(LiePrefratError):
        prefrattini_set(weyl2, zero_space(weyl2), series=series)
