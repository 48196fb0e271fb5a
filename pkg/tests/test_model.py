from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from uncertain_matroids import (
    Area,
    ContractError,
    InputError,
    UncertaintyMatroid,
    UniformMatroid,
    bounds,
    enumerate_realizations,
    intersects_open,
    reveal,
)
from uncertain_matroids.errors import UnsupportedInstanceError
from uncertain_matroids.model import interval, point

from helpers import fig1a, fig1c, triangle

F = Fraction


def brute_intersects_open(a, lo, hi, steps=64):
    """Sample the open interval on a fine grid and also probe each piece end."""
    if lo == hi:
        return False
    probes = {lo + (hi - lo) * k / steps for k in range(1, steps)}
    for p in a.pieces:
        for v in (p.lo, p.hi, (p.lo + p.hi) / 2):
            if lo < v < hi:
                probes.add(v)
        # any piece straddling the whole range meets it
        probes.add((lo + hi) / 2)
    return any(v in a for v in probes)


small = st.integers(0, 6).map(F)
pieces = st.one_of(
    small.map(point),
    st.tuples(small, st.integers(1, 4), st.booleans(), st.booleans()).map(
        lambda t: interval(t[0], t[0] + t[1], t[2], t[3])
    ),
)
areas = st.lists(pieces, min_size=1, max_size=3).map(Area)


class TestBounds:
    def test_examples(self):
        assert bounds(Area.closed(0, 2)) == (0, 2)
        assert bounds(Area.points(0, 1)) == (0, 1)
        assert bounds(Area.points(5)) == (5, 5)

    def test_open_ends_report_infimum(self):
        a = Area([interval(1, 3, False, False)])
        assert bounds(a) == (1, 3)
        assert 1 not in a and 3 not in a and 2 in a

    @given(areas)
    def test_bounds_are_extremes_of_pieces(self, a):
        lo, hi = bounds(a)
        assert lo == min(p.lo for p in a.pieces)
        assert hi == max(p.hi for p in a.pieces)


class TestAreaConstruction:
    def test_merge_touching(self):
        a = Area([interval(0, 1), interval(1, 2, False, True)])
        assert a == Area.closed(0, 2)
        assert Area([point(1), interval(0, 1, True, False)]) == Area.closed(0, 1)

    def test_open_gap_kept(self):
        a = Area([interval(0, 1, True, False), interval(1, 2, False, True)])
        assert len(a.pieces) == 2
        assert 1 not in a

    def test_points_deduplicate(self):
        assert Area.points(1, 0, 1) == Area.points(0, 1)
        assert Area.points(0, 1).is_two_point
        assert Area.points(3).is_singleton

    def test_rejects_bad_input(self):
        with pytest.raises(InputError):
            Area([])
        with pytest.raises(InputError):
            interval(2, 1)
        with pytest.raises(InputError):
            interval(1, 1, False, True)

    def test_degenerate_closed_interval_is_point(self):
        assert Area([interval(4, 4)]) == Area.points(4)

    def test_members_require_finite(self):
        assert Area.points(2, 0).members() == [0, 2]
        with pytest.raises(UnsupportedInstanceError):
            Area.closed(0, 1).members()

    @given(st.lists(pieces, min_size=1, max_size=4))
    def test_membership_preserved_by_merge(self, ps):
        a = Area(ps)
        for k in range(0, 41):
            v = F(k, 4)
            assert (v in a) == any(p.contains(v) for p in ps)

    @given(areas)
    def test_pieces_disjoint_and_sorted(self, a):
        for p, q in zip(a.pieces, a.pieces[1:]):
            assert p.hi <= q.lo
            if p.hi == q.lo:
                assert not p.hi_closed and not q.lo_closed

    @given(areas)
    def test_closure(self, a):
        c = a.closure()
        assert bounds(c) == bounds(a)
        assert all(p.lo_closed and p.hi_closed for p in c.pieces)
        assert all(p.lo in c and p.hi in c for p in a.pieces)


class TestIntersectsOpen:
    def test_examples(self):
        assert not intersects_open(Area.points(0, 1), 0, 1)
        assert intersects_open(Area.closed(0, 1), 0, 1)
        assert intersects_open(Area.points(5), 0, 10)

    def test_empty_range(self):
        assert not intersects_open(Area.closed(0, 9), 3, 3)

    def test_reversed_range(self):
        with pytest.raises(ContractError):
            intersects_open(Area.points(1), 2, 1)

    @given(areas, small, st.integers(0, 4))
    def test_matches_sampling(self, a, lo, width):
        hi = lo + width
        assert intersects_open(a, lo, hi) == brute_intersects_open(a, lo, hi)


class TestUncertaintyMatroid:
    def test_arity_checked(self):
        with pytest.raises(InputError):
            UncertaintyMatroid(triangle(), (Area.points(0),) * 2)
        with pytest.raises(InputError):
            UncertaintyMatroid(triangle(), (Area.points(0),) * 3, (1, 2))

    def test_costs_become_fractions(self):
        u = fig1c()
        assert u.costs == (F(1), F(2), F(3))

    def test_certain_and_uncertain(self):
        u = UncertaintyMatroid(triangle(), (Area.points(1), Area.closed(0, 1), Area.points(0, 2)))
        assert u.is_certain(0)
        assert u.uncertain() == {1, 2}
        assert (u.lower(2), u.upper(2)) == (0, 2)


class TestReveal:
    def test_fig1c_two_zeros(self):
        r = reveal(fig1c(), {0: 0, 1: 0})
        assert r.areas == (Area.points(0), Area.points(0), Area.points(0, 1))

    def test_empty_assignment(self):
        u = fig1c()
        assert reveal(u, {}) == u

    def test_fig1a_endpoint(self):
        r = reveal(fig1a(), {1: 4})
        assert r.areas == (Area.closed(0, 2), Area.points(4), Area.closed(1, 3))

    def test_value_outside_area_names_element(self):
        with pytest.raises(InputError, match="element 2"):
            reveal(fig1c(), {2: F(1, 2)})
        with pytest.raises(InputError):
            reveal(fig1c(), {7: 0})

    @given(st.integers(0, 2), st.sampled_from([0, 1]))
    def test_reveal_then_bounds(self, e, v):
        r = reveal(fig1c(), {e: v})
        assert bounds(r.areas[e]) == (v, v)
        assert r.is_certain(e)


class TestRealizations:
    def test_fig1c_count(self):
        rs = list(enumerate_realizations(fig1c()))
        assert len(rs) == 8
        assert len({tuple(sorted(r.items())) for r in rs}) == 8

    def test_singletons(self):
        u = UncertaintyMatroid(triangle(), (Area.points(1), Area.points(2), Area.points(3)))
        assert list(enumerate_realizations(u)) == [{0: 1, 1: 2, 2: 3}]

    def test_product_order(self):
        u = UncertaintyMatroid(UniformMatroid(2, 1), (Area.points(0, 1), Area.points(3)))
        assert list(enumerate_realizations(u)) == [{0: 0, 1: 3}, {0: 1, 1: 3}]

    def test_non_finite_rejected(self):
        with pytest.raises(UnsupportedInstanceError):
            list(enumerate_realizations(fig1a()))

    def test_subset_of_elements(self):
        rs = list(enumerate_realizations(fig1a(), elements=[]))
        assert rs == [{}]
