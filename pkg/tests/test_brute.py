from fractions import Fraction

import pytest

from uncertain_matroids import Area, UncertaintyMatroid
from uncertain_matroids.brute import (
    BruteOracle,
    brute_color,
    brute_is_feasible,
    brute_minimal_feasible,
    brute_report,
    brute_uob_family,
)
from uncertain_matroids.errors import UnsupportedInstanceError
from uncertain_matroids.matroid import UniformMatroid, all_bases

from helpers import fig1a, fig1c, random_corpus, singletons, triangle

E = frozenset({0, 1, 2})


def endpoints_fig1a():
    return UncertaintyMatroid(triangle(), (Area.points(0, 2), Area.points(4, 9), Area.points(1, 3)))


def fig1b_endpoints():
    # the closed areas of the second triangle replaced by their end points
    return UncertaintyMatroid(triangle(), (Area.points(0, 1),) * 3)


class TestColor:
    def test_fig1c_realization(self):
        oracle = BruteOracle(fig1c())
        rows = dict((tuple(w[e] for e in range(3)), mins) for w, mins in oracle.per_realization())
        # realization (1,0,0) has the unique minimum tree {e1,e2}, so e0 is not blue
        assert rows[(1, 0, 0)] == [frozenset({1, 2})]
        blue, red = brute_color(fig1c())
        assert blue == red == {0: False, 1: False, 2: False}

    def test_fig1a_endpoints(self):
        blue, red = brute_color(endpoints_fig1a())
        assert blue == {0: True, 1: False, 2: True}
        assert red == {0: False, 1: True, 2: False}


class TestFamily:
    def test_examples(self):
        assert brute_uob_family(endpoints_fig1a()) == [frozenset({0, 2})]
        assert brute_uob_family(fig1b_endpoints()) == []
        assert brute_uob_family(singletons(triangle(), (3, 3, 3))) == all_bases(triangle())

    def test_family_members_are_bases(self):
        for u in random_corpus(100, 5):
            bases = set(all_bases(u.matroid))
            assert set(brute_uob_family(u)) <= bases


class TestFeasible:
    def test_examples(self):
        assert brute_is_feasible(fig1c(), {0, 1})
        assert not brute_is_feasible(fig1c(), {0})

    def test_full_set(self):
        for u in random_corpus(100, 6):
            assert brute_is_feasible(u, u.ground)

    def test_delegation_on_intervals(self):
        oracle = BruteOracle(fig1a())
        assert oracle.is_feasible(set())
        assert oracle.delegated
        with pytest.raises(UnsupportedInstanceError):
            oracle.is_feasible({0})


class TestMinimal:
    def test_examples(self):
        assert sorted(brute_minimal_feasible(fig1c()), key=sorted) == [{0, 1}, {0, 2}, {1, 2}]
        assert brute_minimal_feasible(endpoints_fig1a()) == [frozenset()]
        # a finite stand-in for the closed-interval triangle: an interior point in every area
        u = UncertaintyMatroid(triangle(), (Area.points(0, Fraction(1, 2), 1),) * 3)
        assert brute_minimal_feasible(u) == [E]

    def test_report_invariants(self):
        for u in random_corpus(60, 7):
            oracle = BruteOracle(u)
            report = oracle.report()
            assert set(report.uob_family) <= set(report.bases)
            for x in report.minimal_feasible:
                assert oracle.is_feasible(x)
                assert not any(oracle.is_feasible(x - {e}) for e in x)

    def test_report_json(self):
        data = brute_report(fig1c()).to_json()
        assert data["uob_family"] == []
        assert len(data["per_realization"]) == 8
        assert data["delegated"] is False


class TestLimits:
    def test_too_many_elements(self):
        u = singletons(UniformMatroid(8, 3), range(8))
        with pytest.raises(UnsupportedInstanceError, match="limit"):
            BruteOracle(u)
        BruteOracle(u, limit=8)

    def test_too_many_realizations(self):
        u = UncertaintyMatroid(UniformMatroid(6, 3), (Area.points(0, 1, 2),) * 6)
        with pytest.raises(UnsupportedInstanceError, match="cap"):
            BruteOracle(u, max_realizations=100)

    def test_non_finite_color(self):
        with pytest.raises(UnsupportedInstanceError):
            brute_color(fig1a())

    def test_large_values_exact(self):
        big = 2**70
        u = singletons(triangle(), (big, big + 1, big + 2))
        assert brute_uob_family(u) == [frozenset({0, 1})]
