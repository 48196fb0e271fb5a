"""Exhaustive ground truth for small instances with finite areas.

Everything here works straight from the definitions: enumerate all bases,
enumerate all realizations, and compare basis weights.  Nothing here uses the
coloring or witness machinery, so these results can check that machinery.

Weights are scaled by the common denominator to integers so that the basis
weight table is an exact integer matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import UnsupportedInstanceError
from .matroid import DisjointSet, Matroid, all_bases
from .model import UncertaintyMatroid, enumerate_realizations, format_area, reveal
from .uob import exists_uob

DEFAULT_LIMIT = 7
DEFAULT_MAX_REALIZATIONS = 200_000


@dataclass
class BruteReport:
    bases: list[frozenset[int]]
    per_realization: list[tuple[dict[int, Fraction], list[frozenset[int]]]]
    uob_family: list[frozenset[int]]
    blue: dict[int, bool]
    red: dict[int, bool]
    minimal_feasible: list[frozenset[int]]
    delegated: bool = False

    def to_json(self) -> dict:
        def fmt(v: Fraction) -> str:
            return str(v)

        return {
            "bases": [sorted(b) for b in self.bases],
            "per_realization": [
                {"weights": {str(e): fmt(v) for e, v in w.items()}, "min_bases": [sorted(b) for b in bs]}
                for w, bs in self.per_realization
            ],
            "uob_family": [sorted(b) for b in self.uob_family],
            "colors": [
                {"element": e, "blue": self.blue[e], "red": self.red[e]} for e in sorted(self.blue)
            ],
            "minimal_feasible": [sorted(x) for x in self.minimal_feasible],
            "delegated": self.delegated,
        }


class BruteOracle:
    """Realization table for one instance, built once and queried many times."""

    def __init__(
        self,
        u: UncertaintyMatroid,
        limit: int = DEFAULT_LIMIT,
        max_realizations: int = DEFAULT_MAX_REALIZATIONS,
    ):
        self.u = u
        self.limit = limit
        self.max_realizations = max_realizations
        self.elements = sorted(u.ground)
        if len(self.elements) > limit:
            raise UnsupportedInstanceError(
                f"instance has {len(self.elements)} elements; exhaustive limit is {limit}"
            )
        self.position = {e: i for i, e in enumerate(self.elements)}
        self.delegated = False
        self.bases = all_bases(u.matroid)
        self.finite = all(u.areas[e].is_finite for e in self.elements)
        self._table = self._build_table() if self.finite else None

    def _build_table(self):
        u = self.u
        members = [u.areas[e].members() for e in self.elements]
        count = math.prod(len(vs) for vs in members)
        if count > self.max_realizations:
            raise UnsupportedInstanceError(
                f"{count} realizations exceed the cap of {self.max_realizations}"
            )
        scale = math.lcm(*(v.denominator for vs in members for v in vs))
        scaled = [[int(v * scale) for v in vs] for vs in members]
        largest = max(abs(v) for vs in scaled for v in vs) * max(len(self.elements), 1)
        dtype = np.int64 if largest < 2**62 else object
        k = len(self.elements)
        incidence = np.zeros((len(self.bases), k), dtype=dtype)
        for j, b in enumerate(self.bases):
            for e in b:
                incidence[j, self.position[e]] = 1
        grids = np.meshgrid(*[np.array(vs, dtype=dtype) for vs in scaled], indexing="ij")
        weights = np.stack([g.reshape(-1) for g in grids], axis=1) if k else np.zeros((1, 0), dtype)
        totals = weights @ incidence.T
        is_min = totals == totals.min(axis=1, keepdims=True)
        self.shape = tuple(len(vs) for vs in members)
        self.members = members
        self.incidence = incidence.astype(bool)
        return is_min.reshape(self.shape + (len(self.bases),))

    def _require_finite(self) -> np.ndarray:
        if self._table is None:
            bad = [e for e in self.elements if not self.u.areas[e].is_finite]
            raise UnsupportedInstanceError(
                f"elements {bad} have non-finite areas, e.g. {format_area(self.u.areas[bad[0]])}"
            )
        return self._table

    def per_realization(self) -> list[tuple[dict[int, Fraction], list[frozenset[int]]]]:
        table = self._require_finite().reshape(-1, len(self.bases))
        rows = enumerate_realizations(self.u)
        return [
            (w, [self.bases[j] for j in np.flatnonzero(row)]) for w, row in zip(rows, table)
        ]

    def color(self) -> tuple[dict[int, bool], dict[int, bool]]:
        table = self._require_finite().reshape(-1, len(self.bases)).astype(np.int64)
        inside = table @ self.incidence.astype(np.int64)
        outside = table @ (~self.incidence).astype(np.int64)
        blue = {e: bool(np.all(inside[:, i] > 0)) for i, e in enumerate(self.elements)}
        red = {e: bool(np.all(outside[:, i] > 0)) for i, e in enumerate(self.elements)}
        return blue, red

    def uob_family(self) -> list[frozenset[int]]:
        table = self._require_finite().reshape(-1, len(self.bases))
        return [self.bases[j] for j in np.flatnonzero(np.all(table, axis=0))]

    def is_feasible(self, x: Iterable[int]) -> bool:
        x = frozenset(x)
        if not x <= self.u.ground:
            raise UnsupportedInstanceError(f"elements {sorted(x - self.u.ground)} not in ground set")
        if self._table is not None:
            axes = tuple(self.position[e] for e in self.elements if e not in x)
            always_min = np.all(self._table, axis=axes) if axes else self._table
            return bool(np.all(np.any(always_min, axis=-1)))
        return self._feasible_delegated(x)

    def _feasible_delegated(self, x: frozenset[int]) -> bool:
        # residual areas are not enumerable; fall back on the coloring test per revelation
        self.delegated = True
        count = math.prod(len(self.u.areas[e].members()) for e in x)
        if count > self.max_realizations:
            raise UnsupportedInstanceError(
                f"{count} revelations exceed the cap of {self.max_realizations}"
            )
        return all(
            exists_uob(reveal(self.u, assignment))
            for assignment in enumerate_realizations(self.u, x)
        )

    def minimal_feasible(self) -> list[frozenset[int]]:
        self._require_finite()
        subsets = [
            frozenset(c)
            for r in range(len(self.elements) + 1)
            for c in combinations(self.elements, r)
        ]
        feasible = {s for s in subsets if self.is_feasible(s)}
        return [s for s in subsets if s in feasible and not any(t < s for t in feasible)]

    def report(self) -> BruteReport:
        blue, red = self.color()
        return BruteReport(
            bases=self.bases,
            per_realization=self.per_realization(),
            uob_family=self.uob_family(),
            blue=blue,
            red=red,
            minimal_feasible=self.minimal_feasible(),
            delegated=self.delegated,
        )


def brute_color(u: UncertaintyMatroid, limit: int = DEFAULT_LIMIT):
    return BruteOracle(u, limit).color()


def brute_uob_family(u: UncertaintyMatroid, limit: int = DEFAULT_LIMIT) -> list[frozenset[int]]:
    return BruteOracle(u, limit).uob_family()


def brute_is_feasible(u: UncertaintyMatroid, x: Iterable[int], limit: int = DEFAULT_LIMIT) -> bool:
    return BruteOracle(u, limit).is_feasible(x)


def brute_minimal_feasible(u: UncertaintyMatroid, limit: int = DEFAULT_LIMIT) -> list[frozenset[int]]:
    return BruteOracle(u, limit).minimal_feasible()


def brute_report(u: UncertaintyMatroid, limit: int = DEFAULT_LIMIT) -> BruteReport:
    return BruteOracle(u, limit).report()


def brute_circuits(m: Matroid) -> list[frozenset[int]]:
    """Minimal dependent sets, by enumeration in order of size."""
    found: list[frozenset[int]] = []
    ground = sorted(m.ground)
    for r in range(1, len(ground) + 1):
        for c in combinations(ground, r):
            c = frozenset(c)
            if not m.is_independent(c) and not any(d <= c for d in found):
                found.append(c)
    return found


def brute_components(m: Matroid) -> list[frozenset[int]]:
    """Partition of the ground set by "some circuit contains both"."""
    ground = sorted(m.ground)
    index = {e: i for i, e in enumerate(ground)}
    dsu = DisjointSet(len(ground))
    for c in brute_circuits(m):
        first = min(c)
        for e in c:
            dsu.union(index[first], index[e])
    groups: dict[int, set[int]] = {}
    for e in ground:
        groups.setdefault(dsu.find(index[e]), set()).add(e)
    return sorted((frozenset(g) for g in groups.values()), key=min)
