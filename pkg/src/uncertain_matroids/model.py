"""Uncertainty areas and uncertainty matroids.

An :class:`Area` is a bounded, nonempty subset of the rationals written as a
finite union of points and intervals.  Everything the algorithms need from an
area reduces to its infimum, its supremum and exact emptiness tests against
intervals, all answered from the pieces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import ContractError, InputError, UnsupportedInstanceError
from .matroid import Matroid


@dataclass(frozen=True)
class Piece:
    """A point (``lo == hi``, both ends closed) or a nondegenerate interval."""

    lo: Fraction
    hi: Fraction
    lo_closed: bool = True
    hi_closed: bool = True

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, v: Fraction) -> bool:
        above = v > self.lo or (v == self.lo and self.lo_closed)
        below = v < self.hi or (v == self.hi and self.hi_closed)
        return above and below

    def meets(self, lo: Fraction, hi: Fraction, lo_closed: bool, hi_closed: bool) -> bool:
        """Whether this piece intersects the interval given by the arguments."""
        left = max((self.lo, not self.lo_closed), (lo, not lo_closed))
        right = min((self.hi, self.hi_closed), (hi, hi_closed))
        if left[0] < right[0]:
            return True
        return left[0] == right[0] and not left[1] and right[1]


def point(v) -> Piece:
    v = Fraction(v)
    return Piece(v, v)


def interval(lo, hi, lo_closed: bool = True, hi_closed: bool = True) -> Piece:
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise InputError(f"interval lower end {lo} exceeds upper end {hi}")
    if lo == hi:
        if not (lo_closed and hi_closed):
            raise InputError(f"interval at {lo} with an open end is empty")
        return Piece(lo, lo)
    return Piece(lo, hi, lo_closed, hi_closed)


class Area:
    """Finite union of pieces, stored sorted, disjoint and maximally merged."""

    __slots__ = ("pieces",)

    def __init__(self, pieces: Iterable[Piece]):
        pieces = sorted(pieces, key=lambda p: (p.lo, not p.lo_closed))
        if not pieces:
            raise InputError("an uncertainty area must be nonempty")
        merged = [pieces[0]]
        for p in pieces[1:]:
            cur = merged[-1]
            touching = p.lo < cur.hi or (p.lo == cur.hi and (cur.hi_closed or p.lo_closed))
            if not touching:
                merged.append(p)
                continue
            if (p.hi, p.hi_closed) > (cur.hi, cur.hi_closed):
                hi, hi_closed = p.hi, p.hi_closed
            else:
                hi, hi_closed = cur.hi, cur.hi_closed
            lo_closed = cur.lo_closed or (p.lo == cur.lo and p.lo_closed)
            merged[-1] = Piece(cur.lo, hi, lo_closed, hi_closed)
        self.pieces: tuple[Piece, ...] = tuple(merged)

    @classmethod
    def points(cls, *values) -> Area:
        return cls(point(v) for v in values)

    @classmethod
    def closed(cls, lo, hi) -> Area:
        return cls([interval(lo, hi)])

    def __eq__(self, other):
        return isinstance(other, Area) and self.pieces == other.pieces

    def __hash__(self):
        return hash(self.pieces)

    def __repr__(self) -> str:
        return f"Area({format_area(self)})"

    @property
    def lower(self) -> Fraction:
        return self.pieces[0].lo

    @property
    def upper(self) -> Fraction:
        return self.pieces[-1].hi

    def bounds(self) -> tuple[Fraction, Fraction]:
        return self.lower, self.upper

    @property
    def is_singleton(self) -> bool:
        return len(self.pieces) == 1 and self.pieces[0].is_point

    @property
    def is_finite(self) -> bool:
        return all(p.is_point for p in self.pieces)

    @property
    def is_two_point(self) -> bool:
        return len(self.pieces) == 2 and self.is_finite

    def members(self) -> list[Fraction]:
        if not self.is_finite:
            raise UnsupportedInstanceError(f"area {format_area(self)} is not finite")
        return [p.lo for p in self.pieces]

    def __contains__(self, v) -> bool:
        v = Fraction(v)
        return any(p.contains(v) for p in self.pieces)

    def intersects(self, lo, hi, lo_closed=False, hi_closed=False) -> bool:
        return any(p.meets(lo, hi, lo_closed, hi_closed) for p in self.pieces)

    def reaches_down_to(self, x) -> bool:
        """Whether some member is ``<= x``."""
        first = self.pieces[0]
        return first.lo < x or (first.lo == x and first.lo_closed)

    def reaches_up_to(self, x) -> bool:
        """Whether some member is ``>= x``."""
        last = self.pieces[-1]
        return last.hi > x or (last.hi == x and last.hi_closed)

    def closure(self) -> Area:
        return Area([interval(self.lower, self.upper)])


def format_area(a: Area) -> str:
    parts = []
    for p in a.pieces:
        if p.is_point:
            parts.append(f"{{{p.lo}}}")
        else:
            parts.append(f"{'[' if p.lo_closed else '('}{p.lo},{p.hi}{']' if p.hi_closed else ')'}")
    return " u ".join(parts)


def bounds(a: Area) -> tuple[Fraction, Fraction]:
    return a.bounds()


def intersects_open(a: Area, lo, hi) -> bool:
    """Whether ``a`` meets the open interval ``(lo, hi)``; empty when ``lo == hi``."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ContractError(f"open interval ({lo}, {hi}) has lo > hi")
    if lo == hi:
        return False
    return a.intersects(lo, hi, False, False)


@dataclass(frozen=True)
class UncertaintyMatroid:
    """A matroid with an area per element index and optional query costs."""

    matroid: Matroid
    areas: tuple[Area, ...]
    costs: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "areas", tuple(self.areas))
        if len(self.areas) != self.matroid.n:
            raise InputError(
                f"got {len(self.areas)} areas for a ground set of size {self.matroid.n}"
            )
        if self.costs is not None:
            costs = tuple(Fraction(c) for c in self.costs)
            if len(costs) != self.matroid.n:
                raise InputError(
                    f"got {len(costs)} costs for a ground set of size {self.matroid.n}"
                )
            object.__setattr__(self, "costs", costs)

    @property
    def ground(self) -> frozenset[int]:
        return self.matroid.ground

    def lower(self, e: int) -> Fraction:
        return self.areas[e].lower

    def upper(self, e: int) -> Fraction:
        return self.areas[e].upper

    def is_certain(self, e: int) -> bool:
        return self.areas[e].is_singleton

    def uncertain(self) -> frozenset[int]:
        return frozenset(e for e in self.ground if not self.areas[e].is_singleton)

    def with_matroid(self, m: Matroid) -> UncertaintyMatroid:
        return UncertaintyMatroid(m, self.areas, self.costs)

    def with_areas(self, areas: Sequence[Area]) -> UncertaintyMatroid:
        return UncertaintyMatroid(self.matroid, tuple(areas), self.costs)

    def closure(self) -> UncertaintyMatroid:
        return self.with_areas([a.closure() for a in self.areas])


@dataclass(frozen=True)
class Revelation:
    """Exact values for some elements, each a member of that element's area."""

    base: UncertaintyMatroid
    revealed: Mapping[int, Fraction]

    def __post_init__(self):
        revealed = {}
        for e, v in self.revealed.items():
            if e not in self.base.ground:
                raise InputError(f"element {e} is not in the ground set")
            v = Fraction(v)
            if v not in self.base.areas[e]:
                raise InputError(
                    f"value {v} for element {e} is outside its area {format_area(self.base.areas[e])}"
                )
            revealed[e] = v
        object.__setattr__(self, "revealed", revealed)

    def apply(self) -> UncertaintyMatroid:
        areas = list(self.base.areas)
        for e, v in self.revealed.items():
            areas[e] = Area([point(v)])
        return self.base.with_areas(areas)


def reveal(u: UncertaintyMatroid, assignment: Mapping[int, object]) -> UncertaintyMatroid:
    return Revelation(u, assignment).apply()


def enumerate_realizations(
    u: UncertaintyMatroid, elements: Iterable[int] | None = None
) -> Iterator[dict[int, Fraction]]:
    """Every combination of area members over ``elements`` (default: the ground set).

    Elements are varied in ascending index order, last index fastest.
    """
    elements = sorted(u.ground if elements is None else elements)
    choices = []
    for e in elements:
        if not u.areas[e].is_finite:
            raise UnsupportedInstanceError(
                f"element {e} has a non-finite area {format_area(u.areas[e])}"
            )
        choices.append(u.areas[e].members())
    for values in product(*choices):
        yield dict(zip(elements, values))
