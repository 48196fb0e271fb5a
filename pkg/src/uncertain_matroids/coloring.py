"""Blue/red classification of the elements of an uncertainty matroid.

An element is blue when every realization has a minimum basis containing it,
red when every realization has one avoiding it.  Both are decided from the
bounds alone:

* ``e`` is blue  iff  ``e`` is not spanned by ``{f != e : L_f < U_e}``;
* ``e`` is red   iff  ``e`` is spanned by ``{f != e : U_f <= L_e}``, which is
  the complement (in ``E - e``) of ``{f != e : L_e < U_f}``.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass

from .matroid import in_span
from .model import UncertaintyMatroid


@dataclass(frozen=True)
class Coloring:
    """Per-element flags, indexed by element.  Non-ground indices hold ``False``."""

    blue: tuple[bool, ...]
    red: tuple[bool, ...]
    certain: tuple[bool, ...]
    ground: frozenset[int]

    def is_colored(self, e: int) -> bool:
        return self.blue[e] or self.red[e]

    def blue_uncertain(self) -> frozenset[int]:
        return frozenset(e for e in self.ground if self.blue[e] and not self.certain[e])

    def red_uncertain(self) -> frozenset[int]:
        return frozenset(e for e in self.ground if self.red[e] and not self.certain[e])

    def uncolored_uncertain(self) -> frozenset[int]:
        return frozenset(
            e for e in self.ground if not self.certain[e] and not self.is_colored(e)
        )

    def to_json(self) -> list[dict]:
        return [
            {"blue": self.blue[e], "red": self.red[e], "certain": self.certain[e]}
            for e in sorted(self.ground)
        ]


def f_set(u: UncertaintyMatroid, e: int) -> frozenset[int]:
    """Elements other than ``e`` that may be strictly lighter than ``e``."""
    ue = u.upper(e)
    return frozenset(f for f in u.ground if f != e and u.lower(f) < ue)


def f_star_set(u: UncertaintyMatroid, e: int) -> frozenset[int]:
    """Elements other than ``e`` that may be strictly heavier than ``e``."""
    le = u.lower(e)
    return frozenset(f for f in u.ground if f != e and le < u.upper(f))


def is_blue(u: UncertaintyMatroid, e: int) -> bool:
    return not in_span(u.matroid, f_set(u, e), e)


def is_red(u: UncertaintyMatroid, e: int) -> bool:
    return in_span(u.matroid, u.ground - {e} - f_star_set(u, e), e)


class _BoundIndex:
    """Ground elements sorted by lower and by upper bound, for threshold scans."""

    def __init__(self, u: UncertaintyMatroid):
        self.by_lower = sorted(u.ground, key=u.lower)
        self.lowers = [u.lower(f) for f in self.by_lower]
        self.by_upper = sorted(u.ground, key=u.upper)
        self.uppers = [u.upper(f) for f in self.by_upper]

    def lower_below(self, x) -> list[int]:
        return self.by_lower[: bisect_left(self.lowers, x)]

    def upper_at_most(self, x) -> list[int]:
        return self.by_upper[: bisect_right(self.uppers, x)]


def color_all(u: UncertaintyMatroid) -> Coloring:
    m = u.matroid
    index = _BoundIndex(u)
    blue = [False] * m.n
    red = [False] * m.n
    certain = [False] * m.n
    for e in u.ground:
        lighter = frozenset(index.lower_below(u.upper(e))) - {e}
        never_heavier = frozenset(index.upper_at_most(u.lower(e))) - {e}
        blue[e] = not in_span(m, lighter, e)
        red[e] = in_span(m, never_heavier, e)
        certain[e] = u.is_certain(e)
    return Coloring(tuple(blue), tuple(red), tuple(certain), u.ground)
