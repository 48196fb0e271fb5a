"""Feasible queries: sets whose simultaneous revelation always leaves a uniformly optimal basis.

Every minimal feasible query is the *core* plus all but one element of each
*clique*.  The core holds the uncertain elements ``e`` whose matroid component
in ``M / low(e) \\ high(e)`` reaches ``mid(e)``.  A clique is a group of
elements sharing the same two-point area and one such component.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import ContractError, InputError
from .matroid import GraphicMatroid, Matroid, component_of, components, contract_delete
from .model import Area, UncertaintyMatroid, intersects_open


@dataclass(frozen=True)
class Neighborhood:
    """Position of every other element relative to the bounds of a focus element."""

    low: frozenset[int]
    mid: frozenset[int]
    high: frozenset[int]
    both: frozenset[int]


@dataclass(frozen=True)
class WitnessStructure:
    core: frozenset[int]
    cliques: tuple[frozenset[int], ...]
    clique_areas: tuple[Area, ...]

    def to_json(self) -> dict:
        return {
            "core": sorted(self.core),
            "cliques": [sorted(k) for k in self.cliques],
        }


def neighborhood(u: UncertaintyMatroid, e: int) -> Neighborhood:
    le, ue = u.lower(e), u.upper(e)
    low, mid, high, both = set(), set(), set(), set()
    for f in u.ground - {e}:
        area = u.areas[f]
        if area.upper <= le:
            low.add(f)
        if ue <= area.lower:
            high.add(f)
        if intersects_open(area, le, ue):
            mid.add(f)
        elif area.reaches_down_to(le) and area.reaches_up_to(ue):
            both.add(f)
    return Neighborhood(frozenset(low), frozenset(mid), frozenset(high), frozenset(both))


def restricted_matroid(
    u: UncertaintyMatroid, e: int, nb: Neighborhood | None = None
) -> Matroid:
    """``M / low(e) \\ high(e)``.

    For a certain ``e`` the two sets can share elements of equal weight; those
    are contracted.
    """
    nb = nb or neighborhood(u, e)
    return contract_delete(u.matroid, nb.low, nb.high - nb.low)


def in_core(u: UncertaintyMatroid, e: int, nb: Neighborhood | None = None) -> bool:
    if u.is_certain(e):
        return False
    nb = nb or neighborhood(u, e)
    return bool(component_of(restricted_matroid(u, e, nb), e) & nb.mid)


def compute_witness_structure(u: UncertaintyMatroid) -> WitnessStructure:
    nbs = {e: neighborhood(u, e) for e in u.uncertain()}
    core = frozenset(e for e, nb in nbs.items() if in_core(u, e, nb))

    groups: dict[tuple[Fraction, Fraction], list[int]] = {}
    for e in sorted(u.uncertain() - core):
        if u.areas[e].is_two_point:
            groups.setdefault(u.areas[e].bounds(), []).append(e)

    cliques = []
    for members in groups.values():
        if len(members) < 2:
            continue
        # equal two-point areas give equal low/high sets, hence one shared minor
        minor = restricted_matroid(u, members[0], nbs[members[0]])
        for part in components(minor):
            clique = part.intersection(members)
            if len(clique) >= 2:
                cliques.append(clique)
    cliques.sort(key=min)
    return WitnessStructure(core, tuple(cliques), tuple(u.areas[min(k)] for k in cliques))


def is_witness_set(u: UncertaintyMatroid, x: Iterable[int]) -> bool:
    x = u.matroid._in_ground(x)
    for e in sorted(x):
        if u.is_certain(e):
            continue
        nb = neighborhood(u, e)
        part = component_of(restricted_matroid(u, e, nb), e)
        if part & nb.mid or (part - {e}) & x & nb.both:
            return True
    return False


def is_feasible(
    u: UncertaintyMatroid, x: Iterable[int], ws: WitnessStructure | None = None
) -> bool:
    x = u.matroid._in_ground(x)
    ws = ws or compute_witness_structure(u)
    return ws.core <= x and all(len(k - x) <= 1 for k in ws.cliques)


def is_minimal_feasible(
    u: UncertaintyMatroid, x: Iterable[int], ws: WitnessStructure | None = None
) -> bool:
    x = u.matroid._in_ground(x)
    ws = ws or compute_witness_structure(u)
    if not is_feasible(u, x, ws):
        return False
    return x == ws.core | frozenset().union(*(k & x for k in ws.cliques)) and all(
        len(k - x) == 1 for k in ws.cliques
    )


def minimal_feasible_queries(ws: WitnessStructure) -> Iterator[frozenset[int]]:
    """All minimal feasible queries: the core plus each clique minus one member."""
    cliques = [sorted(k) for k in ws.cliques]
    for dropped in product(*cliques):
        yield ws.core.union(*(set(k) - {d} for k, d in zip(cliques, dropped)))


def min_cost_feasible_query(
    u: UncertaintyMatroid, ws: WitnessStructure | None = None
) -> tuple[frozenset[int], Fraction]:
    if u.costs is None:
        raise InputError("min-cost feasible query needs costs on every element")
    costs = u.costs
    ws = ws or compute_witness_structure(u)
    query = set(ws.core)
    for clique in ws.cliques:
        keep = max(clique, key=lambda f: (costs[f], f))
        query |= clique - {keep}
    query |= {e for e in u.ground if costs[e] < 0}
    query = frozenset(query)
    return query, sum((costs[e] for e in query), Fraction(0))


def mst01_min_queries(
    graph: GraphicMatroid,
    costs: Sequence | None = None,
    areas: Sequence[Area] | None = None,
) -> frozenset[int]:
    """Cheapest feasible query for a graph whose edge weights are all 0 or 1.

    The cliques here are the edge sets of the blocks of the graph, so the
    answer drops one (the most expensive) edge from every block.
    """
    zero_one = Area.points(0, 1)
    if areas is not None:
        for e, a in enumerate(areas):
            if a != zero_one:
                raise ContractError(f"edge {e} has area {a!r}, expected {{0, 1}}")
    costs = [1] * graph.n if costs is None else list(costs)
    u = UncertaintyMatroid(graph, (zero_one,) * graph.n, tuple(costs))
    return min_cost_feasible_query(u)[0]
