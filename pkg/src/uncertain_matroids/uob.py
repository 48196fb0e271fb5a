"""Uniformly optimal bases: existence, construction, recognition, and their matroid."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .coloring import Coloring, color_all
from .errors import ContractError, InputError
from .matroid import Matroid, contract_delete, greedy_min_basis, is_basis
from .model import UncertaintyMatroid


@dataclass(frozen=True)
class CertainCore:
    """What is left after contracting blue uncertain and deleting red uncertain elements."""

    blue_uncertain: frozenset[int]
    red_uncertain: frozenset[int]
    certain_matroid: Matroid
    certain_weights: dict[int, Fraction]


@dataclass(frozen=True)
class UobLayering:
    """Weight levels of the certain elements, with the blue uncertain ones as level 0."""

    levels: tuple[Fraction, ...]
    layer_sets: tuple[frozenset[int], ...]
    prefixes: tuple[frozenset[int], ...]


def exists_uob(u: UncertaintyMatroid, coloring: Coloring | None = None) -> bool:
    coloring = coloring or color_all(u)
    return not coloring.uncolored_uncertain()


def certain_weighted_matroid(
    u: UncertaintyMatroid, coloring: Coloring | None = None
) -> CertainCore:
    coloring = coloring or color_all(u)
    if not exists_uob(u, coloring):
        raise ContractError("no uniformly optimal basis exists; some uncertain element is uncolored")
    blue = coloring.blue_uncertain()
    red = coloring.red_uncertain()
    mc = contract_delete(u.matroid, blue, red)
    weights = {e: u.lower(e) for e in mc.ground}
    return CertainCore(blue, red, mc, weights)


def find_uob_structural(u: UncertaintyMatroid) -> frozenset[int] | None:
    coloring = color_all(u)
    if not exists_uob(u, coloring):
        return None
    core = certain_weighted_matroid(u, coloring)
    return core.blue_uncertain | greedy_min_basis(core.certain_matroid, core.certain_weights)


def find_uob_regret(u: UncertaintyMatroid) -> frozenset[int] | None:
    """Two greedy runs on the interval hull of each area.

    A midpoint-optimal basis ``T`` is uniformly optimal iff it is still optimal
    when its own elements sit at their upper bounds and all others at their
    lower bounds.
    """
    m = u.matroid
    mid = {e: (u.lower(e) + u.upper(e)) / 2 for e in m.ground}
    t = greedy_min_basis(m, mid)
    worst = {e: u.upper(e) if e in t else u.lower(e) for e in m.ground}
    t_prime = greedy_min_basis(m, worst)
    if sum(worst[e] for e in t_prime) < sum(worst[e] for e in t):
        return None
    return t


def is_uob(u: UncertaintyMatroid, t: Iterable[int]) -> bool:
    m = u.matroid
    t = m._in_range(t)
    coloring = color_all(u)
    if not exists_uob(u, coloring):
        return False
    if not is_basis(m, t):
        return False
    core = certain_weighted_matroid(u, coloring)
    if not core.blue_uncertain <= t or t & core.red_uncertain:
        return False
    rest = t - core.blue_uncertain
    mc = core.certain_matroid
    if not is_basis(mc, rest):
        return False
    w = core.certain_weights
    best = greedy_min_basis(mc, w)
    return sum(w[e] for e in rest) == sum(w[e] for e in best)


def uob_layering(u: UncertaintyMatroid, coloring: Coloring | None = None) -> UobLayering:
    core = certain_weighted_matroid(u, coloring)
    weights = core.certain_weights
    distinct = sorted(set(weights.values()))
    w0 = distinct[0] - 1 if distinct else Fraction(0)
    layers = [core.blue_uncertain]
    layers += [frozenset(e for e, w in weights.items() if w == level) for level in distinct]
    prefixes = []
    acc: frozenset[int] = frozenset()
    for layer in layers:
        acc = acc | layer
        prefixes.append(acc)
    return UobLayering(tuple([w0] + distinct), tuple(layers), tuple(prefixes))


def uob_matroid_independent(
    u: UncertaintyMatroid, x: Iterable[int], layering: UobLayering | None = None
) -> bool:
    """Independence in the direct sum of ``M / F_{i-1} | E_i`` over the layers."""
    m = u.matroid
    x = m._in_range(x)
    coloring = color_all(u)
    layering = layering or uob_layering(u, coloring)
    red = coloring.red_uncertain()
    if x & red:
        raise ContractError(f"elements {sorted(x & red)} are red uncertain")
    if not x <= m.ground:
        raise InputError(f"elements {sorted(x - m.ground)} are not in the ground set")
    previous: frozenset[int] = frozenset()
    for layer, prefix in zip(layering.layer_sets, layering.prefixes):
        part = x & layer
        if part:
            minor = contract_delete(m, previous, m.ground - previous - layer)
            if not minor.is_independent(part):
                return False
        previous = prefix
    return True
