"""Instances shared across test modules."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from uncertain_matroids import Area, GraphicMatroid, UncertaintyMatroid, UniformMatroid
from uncertain_matroids.generators import random_finite_instance

TRIANGLE_EDGES = [(0, 1), (1, 2), (2, 0)]


def triangle() -> GraphicMatroid:
    return GraphicMatroid(3, TRIANGLE_EDGES)


def fig1a(costs=(1, 1, 1)) -> UncertaintyMatroid:
    return UncertaintyMatroid(
        triangle(), (Area.closed(0, 2), Area.closed(4, 9), Area.closed(1, 3)), costs
    )


def fig1b(costs=(1, 1, 1)) -> UncertaintyMatroid:
    return UncertaintyMatroid(triangle(), (Area.closed(0, 1),) * 3, costs)


def fig1c(costs=(1, 2, 3)) -> UncertaintyMatroid:
    return UncertaintyMatroid(triangle(), (Area.points(0, 1),) * 3, costs)


def parallel_pair() -> GraphicMatroid:
    return GraphicMatroid(2, [(0, 1), (0, 1)])


def singletons(m, weights) -> UncertaintyMatroid:
    return UncertaintyMatroid(m, tuple(Area.points(w) for w in weights))


# small matroids for exhaustive sweeps
SMALL_MATROIDS = {
    "edge": GraphicMatroid(2, [(0, 1)]),
    "loop+edge": GraphicMatroid(2, [(0, 0), (0, 1)]),
    "parallel": parallel_pair(),
    "path2": GraphicMatroid(3, [(0, 1), (1, 2)]),
    "triangle": triangle(),
    "U13": UniformMatroid(3, 1),
    "U23": UniformMatroid(3, 2),
    "triangle+pendant": GraphicMatroid(4, [(0, 1), (1, 2), (2, 0), (2, 3)]),
    "triangle+parallel": GraphicMatroid(3, [(0, 1), (1, 2), (2, 0), (0, 1)]),
    "square": GraphicMatroid(4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
    "U24": UniformMatroid(4, 2),
    "square+chord": GraphicMatroid(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
    "K4": GraphicMatroid(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    "bowtie": GraphicMatroid(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]),
    "U25": UniformMatroid(5, 2),
    "U36": UniformMatroid(6, 3),
}

PALETTE_3 = [Area.points(*v) for v in ([0], [1], [2], [0, 1], [0, 2], [1, 2], [0, 1, 2])]
PALETTE_4 = [Area.points(*v) for v in ([1], [0, 1], [0, 2], [1, 2], [0, 1, 2])]
PALETTE_5 = [Area.points(*v) for v in ([1], [0, 1], [0, 2], [0, 1, 2])]
PALETTE_6 = [Area.points(*v) for v in ([1], [0, 1], [0, 1, 2])]
PALETTES = {1: PALETTE_3, 2: PALETTE_3, 3: PALETTE_3, 4: PALETTE_4, 5: PALETTE_5, 6: PALETTE_6}


def exhaustive_corpus(max_elements: int = 4):
    """Every palette assignment on the matroids with at most ``max_elements`` elements.

    Palettes shrink as the ground set grows so the sweep stays a few thousand instances.
    """
    for name, m in SMALL_MATROIDS.items():
        if m.n > max_elements:
            continue
        palette = PALETTES[m.n]
        for areas in product(palette, repeat=m.n):
            yield name, UncertaintyMatroid(m, areas)


def random_corpus(count: int, seed: int, max_elements: int = 6):
    """Random finite instances; every fifth one uses half-integer values."""
    rng = random.Random(seed)
    for i in range(count):
        if i % 5 == 4:
            values = [Fraction(k, 2) for k in range(6)]
        else:
            values = range(4)
        yield random_finite_instance(rng, max_elements, values, 3)


def larger_random_corpus(count: int, seed: int):
    """Random finite instances on the five- and six-element matroids above."""
    rng = random.Random(seed)
    big = [m for m in SMALL_MATROIDS.values() if m.n >= 5]
    for _ in range(count):
        m = rng.choice(big)
        areas = tuple(
            Area.points(*rng.sample(range(4), rng.randint(1, 3))) for _ in range(m.n)
        )
        yield UncertaintyMatroid(m, areas)
