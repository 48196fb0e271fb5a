"""Random instances for tests and for the shipped corpus.

    python -m uncertain_matroids.generators OUTDIR [--count N] [--seed S]
"""

from __future__ import annotations

import argparse
import random
from fractions import Fraction
from pathlib import Path

from .matroid import GraphicMatroid, Matroid, UniformMatroid
from .model import Area, UncertaintyMatroid, interval, point


def random_connected_multigraph(
    rng: random.Random, vertices: int, edges: int, loops: bool = False
) -> GraphicMatroid:
    """A random spanning tree plus extra random edges (parallel edges allowed)."""
    if edges < vertices - 1:
        raise ValueError("need at least vertices - 1 edges for a connected graph")
    order = list(range(vertices))
    rng.shuffle(order)
    edge_list = [(order[i], order[rng.randrange(i)]) for i in range(1, vertices)]
    while len(edge_list) < edges:
        u, v = rng.randrange(vertices), rng.randrange(vertices)
        if u == v and not loops:
            continue
        edge_list.append((u, v))
    rng.shuffle(edge_list)
    return GraphicMatroid(vertices, edge_list)


def random_matroid(rng: random.Random, max_elements: int) -> Matroid:
    n = rng.randint(1, max_elements)
    if rng.random() < 0.5:
        return UniformMatroid(n, rng.randint(0, n))
    vertices = rng.randint(2, max(2, min(n + 1, 6)))
    vertices = min(vertices, n + 1)
    return random_connected_multigraph(rng, vertices, max(n, vertices - 1), loops=rng.random() < 0.2)


def random_finite_area(rng: random.Random, values=range(4), max_points: int = 3) -> Area:
    values = list(values)
    k = rng.randint(1, min(max_points, len(values)))
    return Area.points(*rng.sample(values, k))


def random_interval_area(rng: random.Random, span: int = 8) -> Area:
    lo = Fraction(rng.randint(0, span * 2), 2)
    if rng.random() < 0.25:
        return Area([point(lo)])
    hi = lo + Fraction(rng.randint(1, span), 2)
    return Area([interval(lo, hi, rng.random() < 0.7, rng.random() < 0.7)])


def random_mixed_area(rng: random.Random, span: int = 8) -> Area:
    """A union of one to three random points and intervals."""
    pieces = []
    for _ in range(rng.randint(1, 3)):
        lo = Fraction(rng.randint(0, span * 2), 2)
        if rng.random() < 0.5:
            pieces.append(point(lo))
        else:
            hi = lo + Fraction(rng.randint(1, span), 2)
            pieces.append(interval(lo, hi, rng.random() < 0.7, rng.random() < 0.7))
    return Area(pieces)


def random_costs(rng: random.Random, n: int, negative: bool = False) -> tuple[Fraction, ...]:
    lo = -3 if negative else 0
    return tuple(Fraction(rng.randint(lo, 9)) for _ in range(n))


def random_finite_instance(
    rng: random.Random, max_elements: int = 6, values=range(4), max_points: int = 3
) -> UncertaintyMatroid:
    m = random_matroid(rng, max_elements)
    areas = [random_finite_area(rng, values, max_points) for _ in range(m.n)]
    return UncertaintyMatroid(m, tuple(areas), random_costs(rng, m.n, negative=True))


def random_interval_instance(rng: random.Random, max_elements: int = 12) -> UncertaintyMatroid:
    m = random_matroid(rng, max_elements)
    areas = [random_interval_area(rng) for _ in range(m.n)]
    return UncertaintyMatroid(m, tuple(areas), random_costs(rng, m.n))


def random_mixed_instance(rng: random.Random, max_elements: int = 40) -> UncertaintyMatroid:
    n = rng.randint(1, max_elements)
    if rng.random() < 0.5:
        m: Matroid = UniformMatroid(n, rng.randint(0, n))
    else:
        vertices = rng.randint(2, max(2, min(n + 1, n // 2 + 2)))
        m = random_connected_multigraph(rng, vertices, max(n, vertices - 1), loops=rng.random() < 0.2)
    spread = rng.choice([2, 8, 32])
    certain = rng.random()
    areas = [
        Area([point(rng.randint(0, spread))]) if rng.random() < certain else random_mixed_area(rng, spread)
        for _ in range(m.n)
    ]
    return UncertaintyMatroid(m, tuple(areas), random_costs(rng, m.n))


def main(argv: list[str] | None = None) -> None:
    from .instance_io import save_instance

    parser = argparse.ArgumentParser(description="write random instances as JSON files")
    parser.add_argument("outdir", type=Path)
    parser.add_argument("--count", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)
    rng = random.Random(args.seed)
    args.outdir.mkdir(parents=True, exist_ok=True)
    for i in range(args.count):
        g = random_connected_multigraph(rng, rng.randint(3, 5), rng.randint(4, 6))
        areas = [random_finite_area(rng, range(3), 2) for _ in range(g.n)]
        u = UncertaintyMatroid(g, tuple(areas), random_costs(rng, g.n))
        save_instance(u, args.outdir / f"random_graph_{args.seed}_{i}.json")


if __name__ == "__main__":
    main()
