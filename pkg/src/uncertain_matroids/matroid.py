"""Matroids given by an independence oracle.

Elements are integer indices ``0..n-1``.  A matroid's ground set is a subset
of that index range; minors keep the original indices of their elements, so
sets computed on a minor can be compared directly with sets of the parent.

Element sets are plain ``frozenset`` objects.  Functions that return a set
whose order matters to the caller sort it explicitly.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Callable, Iterable, Mapping, Sequence

from .errors import ContractError, InputError

ElemSet = frozenset

Edge = tuple[int, int]


class DisjointSet:
    """Union-find over ``0..size-1`` with path halving."""

    __slots__ = ("parent",)

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, v: int) -> int:
        parent = self.parent
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


class Matroid:
    """Base class.  Subclasses provide ``_independent`` for subsets of the ground set."""

    n: int
    ground: frozenset[int]

    def is_independent(self, x: Iterable[int]) -> bool:
        x = self._in_range(x)
        if not x <= self.ground:
            return False
        return self._independent(x)

    def _independent(self, x: frozenset[int]) -> bool:
        raise NotImplementedError

    def rank(self, x: Iterable[int] | None = None) -> int:
        x = self.ground if x is None else self._in_ground(x)
        return len(self.greedy(sorted(x)))

    def greedy(self, order: Sequence[int]) -> frozenset[int]:
        """Scan ``order`` and keep each element that preserves independence."""
        chosen: set[int] = set()
        for e in order:
            chosen.add(e)
            if not self._independent(frozenset(chosen)):
                chosen.discard(e)
        return frozenset(chosen)

    def graph_view(self) -> list[Edge] | None:
        """Endpoints of every element when the matroid is graphic, else None."""
        return None

    def circuit_finder(self, basis: frozenset[int]) -> Callable[[int], frozenset[int]]:
        """Return ``g -> fundamental circuit of basis + g`` for a fixed basis."""
        edges = self.graph_view()
        if edges is not None:
            forest = _Forest(edges, basis)
            return lambda g: forest.circuit(g)

        def circuit(g: int) -> frozenset[int]:
            return frozenset(
                [g] + [f for f in basis if self._independent((basis - {f}) | {g})]
            )

        return circuit

    def _in_range(self, x: Iterable[int]) -> frozenset[int]:
        x = frozenset(x)
        for e in x:
            if not (isinstance(e, int) and 0 <= e < self.n):
                raise InputError(f"element index {e!r} outside 0..{self.n - 1}")
        return x

    def _in_ground(self, x: Iterable[int]) -> frozenset[int]:
        x = self._in_range(x)
        if not x <= self.ground:
            raise InputError(f"elements {sorted(x - self.ground)} are not in the ground set")
        return x


class GraphicMatroid(Matroid):
    """Cycle matroid of a multigraph; element ``i`` is ``edges[i]``."""

    def __init__(self, vertices: int, edges: Sequence[Sequence[int]]):
        if vertices < 0:
            raise InputError("vertex count must be nonnegative")
        checked = []
        for i, edge in enumerate(edges):
            u, v = edge
            if not (0 <= u < vertices and 0 <= v < vertices):
                raise InputError(f"edge {i} = ({u}, {v}) has an endpoint outside 0..{vertices - 1}")
            checked.append((int(u), int(v)))
        self.vertices = vertices
        self.edges: tuple[Edge, ...] = tuple(checked)
        self.n = len(checked)
        self.ground = frozenset(range(self.n))

    def __repr__(self) -> str:
        return f"GraphicMatroid({self.vertices}, {list(self.edges)})"

    def _independent(self, x):
        return _forest_rank(self.edges, self.vertices, x) == len(x)

    def rank(self, x=None):
        x = self.ground if x is None else self._in_ground(x)
        return _forest_rank(self.edges, self.vertices, x)

    def greedy(self, order):
        return _kruskal(self.edges, self.vertices, order)

    def graph_view(self):
        return list(self.edges)


class UniformMatroid(Matroid):
    """U(rank, n): every set of at most ``rank`` elements is independent."""

    def __init__(self, n: int, rank: int):
        if not 0 <= rank <= n:
            raise InputError(f"uniform rank {rank} must lie in 0..{n}")
        self.n = n
        self.r = rank
        self.ground = frozenset(range(n))

    def __repr__(self) -> str:
        return f"UniformMatroid(n={self.n}, rank={self.r})"

    def _independent(self, x):
        return len(x) <= self.r

    def rank(self, x=None):
        x = self.ground if x is None else self._in_ground(x)
        return min(len(x), self.r)

    def greedy(self, order):
        return frozenset(list(order)[: self.r])


class ExplicitMatroid(Matroid):
    """Matroid given by its list of bases, checked against the exchange axiom."""

    def __init__(self, n: int, bases: Iterable[Iterable[int]]):
        self.n = n
        self.ground = frozenset(range(n))
        family = {self._in_range(b) for b in bases}
        if not family:
            raise InputError("explicit matroid needs at least one basis")
        sizes = {len(b) for b in family}
        if len(sizes) != 1:
            raise InputError(f"bases have different sizes {sorted(sizes)}")
        for b1 in family:
            for b2 in family:
                for x in b1 - b2:
                    if not any((b1 - {x}) | {y} in family for y in b2 - b1):
                        raise InputError(
                            f"basis exchange fails for {sorted(b1)}, {sorted(b2)} at {x}"
                        )
        self.bases = tuple(sorted(family, key=sorted))
        self.r = sizes.pop()

    def __repr__(self) -> str:
        return f"ExplicitMatroid({self.n}, {[sorted(b) for b in self.bases]})"

    def _independent(self, x):
        return any(x <= b for b in self.bases)

    def rank(self, x=None):
        x = self.ground if x is None else self._in_ground(x)
        return max(len(x & b) for b in self.bases)


class DualMatroid(Matroid):
    """Dual of ``inner``; bases are complements of inner bases."""

    def __init__(self, inner: Matroid):
        self.inner = inner
        self.n = inner.n
        self.ground = inner.ground
        self._inner_rank = inner.rank()

    def __repr__(self) -> str:
        return f"DualMatroid({self.inner!r})"

    def _independent(self, x):
        return self.inner.rank(self.ground - x) == self._inner_rank

    def rank(self, x=None):
        x = self.ground if x is None else self._in_ground(x)
        return len(x) + self.inner.rank(self.ground - x) - self._inner_rank


class MinorMatroid(Matroid):
    """``inner / contracted \\ deleted``.

    A maximal independent subset of ``contracted`` is fixed at construction,
    so an independence test on the minor costs one call on ``inner``.
    """

    def __init__(self, inner: Matroid, contracted: Iterable[int], deleted: Iterable[int]):
        contracted = inner._in_ground(contracted)
        deleted = inner._in_ground(deleted)
        if contracted & deleted:
            raise ContractError(
                f"contracted and deleted sets overlap in {sorted(contracted & deleted)}"
            )
        self.inner = inner
        self.contracted = contracted
        self.deleted = deleted
        self.contracted_basis = inner.greedy(sorted(contracted))
        self.n = inner.n
        self.ground = inner.ground - contracted - deleted
        self._edges = _quotient(inner.graph_view(), contracted)
        self._vertices = 0 if self._edges is None else 1 + max(
            (max(e) for e in self._edges), default=-1
        )

    def __repr__(self) -> str:
        return (
            f"MinorMatroid({self.inner!r}, contracted={sorted(self.contracted)}, "
            f"deleted={sorted(self.deleted)})"
        )

    def _independent(self, x):
        return self.inner._independent(x | self.contracted_basis)

    def rank(self, x=None):
        x = self.ground if x is None else self._in_ground(x)
        if self._edges is not None:
            return _forest_rank(self._edges, self._vertices, x)
        return self.inner.rank(x | self.contracted_basis) - len(self.contracted_basis)

    def greedy(self, order):
        if self._edges is not None:
            return _kruskal(self._edges, self._vertices, order)
        return super().greedy(order)

    def graph_view(self):
        return None if self._edges is None else list(self._edges)


# -- graph helpers ---------------------------------------------------------


def _forest_rank(edges: Sequence[Edge], vertices: int, x: Iterable[int]) -> int:
    dsu = DisjointSet(vertices)
    return sum(1 for e in x if dsu.union(*edges[e]))


def _kruskal(edges: Sequence[Edge], vertices: int, order: Iterable[int]) -> frozenset[int]:
    dsu = DisjointSet(vertices)
    return frozenset(e for e in order if dsu.union(*edges[e]))


def _quotient(edges: list[Edge] | None, contracted: frozenset[int]) -> list[Edge] | None:
    """Relabel endpoints after identifying the ends of every contracted edge."""
    if edges is None:
        return None
    vertices = 1 + max((max(e) for e in edges), default=-1)
    dsu = DisjointSet(vertices)
    for e in contracted:
        dsu.union(*edges[e])
    return [(dsu.find(u), dsu.find(v)) for u, v in edges]


class _Forest:
    """A spanning forest rooted once, answering tree-path queries."""

    def __init__(self, edges: Sequence[Edge], tree: Iterable[int]):
        self.edges = edges
        adjacency: dict[int, list[tuple[int, int]]] = {}
        for e in tree:
            u, v = edges[e]
            adjacency.setdefault(u, []).append((v, e))
            adjacency.setdefault(v, []).append((u, e))
        self.up: dict[int, tuple[int, int] | None] = {}
        self.depth: dict[int, int] = {}
        for root in adjacency:
            if root in self.depth:
                continue
            self.up[root] = None
            self.depth[root] = 0
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for v, e in adjacency[u]:
                    if v not in self.depth:
                        self.depth[v] = self.depth[u] + 1
                        self.up[v] = (u, e)
                        queue.append(v)

    def circuit(self, g: int) -> frozenset[int]:
        u, v = self.edges[g]
        path = [g]
        du, dv = self.depth.get(u, 0), self.depth.get(v, 0)
        while u != v:
            if du >= dv:
                u, e = self.up[u]
                du -= 1
            else:
                v, e = self.up[v]
                dv -= 1
            path.append(e)
        return frozenset(path)


# -- public operations -----------------------------------------------------


def is_independent(m: Matroid, x: Iterable[int]) -> bool:
    return m.is_independent(x)


def span(m: Matroid, x: Iterable[int]) -> frozenset[int]:
    """Closure of ``x``: a basis of ``x`` is fixed, then each outside element is tested once."""
    x = m._in_ground(x)
    basis = m.greedy(sorted(x))
    return x | frozenset(e for e in m.ground - x if not m._independent(basis | {e}))


def in_span(m: Matroid, x: Iterable[int], e: int) -> bool:
    x = m._in_ground(x)
    if e in x:
        return True
    return m.rank(x | {e}) == m.rank(x)


def cospan(m: Matroid, x: Iterable[int]) -> frozenset[int]:
    x = m._in_ground(x)
    return x | frozenset(e for e in m.ground - x if not in_span(m, m.ground - x - {e}, e))


def greedy_min_basis(m: Matroid, w: Mapping[int, object] | Sequence) -> frozenset[int]:
    """Minimum-weight basis; ties are broken by the lower index."""
    return m.greedy(sorted(m.ground, key=lambda e: (w[e], e)))


def is_basis(m: Matroid, x: Iterable[int]) -> bool:
    x = m._in_range(x)
    return m.is_independent(x) and len(x) == m.rank()


def fundamental_circuit(m: Matroid, basis: Iterable[int], e: int) -> frozenset[int]:
    basis = m._in_ground(basis)
    if not is_basis(m, basis):
        raise ContractError(f"{sorted(basis)} is not a basis")
    if e in basis or e not in m.ground:
        raise ContractError(f"element {e} must be a ground element outside the basis")
    return m.circuit_finder(basis)(e)


def components(m: Matroid) -> list[frozenset[int]]:
    """Connected components, via the basis-exchange bipartite graph of one greedy basis.

    ``T + g - f`` is independent exactly when ``f`` lies on the fundamental
    circuit of ``g``, so the exchange graph is read off those circuits.
    """
    tree = m.greedy(sorted(m.ground))
    circuit = m.circuit_finder(tree)
    index = {e: i for i, e in enumerate(sorted(m.ground))}
    dsu = DisjointSet(len(index))
    for g in m.ground - tree:
        for f in circuit(g):
            dsu.union(index[g], index[f])
    groups: dict[int, list[int]] = {}
    for e, i in index.items():
        groups.setdefault(dsu.find(i), []).append(e)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def component_of(m: Matroid, e: int) -> frozenset[int]:
    for part in components(m):
        if e in part:
            return part
    raise InputError(f"element {e} is not in the ground set")


def contract_delete(m: Matroid, c: Iterable[int] = (), d: Iterable[int] = ()) -> MinorMatroid:
    return MinorMatroid(m, c, d)


def restrict(m: Matroid, s: Iterable[int]) -> MinorMatroid:
    s = m._in_ground(s)
    return MinorMatroid(m, (), m.ground - s)


def dual(m: Matroid) -> DualMatroid:
    return DualMatroid(m)


def all_bases(m: Matroid) -> list[frozenset[int]]:
    """Every basis, by exhaustive search over subsets of size rank."""
    r = m.rank()
    return [
        frozenset(c) for c in combinations(sorted(m.ground), r) if m._independent(frozenset(c))
    ]
