"""Small simple graphs stored as bitmask rows, plus the basic (r,c) invariants."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

DEFAULT_MAX_ORDER = 512


class GraphError(ValueError):
    pass


class SizeCapExceeded(GraphError):
    pass


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class SmallGraph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is an integer bitmask of the neighbours of ``v``. Instances are
    immutable; every operation that changes structure returns a new graph.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], max_order: int = DEFAULT_MAX_ORDER
    ) -> SmallGraph:
        if n < 0:
            raise GraphError("negative order")
        if n > max_order:
            raise SizeCapExceeded(f"order {n} exceeds cap {max_order}")
        rows = [0] * n
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"edge ({a}, {b}) out of range for n={n}")
            if a == b:
                raise GraphError(f"loop at vertex {a}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(n, tuple(rows))

    @classmethod
    def from_rows(cls, rows: Sequence[int], max_order: int = DEFAULT_MAX_ORDER) -> SmallGraph:
        if len(rows) > max_order:
            raise SizeCapExceeded(f"order {len(rows)} exceeds cap {max_order}")
        return cls(len(rows), tuple(rows))

    @classmethod
    def empty(cls, n: int) -> SmallGraph:
        return cls(n, (0,) * n)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adj[a] >> b & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(v, u) for v in range(self.n) for u in _bits(self.adj[v] >> (v + 1) << (v + 1))]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def relabel(self, perm: Sequence[int]) -> SmallGraph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            m = 0
            for u in _bits(row):
                m |= 1 << perm[u]
            rows[perm[v]] = m
        return SmallGraph(self.n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> SmallGraph:
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            m = 0
            for u in _bits(self.adj[v]):
                if u in index:
                    m |= 1 << index[u]
            rows.append(m)
        return SmallGraph(len(vertices), tuple(rows))

    def link(self, v: int) -> SmallGraph:
        """Subgraph induced by the open neighbourhood of ``v``."""
        return self.induced(self.neighbors(v))

    def add_vertex(self, neighbor_mask: int) -> SmallGraph:
        """Append vertex ``n`` adjacent to the vertices in ``neighbor_mask``."""
        new = 1 << self.n
        rows = tuple(row | new if neighbor_mask >> v & 1 else row for v, row in enumerate(self.adj))
        return SmallGraph(self.n + 1, rows + (neighbor_mask,))

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def __repr__(self) -> str:
        return f"SmallGraph(n={self.n}, e={self.num_edges})"


@dataclass(frozen=True)
class RcSignature:
    r: int
    c: int

    def __post_init__(self) -> None:
        if self.r < 0 or self.c < 0 or self.c > self.r * (self.r - 1) // 2:
            raise GraphError(f"invalid signature ({self.r}, {self.c})")

    def __iter__(self):
        return iter((self.r, self.c))


def neighborhood_edges(g: SmallGraph, v: int) -> int:
    """Number of edges in the subgraph induced by N(v)."""
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")
    row = g.adj[v]
    return sum((g.adj[u] & row).bit_count() for u in _bits(row)) // 2


def rc_signature(g: SmallGraph) -> RcSignature | None:
    if g.n == 0:
        raise GraphError("rc_signature needs at least one vertex")
    r = g.adj[0].bit_count()
    if any(row.bit_count() != r for row in g.adj):
        return None
    c = neighborhood_edges(g, 0)
    for v in range(1, g.n):
        if neighborhood_edges(g, v) != c:
            return None
    return RcSignature(r, c)


def triangle_count(g: SmallGraph) -> int:
    return sum(neighborhood_edges(g, v) for v in range(g.n)) // 3


def girth(g: SmallGraph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = math.inf
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] >= best:
                break
            for u in _bits(g.adj[v]):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def complement(g: SmallGraph) -> SmallGraph:
    full = (1 << g.n) - 1
    return SmallGraph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(*graphs: SmallGraph) -> SmallGraph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return SmallGraph.from_rows(rows)
