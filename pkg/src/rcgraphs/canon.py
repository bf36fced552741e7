"""Canonical labelling by equitable refinement and individualisation.

The search tree is the usual one: refine to the coarsest equitable ordered
partition, individualise each vertex of the first non-singleton cell in turn,
and keep the leaf whose relabelled adjacency rows compare largest. Subtrees are
skipped when an automorphism already known to fix the current path maps the
candidate onto an explored sibling. Known automorphisms come from twin
transpositions (computed up front) and from pairs of leaves that produce the
same relabelled graph.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass
from itertools import permutations

from .graph import DEFAULT_MAX_ORDER, SizeCapExceeded, SmallGraph
from .graph6 import g6_encode

Rows = tuple[int, ...]


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Isomorphism-invariant encoding; ``data`` is the graph6 text of the canonical relabelling."""

    data: bytes

    @property
    def graph6(self) -> str:
        return self.data.decode("ascii")

    def digest(self) -> str:
        return hashlib.blake2b(self.data, digest_size=16).hexdigest()


def _mask(vs) -> int:
    m = 0
    for v in vs:
        m |= 1 << v
    return m


def _refine(adj: Rows, cells: list[tuple[int, ...]], queue: deque[int]) -> list[tuple[int, ...]]:
    n = len(adj)
    while queue and len(cells) < n:
        w = queue.popleft()
        out: list[tuple[int, ...]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            counts = [(adj[v] & w).bit_count() for v in cell]
            lo = min(counts)
            if lo == max(counts):
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v, k in zip(cell, counts):
                groups.setdefault(k, []).append(v)
            for k in sorted(groups):
                piece = tuple(groups[k])
                out.append(piece)
                queue.append(_mask(piece))
        cells = out
    return cells


def _twin_generators(adj: Rows) -> list[list[int]]:
    n = len(adj)
    groups: dict[tuple[int, int], list[int]] = {}
    for v in range(n):
        groups.setdefault((0, adj[v]), []).append(v)
        groups.setdefault((1, adj[v] | 1 << v), []).append(v)
    gens = []
    for members in groups.values():
        for a, b in zip(members, members[1:]):
            perm = list(range(n))
            perm[a], perm[b] = b, a
            gens.append(perm)
    return gens


class _Search:
    def __init__(self, adj: Rows) -> None:
        self.adj = adj
        self.n = len(adj)
        self.gens = _twin_generators(adj)
        self.first: tuple[Rows, list[int]] | None = None
        self.best: tuple[Rows, list[int]] | None = None

    def _leaf(self, order: list[int]) -> None:
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        adj = self.adj
        rows = []
        for v in order:
            m = 0
            row = adj[v]
            while row:
                low = row & -row
                m |= 1 << pos[low.bit_length() - 1]
                row ^= low
            rows.append(m)
        key = tuple(rows)
        if self.first is None:
            self.first = self.best = (key, order)
            return
        for ref_key, ref_order in (self.first, self.best):
            if key == ref_key:
                # order[i] -> ref_order[i] preserves adjacency
                perm = [0] * self.n
                for a, b in zip(order, ref_order):
                    perm[a] = b
                self.gens.append(perm)
                return
        if key > self.best[0]:
            self.best = (key, order)

    def _orbit_rep(self, v: int, explored: list[int], path: list[int]) -> bool:
        """True if ``v`` lies in the orbit of an explored sibling."""
        if not explored:
            return False
        usable = [g for g in self.gens if all(g[p] == p for p in path)]
        if not usable:
            return False
        seen = {v}
        stack = [v]
        targets = set(explored)
        while stack:
            x = stack.pop()
            for g in usable:
                y = g[x]
                if y in targets:
                    return True
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    def run(self, cells: list[tuple[int, ...]], path: list[int]) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            self._leaf([c[0] for c in cells])
            return
        cell = cells[target]
        explored: list[int] = []
        for v in cell:
            if self._orbit_rep(v, explored, path):
                continue
            rest = tuple(u for u in cell if u != v)
            child = cells[:target] + [(v,), rest] + cells[target + 1:]
            child = _refine(self.adj, child, deque([1 << v]))
            self.run(child, path + [v])
            explored.append(v)


def canonical_order(g: SmallGraph) -> list[int]:
    """Vertex sequence of the canonical relabelling: position ``i`` holds ``order[i]``."""
    return canonical_order_rows(g.adj)


def canonical_order_rows(adj: Rows) -> list[int]:
    n = len(adj)
    if n == 0:
        return []
    search = _Search(adj)
    cells = _refine(adj, [tuple(range(n))], deque([(1 << n) - 1]))
    search.run(cells, [])
    assert search.best is not None
    return search.best[1]


def canonical_rows(adj: Rows) -> Rows:
    """Adjacency rows of the canonical relabelling; equal iff the graphs are isomorphic."""
    n = len(adj)
    if n == 0:
        return ()
    search = _Search(adj)
    cells = _refine(adj, [tuple(range(n))], deque([(1 << n) - 1]))
    search.run(cells, [])
    assert search.best is not None
    return search.best[0]


def canonical_graph(g: SmallGraph) -> SmallGraph:
    return SmallGraph(g.n, canonical_rows(g.adj))


def canonical_form(g: SmallGraph, max_order: int = DEFAULT_MAX_ORDER) -> CanonicalForm:
    if g.n > max_order:
        raise SizeCapExceeded(f"order {g.n} exceeds cap {max_order}")
    return CanonicalForm(g6_encode(canonical_graph(g)).encode("ascii"))


def brute_force_canonical_rows(adj: Rows) -> Rows:
    """Maximum relabelled rows over all n! orderings; only for tiny graphs."""
    n = len(adj)
    best: Rows = ()
    for order in permutations(range(n)):
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        key = tuple(_mask(pos[u] for u in range(n) if adj[v] >> u & 1) for v in order)
        if key > best:
            best = key
    return best
