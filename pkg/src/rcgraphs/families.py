"""Named graphs used as witnesses and test fixtures."""

from __future__ import annotations

import itertools
import math

import numpy as np

from .graph import SmallGraph, complement


def complete(n: int) -> SmallGraph:
    return SmallGraph.from_edges(n, itertools.combinations(range(n), 2))


def cycle(n: int) -> SmallGraph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return SmallGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> SmallGraph:
    return SmallGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> SmallGraph:
    return SmallGraph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> SmallGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SmallGraph.from_edges(10, outer + spokes + inner)


def hypercube(d: int) -> SmallGraph:
    n = 1 << d
    return SmallGraph.from_edges(n, [(v, v ^ (1 << i)) for v in range(n) for i in range(d) if v < v ^ (1 << i)])


def prism(k: int) -> SmallGraph:
    """C_k with a parallel copy, i.e. C_k x K_2."""
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return SmallGraph.from_edges(2 * k, edges)


def antiprism(k: int) -> SmallGraph:
    """Two k-cycles joined by a band of 2k triangles (k=3 gives the octahedron)."""
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)] + [(i, k + (i + 1) % k) for i in range(k)]
    return SmallGraph.from_edges(2 * k, edges)


def line_graph(g: SmallGraph) -> SmallGraph:
    es = g.edges()
    return SmallGraph.from_edges(
        len(es), [(i, j) for i, j in itertools.combinations(range(len(es)), 2) if set(es[i]) & set(es[j])]
    )


def _unit_distance_graph(points: np.ndarray) -> SmallGraph:
    d = np.linalg.norm(points[:, None, :] - points[None, :, :], axis=-1)
    np.fill_diagonal(d, np.inf)
    edge = d.min()
    close = np.isclose(d, edge, rtol=1e-9, atol=1e-9)
    n = len(points)
    return SmallGraph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if close[i, j]])


def _signed_perms(base, perms) -> np.ndarray:
    pts = set()
    for perm in perms:
        for signs in itertools.product((1, -1), repeat=3):
            pts.add(tuple(round(s * base[p], 12) for s, p in zip(signs, perm)))
    return np.array(sorted(pts))


_ALL_PERMS = list(itertools.permutations(range(3)))
_EVEN_PERMS = [(0, 1, 2), (1, 2, 0), (2, 0, 1)]


def icosahedron() -> SmallGraph:
    phi = (1 + math.sqrt(5)) / 2
    return _unit_distance_graph(_signed_perms((0.0, 1.0, phi), _EVEN_PERMS))


def cuboctahedron() -> SmallGraph:
    return _unit_distance_graph(_signed_perms((1.0, 1.0, 0.0), _ALL_PERMS))


def rhombicuboctahedron() -> SmallGraph:
    return _unit_distance_graph(_signed_perms((1.0, 1.0, 1 + math.sqrt(2)), _ALL_PERMS))


def snub_cube() -> SmallGraph:
    t = (1 + (19 - 3 * math.sqrt(33)) ** (1 / 3) + (19 + 3 * math.sqrt(33)) ** (1 / 3)) / 3
    base = (1.0, 1 / t, t)
    pts = []
    for perm in _ALL_PERMS:
        even = perm in _EVEN_PERMS
        for signs in itertools.product((1, -1), repeat=3):
            plus = signs.count(1)
            # one chirality: even permutations with an even number of plus signs, odd with odd
            if (plus % 2 == 0) == even:
                pts.append([s * base[p] for s, p in zip(signs, perm)])
    return _unit_distance_graph(np.array(pts))


def cocktail_party(k: int) -> SmallGraph:
    """K_{2k} minus a perfect matching."""
    return complement(SmallGraph.from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)]))
