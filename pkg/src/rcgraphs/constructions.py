"""Building new (r,c)-graphs from old ones: products, complements, clique products."""

from __future__ import annotations

from functools import lru_cache
from math import comb, prod

from .families import complete
from .graph import DEFAULT_MAX_ORDER, GraphError, SizeCapExceeded, SmallGraph, complement


class NoPartition(GraphError):
    """No multiset of clique sizes realises the requested (r, c)."""


def cartesian_product(g: SmallGraph, h: SmallGraph, max_order: int = DEFAULT_MAX_ORDER) -> SmallGraph:
    """G x H with vertex (a, b) numbered ``a * |H| + b``."""
    if g.n == 0 or h.n == 0:
        raise GraphError("cartesian product of an empty graph")
    n = g.n * h.n
    if n > max_order:
        raise SizeCapExceeded(f"product order {n} exceeds cap {max_order}")
    m = h.n
    edges = []
    for a in range(g.n):
        for b1, b2 in h.edges():
            edges.append((a * m + b1, a * m + b2))
    for a1, a2 in g.edges():
        for b in range(m):
            edges.append((a1 * m + b, a2 * m + b))
    return SmallGraph.from_edges(n, edges, max_order=max_order)


def complement_transform(g: SmallGraph) -> SmallGraph:
    return complement(g)


def complement_signature(n: int, r: int, c: int) -> tuple[int, int]:
    """Signature of the complement of an (r, c)-graph on n vertices."""
    s = n - 1 - r
    twice = 3 * r * s
    assert twice % 2 == 0, "r(n-1-r) is even whenever an r-regular graph on n vertices exists"
    return s, comb(n - 1, 2) - twice // 2 - c


@lru_cache(maxsize=None)
def _best_partition(r: int, c: int, largest: int) -> tuple[int, tuple[int, ...]] | None:
    """(product order, parts) minimising prod(x + 1); ties go to the reverse-lex first partition."""
    if r == 0:
        return (1, ()) if c == 0 else None
    best = None
    for x in range(min(r, largest), 0, -1):
        rest_c = c - comb(x, 2)
        if rest_c < 0:
            continue
        # the remaining r - x can hold at most this many link edges with parts <= x
        q, rem = divmod(r - x, x)
        if rest_c > q * comb(x, 2) + comb(rem, 2):
            continue
        sub = _best_partition(r - x, rest_c, x)
        if sub is None:
            continue
        order = (x + 1) * sub[0]
        if best is None or order < best[0]:
            best = (order, (x,) + sub[1])
    return best


def solve_clique_partition(r: int, c: int) -> tuple[int, ...] | None:
    """Parts x_1 >= ... >= x_m with sum r and sum C(x_j, 2) = c, smallest product order first."""
    if r < 0 or c < 0 or c > comb(r, 2):
        return None
    found = _best_partition(r, c, r)
    return None if found is None else found[1]


def fact2_construct(r: int, c: int, max_order: int = DEFAULT_MAX_ORDER) -> SmallGraph:
    """Cartesian product of cliques K_{x_j + 1}; every link is a disjoint union of cliques K_{x_j}."""
    parts = solve_clique_partition(r, c)
    if parts is None:
        raise NoPartition(f"no clique partition realises ({r}, {c})")
    if prod(x + 1 for x in parts) > max_order:
        raise SizeCapExceeded(f"clique product for ({r}, {c}) exceeds cap {max_order}")
    g = complete(1)
    for x in parts:
        g = cartesian_product(g, complete(x + 1), max_order=max_order)
    return g
