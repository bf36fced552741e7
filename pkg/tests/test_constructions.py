from __future__ import annotations

from math import comb, prod

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import signature_naive, to_nx

from rcgraphs import families
from rcgraphs.circulant import CirculantSpec, make_circulant
from rcgraphs.constructions import (
    NoPartition,
    cartesian_product,
    complement_signature,
    complement_transform,
    fact2_construct,
    solve_clique_partition,
)
from rcgraphs.graph import GraphError, SizeCapExceeded, SmallGraph, rc_signature

RC_GRAPHS = [
    families.complete(2),
    families.complete(3),
    families.complete(4),
    families.cycle(5),
    families.petersen(),
    families.prism(3),
    families.antiprism(3),
    families.antiprism(4),
    families.cuboctahedron(),
    families.icosahedron(),
    make_circulant(CirculantSpec(12, (1, 3, 4, 6))),
    make_circulant(CirculantSpec(11, (1, 2, 4))),
]


def _partitions(r: int, largest: int):
    if r == 0:
        yield ()
        return
    for x in range(min(r, largest), 0, -1):
        for rest in _partitions(r - x, x):
            yield (x,) + rest


def _best_partition_brute(r: int, c: int):
    options = [p for p in _partitions(r, r) if sum(comb(x, 2) for x in p) == c]
    if not options:
        return None
    return min(options, key=lambda p: (prod(x + 1 for x in p), tuple(-x for x in p)))


@given(st.sampled_from(RC_GRAPHS), st.sampled_from(RC_GRAPHS))
def test_product_signature_adds(g, h):
    (r1, c1), (r2, c2) = rc_signature(g), rc_signature(h)
    assert tuple(rc_signature(cartesian_product(g, h))) == (r1 + r2, c1 + c2)


def test_product_matches_networkx():
    g, h = families.cycle(4), families.path(3)
    ours = cartesian_product(g, h)
    assert nx.is_isomorphic(to_nx(ours), nx.cartesian_product(to_nx(g), to_nx(h)))
    assert ours.has_edge(0 * 3 + 0, 0 * 3 + 1) and ours.has_edge(0 * 3 + 2, 1 * 3 + 2)


def test_product_guards():
    with pytest.raises(GraphError):
        cartesian_product(SmallGraph.empty(0), families.complete(2))
    with pytest.raises(SizeCapExceeded):
        cartesian_product(families.complete(30), families.complete(30))


@given(st.sampled_from(RC_GRAPHS))
def test_complement_formula(g):
    r, c = rc_signature(g)
    assert signature_naive(complement_transform(g)) == complement_signature(g.n, r, c)


@pytest.mark.parametrize("r", range(0, 15))
def test_clique_partition_matches_brute_force(r):
    for c in range(comb(r, 2) + 1):
        assert solve_clique_partition(r, c) == _best_partition_brute(r, c), (r, c)


def test_clique_partition_examples():
    assert solve_clique_partition(5, 4) == (3, 2)
    assert solve_clique_partition(4, 0) == (1, 1, 1, 1)
    assert solve_clique_partition(3, 2) is None
    assert solve_clique_partition(3, 7) is None


@pytest.mark.parametrize("r", range(1, 11))
def test_fact2_signature(r):
    for c in range(comb(r, 2) + 1):
        parts = solve_clique_partition(r, c)
        if parts is None:
            with pytest.raises(NoPartition):
                fact2_construct(r, c)
            continue
        g = fact2_construct(r, c, max_order=1 << 14)
        assert g.n == prod(x + 1 for x in parts)
        assert tuple(rc_signature(g)) == (r, c)


def test_fact2_size_cap():
    with pytest.raises(SizeCapExceeded):
        fact2_construct(10, 0)


def test_large_degree_range_check():
    # below r = 100 the range c <= r^2/2 - 5 r^(3/2) is empty
    assert all(r * r / 2 - 5 * r**1.5 < 0 for r in range(1, 100))
    r = 121
    bound = int(r * r / 2 - 5 * r**1.5)
    assert bound == 665
    assert all(solve_clique_partition(r, c) is not None for c in range(bound + 1))
