from __future__ import annotations

import random
from itertools import combinations

import networkx as nx
import pytest
from conftest import small_graphs
from hypothesis import given
from hypothesis import strategies as st
from oracles import isomorphic_brute, to_nx

from rcgraphs import families
from rcgraphs.canon import brute_force_canonical_rows, canonical_form, canonical_graph, canonical_order, canonical_rows
from rcgraphs.circulant import CirculantSpec, make_circulant
from rcgraphs.graph import SmallGraph
from rcgraphs.graph6 import g6_decode


def _shuffle(g: SmallGraph, rng: random.Random) -> SmallGraph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


@given(small_graphs(max_n=10), st.randoms(use_true_random=False))
def test_invariant_under_relabelling(g, rng):
    assert canonical_form(_shuffle(g, rng)) == canonical_form(g)


@given(small_graphs(max_n=10))
def test_canonical_graph_is_isomorphic(g):
    assert nx.is_isomorphic(to_nx(canonical_graph(g)), to_nx(g))
    assert g6_decode(canonical_form(g).graph6) == canonical_graph(g)


def test_canonical_order_is_a_permutation():
    g = families.petersen()
    order = canonical_order(g)
    assert sorted(order) == list(range(10))


@pytest.mark.parametrize(
    "g",
    [
        families.petersen(),
        families.hypercube(4),
        families.icosahedron(),
        families.cuboctahedron(),
        families.rhombicuboctahedron(),
        families.snub_cube(),
        make_circulant(CirculantSpec(13, (1, 5))),
        families.complete(12),
        SmallGraph.empty(12),
        families.complete_bipartite(5, 7),
    ],
)
def test_hundred_relabellings(g):
    rng = random.Random(g.n * 31 + g.num_edges)
    form = canonical_form(g)
    for _ in range(100):
        assert canonical_form(_shuffle(g, rng)) == form


def test_separates_cospectral_regular_pairs():
    k33, prism = families.complete_bipartite(3, 3), families.prism(3)
    assert not isomorphic_brute(k33, prism)
    assert canonical_form(k33) != canonical_form(prism)


def test_shrikhande_vs_rook():
    # both strongly regular (16, 6, 2, 2); refinement alone cannot separate them
    rook = nx.cartesian_product(nx.complete_graph(4), nx.complete_graph(4))
    rook = nx.convert_node_labels_to_integers(rook)
    shrikhande = nx.Graph()
    for x in range(16):
        a, b = divmod(x, 4)
        for da, db in ((0, 1), (1, 0), (1, 1)):
            for s in (1, -1):
                shrikhande.add_edge(x, ((a + s * da) % 4) * 4 + (b + s * db) % 4)
    g = SmallGraph.from_edges(16, rook.edges())
    h = SmallGraph.from_edges(16, shrikhande.edges())
    assert canonical_form(g) != canonical_form(h)
    assert canonical_form(h) == canonical_form(_shuffle(h, random.Random(5)))


def test_matches_brute_force_equivalence_small():
    # all labelled graphs on 5 vertices: canonical forms agree iff brute-force forms agree
    pairs = list(combinations(range(5), 2))
    seen: dict[tuple, tuple] = {}
    for mask in range(1 << len(pairs)):
        g = SmallGraph.from_edges(5, [p for i, p in enumerate(pairs) if mask >> i & 1])
        brute = brute_force_canonical_rows(g.adj)
        fast = canonical_rows(g.adj)
        assert seen.setdefault(brute, fast) == fast
    assert len(seen) == 34


def test_digest_shape():
    d = canonical_form(families.petersen()).digest()
    assert len(d) == 32 and int(d, 16) >= 0
