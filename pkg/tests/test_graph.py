from __future__ import annotations

import math

import networkx as nx
import pytest
from conftest import small_graphs
from hypothesis import given
from oracles import link_edges_naive, signature_naive, to_nx, triangles_naive

from rcgraphs import families
from rcgraphs.graph import (
    GraphError,
    RcSignature,
    SizeCapExceeded,
    SmallGraph,
    complement,
    disjoint_union,
    girth,
    neighborhood_edges,
    rc_signature,
    triangle_count,
)


def test_rejects_bad_rows():
    with pytest.raises(GraphError):
        SmallGraph(2, (0b10, 0))
    with pytest.raises(GraphError):
        SmallGraph(1, (0b1,))
    with pytest.raises(GraphError):
        SmallGraph(2, (0b100, 0))
    with pytest.raises(GraphError):
        SmallGraph(3, (0,))


def test_from_edges_errors():
    with pytest.raises(GraphError):
        SmallGraph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        SmallGraph.from_edges(3, [(1, 1)])
    with pytest.raises(SizeCapExceeded):
        SmallGraph.from_edges(20, [], max_order=10)


def test_basic_accessors():
    g = families.cycle(5)
    assert g.degrees() == [2] * 5
    assert g.num_edges == 5
    assert g.neighbors(0) == [1, 4]
    assert g.has_edge(4, 0) and not g.has_edge(0, 2)
    assert g.link(0).num_edges == 0


def test_neighborhood_edges_out_of_range():
    with pytest.raises(IndexError):
        neighborhood_edges(families.complete(3), 3)


def test_signature_of_empty_graph_raises():
    with pytest.raises(GraphError):
        rc_signature(SmallGraph.empty(0))


def test_rc_signature_rejects_c_above_pairs():
    with pytest.raises(GraphError):
        RcSignature(3, 4)


@pytest.mark.parametrize(
    "g, sig",
    [
        (families.complete(7), (6, 15)),
        (families.petersen(), (3, 0)),
        (families.prism(3), (3, 1)),
        (families.cycle(3), (2, 1)),
        (families.hypercube(4), (4, 0)),
        (families.antiprism(3), (4, 4)),
        (families.cocktail_party(4), (6, 12)),
    ],
)
def test_known_signatures(g, sig):
    assert tuple(rc_signature(g)) == sig


def test_irregular_graph_has_no_signature():
    assert rc_signature(families.path(4)) is None
    # regular but links differ: C3 plus C4
    assert rc_signature(disjoint_union(families.cycle(3), families.cycle(4))) is None


@given(small_graphs())
def test_link_and_triangles_match_naive(g):
    for v in range(g.n):
        assert neighborhood_edges(g, v) == link_edges_naive(g, v)
    assert triangle_count(g) == triangles_naive(g)
    assert 3 * triangle_count(g) == sum(neighborhood_edges(g, v) for v in range(g.n))


@given(small_graphs(min_n=1))
def test_signature_matches_naive(g):
    sig = rc_signature(g)
    assert (None if sig is None else tuple(sig)) == signature_naive(g)


@given(small_graphs())
def test_girth_matches_networkx(g):
    expected = nx.girth(to_nx(g))
    assert girth(g) == expected or (math.isinf(girth(g)) and math.isinf(expected))


@given(small_graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert g.num_edges + complement(g).num_edges == g.n * (g.n - 1) // 2


@given(small_graphs(min_n=1), small_graphs(min_n=1))
def test_disjoint_union_counts(g, h):
    u = disjoint_union(g, h)
    assert u.n == g.n + h.n and u.num_edges == g.num_edges + h.num_edges


def test_relabel_and_induced():
    g = families.path(4)
    h = g.relabel([3, 2, 1, 0])
    assert h.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.induced([0, 1, 3]).edges() == [(0, 1)]


def test_add_vertex_and_networkx():
    g = families.path(3).add_vertex(0b101)
    assert g.n == 4 and g.degrees() == [2, 2, 2, 2]
    assert nx.is_isomorphic(g.to_networkx(), nx.cycle_graph(4))
