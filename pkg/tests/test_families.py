from __future__ import annotations

import networkx as nx
import pytest
from oracles import to_nx

from rcgraphs import families
from rcgraphs.graph import rc_signature
from rcgraphs.planarity import is_planar


@pytest.mark.parametrize(
    "build, n, m, sig, planar",
    [
        (families.icosahedron, 12, 30, (5, 5), True),
        (families.cuboctahedron, 12, 24, (4, 2), True),
        (families.rhombicuboctahedron, 24, 48, (4, 1), True),
        (families.snub_cube, 24, 60, (5, 4), True),
        (lambda: families.antiprism(4), 8, 16, (4, 3), True),
        (lambda: families.antiprism(3), 6, 12, (4, 4), True),
        (lambda: families.hypercube(3), 8, 12, (3, 0), True),
        (lambda: families.prism(3), 6, 9, (3, 1), True),
        (families.petersen, 10, 15, (3, 0), False),
    ],
)
def test_solids(build, n, m, sig, planar):
    g = build()
    assert (g.n, g.num_edges) == (n, m)
    assert tuple(rc_signature(g)) == sig
    assert is_planar(g) is planar


def test_match_networkx_generators():
    pairs = [
        (families.petersen(), nx.petersen_graph()),
        (families.hypercube(4), nx.hypercube_graph(4)),
        (families.icosahedron(), nx.icosahedral_graph()),
        (families.complete_bipartite(2, 5), nx.complete_bipartite_graph(2, 5)),
        (families.line_graph(families.complete(5)), nx.line_graph(nx.complete_graph(5))),
    ]
    for ours, ref in pairs:
        assert nx.is_isomorphic(to_nx(ours), ref)


def test_snub_cube_faces():
    # 24 vertices, 60 edges, so Euler gives 38 faces: 32 triangles and 6 squares
    g = families.snub_cube()
    triangles = sum(nx.triangles(to_nx(g)).values()) // 3
    assert triangles == 32


def test_cycle_needs_three():
    with pytest.raises(ValueError):
        families.cycle(2)
