from __future__ import annotations

import networkx as nx
import pytest
from conftest import small_graphs
from hypothesis import given
from oracles import from_nx, to_nx

from rcgraphs import families
from rcgraphs.graph import SizeCapExceeded, SmallGraph
from rcgraphs.graph6 import HEADER, Graph6Error, g6_decode, g6_encode


@pytest.mark.parametrize(
    "g, text",
    [
        (SmallGraph.empty(0), "?"),
        (SmallGraph.empty(1), "@"),
        (families.complete(2), "A_"),
        (families.complete(4), "C~"),
        (families.petersen(), None),
    ],
)
def test_known_encodings(g, text):
    expected = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip() if text is None else text
    assert g6_encode(g) == expected


@given(small_graphs(max_n=12))
def test_roundtrip(g):
    assert g6_decode(g6_encode(g)) == g


@given(small_graphs(max_n=12))
def test_agrees_with_networkx(g):
    assert g6_encode(g) == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()


@pytest.mark.parametrize("n", [62, 63, 100, 300])
def test_long_order_headers(n):
    g = families.cycle(n)
    text = g6_encode(g)
    assert text.startswith("~") == (n >= 63)
    assert g6_decode(text) == g


def test_eight_byte_order_is_capped():
    with pytest.raises(SizeCapExceeded):
        g6_decode("~~?@???" + "?" * 8)


def test_header_and_whitespace():
    assert g6_decode(HEADER + "C~\n") == families.complete(4)


def test_decodes_networkx_output():
    h = nx.random_regular_graph(3, 20, seed=1)
    g = g6_decode(nx.to_graph6_bytes(h, header=True).decode())
    assert nx.is_isomorphic(to_nx(g), h)
    assert from_nx(h).num_edges == g.num_edges


@pytest.mark.parametrize("text", ["", "C", "C~~", "B~", "A`", "\x7f", "C~ junk", "~?"])
def test_malformed(text):
    with pytest.raises(Graph6Error):
        g6_decode(text)


def test_order_cap():
    with pytest.raises(SizeCapExceeded):
        g6_decode(g6_encode(SmallGraph.empty(40)), max_order=10)
