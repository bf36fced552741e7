"""Nonexistence certificates for (r,c)-graphs and (r,c)-planar graphs.

Each certificate is plain data that :func:`verify_certificate` re-checks from
scratch: arithmetic certificates by recomputing the inequality, enumeration
certificates by brute force over every labelled graph of the relevant shape.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Any, Iterator

from .canon import canonical_rows
from .graph import GraphError, SmallGraph
from .graph6 import g6_decode, g6_encode
from .planarity import is_planar

MAX_LINK_ORDER = 8
# labelled brute force is used by the verifier up to this many edge subsets
BRUTE_FORCE_LIMIT = 2_000_000

KINDS = ("Fact3", "BadLinks", "PlanarArithmetic", "PlanarClosedNbhd", "Handshake", "Mod3Circulant")


@dataclass(frozen=True)
class LinkWitness:
    graph6: str
    bad_vertex: int | None = None
    bound: int | None = None


@dataclass(frozen=True)
class NonexistenceCertificate:
    kind: str
    params: dict[str, Any]
    links: tuple[LinkWitness, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise GraphError(f"unknown certificate kind {self.kind!r}")

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "params": dict(self.params),
            "links": [{"graph6": w.graph6, "bad_vertex": w.bad_vertex, "bound": w.bound} for w in self.links],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> NonexistenceCertificate:
        links = tuple(LinkWitness(w["graph6"], w.get("bad_vertex"), w.get("bound")) for w in data.get("links", []))
        return cls(data["kind"], dict(data.get("params", {})), links)

    @classmethod
    def from_json(cls, text: str) -> NonexistenceCertificate:
        return cls.from_dict(json.loads(text))


CERTIFICATE_SCHEMA = {
    "type": "object",
    "required": ["kind", "params", "links"],
    "properties": {
        "kind": {"enum": list(KINDS)},
        "params": {"type": "object"},
        "links": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["graph6", "bad_vertex", "bound"],
                "properties": {
                    "graph6": {"type": "string"},
                    "bad_vertex": {"type": ["integer", "null"]},
                    "bound": {"type": ["integer", "null"]},
                },
            },
        },
    },
}


# near-complete links ----------------------------------------------------------

def fact3_check(r: int, c: int) -> NonexistenceCertificate | None:
    """No (r, C(r,2) - k)-graph exists when k >= 1 and r >= 3k."""
    k = comb(r, 2) - c
    if k >= 1 and r >= 3 * k:
        return NonexistenceCertificate("Fact3", {"r": r, "c": c, "k": k})
    return None


# links ------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _links_by_size(r: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Canonical rows of all graphs on r vertices, grouped by edge count (edge augmentation)."""
    total = comb(r, 2)
    layers: list[list[tuple[int, ...]]] = [[canonical_rows((0,) * r)]]
    for _ in range(total // 2):
        nxt: dict[tuple[int, ...], None] = {}
        for rows in layers[-1]:
            for a in range(r):
                for b in range(a + 1, r):
                    if rows[a] >> b & 1:
                        continue
                    grown = list(rows)
                    grown[a] |= 1 << b
                    grown[b] |= 1 << a
                    nxt.setdefault(canonical_rows(tuple(grown)), None)
        layers.append(sorted(nxt))
    full = (1 << r) - 1
    for size in range(total // 2 + 1, total + 1):
        # complements of the graphs with total - size edges
        layers.append(
            sorted({canonical_rows(tuple(full & ~row & ~(1 << v) for v, row in enumerate(rows)))
                    for rows in layers[total - size]})
        )
    return tuple(tuple(layer) for layer in layers)


def enumerate_links(r: int, c: int) -> list[SmallGraph]:
    """All graphs on r vertices with c edges, one per isomorphism class."""
    if r > MAX_LINK_ORDER:
        raise GraphError(f"link enumeration is limited to r <= {MAX_LINK_ORDER}")
    if r < 0 or not 0 <= c <= comb(r, 2):
        return []
    if r == 0:
        return [SmallGraph.empty(0)]
    return [SmallGraph(r, rows) for rows in _links_by_size(r)[c]]


def bad_vertex_bound(h: SmallGraph, a: int, r: int) -> int:
    """Upper bound on e(a) in any r-regular host in which ``h`` is the link of a vertex v.

    N(a) consists of v, the link neighbours of a, and r - 1 - deg_h(a) vertices Z
    outside N[v]. Link vertex b can send at most r - 1 - deg_h(b) edges outside N[v].
    """
    if not 0 <= a < h.n:
        raise IndexError(f"vertex {a} not in link")
    inner = h.adj[a]
    deg_a = inner.bit_count()
    z = r - 1 - deg_a
    if z < 0:
        raise GraphError(f"link vertex {a} has degree {deg_a} >= r={r}")
    within = sum((h.adj[b] & inner).bit_count() for b in h.neighbors(a)) // 2
    outside = sum(min(z, max(0, r - 1 - h.degree(b))) for b in h.neighbors(a))
    return deg_a + within + outside + comb(z, 2)


def _bad_vertex(h: SmallGraph, r: int, c: int) -> tuple[int, int] | None:
    best = None
    for a in range(h.n):
        bound = bad_vertex_bound(h, a, r)
        if bound < c and (best is None or bound < best[1]):
            best = (a, bound)
    return best


def bad_link_certificate(r: int, c: int) -> NonexistenceCertificate | None:
    """Every possible link contains a vertex whose own link cannot reach c edges."""
    if r > MAX_LINK_ORDER or r < 1:
        return None
    witnesses = []
    for h in enumerate_links(r, c):
        bad = _bad_vertex(h, r, c)
        if bad is None:
            return None
        witnesses.append(LinkWitness(g6_encode(h), bad[0], bad[1]))
    return NonexistenceCertificate("BadLinks", {"r": r, "c": c}, tuple(witnesses))


# planar ---------------------------------------------------------------------

def _cone(h: SmallGraph) -> SmallGraph:
    """K_1 + h with the apex as the last vertex."""
    return h.add_vertex((1 << h.n) - 1)


def planar_arithmetic(r: int, c: int) -> NonexistenceCertificate | None:
    """Certificate that no planar (r, c)-graph exists, if one of the known arguments applies."""
    if r < 1 or c < 0 or c > comb(r, 2):
        return None
    if r >= 6:
        return NonexistenceCertificate("PlanarArithmetic", {"r": r, "c": c, "case": "min_degree"})
    if r >= 4 and c == 0:
        return NonexistenceCertificate("PlanarArithmetic", {"r": r, "c": c, "case": "i"})
    if r == 5 and c in (1, 2, 3):
        return NonexistenceCertificate("PlanarArithmetic", {"r": r, "c": c, "case": "ii"})
    if c == 6:
        return NonexistenceCertificate("PlanarArithmetic", {"r": r, "c": c, "case": "iii"})
    if r + 1 >= 3 and r + c > 3 * (r + 1) - 6:
        return NonexistenceCertificate(
            "PlanarClosedNbhd",
            {"r": r, "c": c, "reason": "edge_excess", "edges": r + c, "max_planar_edges": 3 * (r + 1) - 6},
        )
    candidates = enumerate_links(r, c)
    if candidates and not any(is_planar(_cone(h)) for h in candidates):
        return NonexistenceCertificate(
            "PlanarClosedNbhd",
            {"r": r, "c": c, "reason": "dominating_vertex"},
            tuple(LinkWitness(g6_encode(h)) for h in candidates),
        )
    # a planar (r,c)-graph is in particular an (r,c)-graph
    return fact3_check(r, c) or bad_link_certificate(r, c)


def handshake_certificate(n: int, r: int) -> NonexistenceCertificate | None:
    if (n * r) % 2 == 1 or r >= n:
        return NonexistenceCertificate("Handshake", {"n": n, "r": r})
    return None


def mod3_circulant_certificate(r: int, c: int) -> NonexistenceCertificate | None:
    if c % 3 == 2:
        return NonexistenceCertificate("Mod3Circulant", {"r": r, "c": c})
    return None


def find_certificate(r: int, c: int, planar: bool = False) -> NonexistenceCertificate | None:
    if planar:
        return planar_arithmetic(r, c)
    return fact3_check(r, c) or bad_link_certificate(r, c)


# verification -----------------------------------------------------------------

def _labelled_graphs(r: int, c: int) -> Iterator[SmallGraph]:
    pairs = list(combinations(range(r), 2))
    for chosen in combinations(pairs, c):
        yield SmallGraph.from_edges(r, chosen)


def _all_shapes(r: int, c: int) -> Iterator[SmallGraph]:
    if comb(comb(r, 2), c) <= BRUTE_FORCE_LIMIT:
        return _labelled_graphs(r, c)
    return iter(enumerate_links(r, c))


def _verify_planar_arithmetic(case: str, r: int, c: int) -> bool:
    if case == "min_degree":
        return r >= 6
    if case == "i":
        # triangle-free planar: e <= 2n - 4, so the average degree is below 4
        return r >= 4 and c == 0
    if case == "ii":
        # f_3 = cn/3 and Euler give r <= 4 + c/3 - 8/n < 5
        return r == 5 and c in (1, 2, 3) and 4 + Fraction(c, 3) <= 5
    if case == "iii":
        # f_3 = 2n and Euler give r >= 6 - 4/n > 5 once n >= 5
        return c == 6 and r <= 5 and comb(r, 2) >= 6
    return False


def verify_certificate(cert: NonexistenceCertificate, r: int, c: int) -> bool:
    p = cert.params
    if cert.kind == "Handshake":
        return p.get("r") == r and ((p["n"] * r) % 2 == 1 or r >= p["n"])
    if p.get("r") != r or p.get("c") != c:
        return False
    if cert.kind == "Fact3":
        k = comb(r, 2) - c
        return p.get("k") == k and k >= 1 and r >= 3 * k
    if cert.kind == "Mod3Circulant":
        return c % 3 == 2
    if cert.kind == "PlanarArithmetic":
        return _verify_planar_arithmetic(p.get("case", ""), r, c)
    if cert.kind == "PlanarClosedNbhd":
        if p.get("reason") == "edge_excess":
            return r + 1 >= 3 and r + c > 3 * (r + 1) - 6
        if p.get("reason") == "dominating_vertex":
            return all(not is_planar(_cone(h)) for h in _all_shapes(r, c))
        return False
    if cert.kind == "BadLinks":
        return _verify_bad_links(cert, r, c)
    return False


def _verify_bad_links(cert: NonexistenceCertificate, r: int, c: int) -> bool:
    listed = set()
    for w in cert.links:
        h = g6_decode(w.graph6)
        if h.n != r or h.num_edges != c or w.bad_vertex is None or w.bound is None:
            return False
        if not 0 <= w.bad_vertex < r:
            return False
        if bad_vertex_bound(h, w.bad_vertex, r) != w.bound or w.bound >= c:
            return False
        listed.add(canonical_rows(h.adj))
    # every labelled link must be one of the listed shapes
    return all(canonical_rows(h.adj) in listed for h in _all_shapes(r, c))
