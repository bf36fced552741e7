"""Regenerate src/rcgraphs/data/seed.jsonl.

Every record is rebuilt from a construction or a search and verified before
it is written. Orders found by ``find_smallest`` inside the budget are marked
certified_smallest; everything else is existence-only. Cells whose exhaustive
search runs out of budget get a witness from randomised edge switching.

    python3 scripts/build_seed.py [--budget SECONDS]
"""

from __future__ import annotations

import argparse
import logging
import math
import random
import time
from pathlib import Path

import networkx as nx

from rcgraphs import families
from rcgraphs.catalog import Catalog, make_record
from rcgraphs.circulant import CirculantSpec, make_circulant
from rcgraphs.constructions import cartesian_product, complement_transform, fact2_construct, solve_clique_partition
from rcgraphs.graph import SmallGraph, disjoint_union
from rcgraphs.search import SearchBudgetExceeded, find_smallest

log = logging.getLogger("build_seed")

OUT = Path(__file__).resolve().parents[1] / "src" / "rcgraphs" / "data" / "seed.jsonl"

# least known orders for r <= 6 (None: no such graph)
KNOWN_ORDERS = {
    1: [2],
    2: [4, 3],
    3: [6, 6, None, 4],
    4: [8, 9, 9, 7, 6, None, 5],
    5: [10, 12, 12, 10, 12, 12, 8, None, None, None, 6],
    6: [12, 15, 15, 13, 12, 12, 11, 12, 12, 9, 9, None, 8, None, None, 7],
}


CIRCULANTS = [
    "12:1,3,4,6", "12:1,3,5", "15:1,3,5", "13:1,2,5", "12:2,3,4", "11:1,2,4", "12:1,2,4",
    "9:1,2,4", "9:1,2,3", "8:1,2,3", "7:1,2,3", "18:1,2,6,9", "9:1,3", "10:1,2,3,5",
]


def anneal(n: int, r: int, c: int, seed: int, steps: int = 20000) -> SmallGraph | None:
    """Degree-preserving edge switches from a random r-regular graph, minimising sum |e(v) - c|."""
    rng = random.Random(seed)
    g = nx.random_regular_graph(r, n, seed=seed)

    def cost() -> int:
        return sum(abs(t - c) for t in nx.triangles(g).values())

    cur, temp = cost(), 2.0
    for _ in range(steps):
        if cur == 0:
            return SmallGraph.from_edges(n, g.edges())
        (a, b), (x, y) = rng.sample(list(g.edges()), 2)
        if rng.random() < 0.5:
            x, y = y, x
        if len({a, b, x, y}) < 4 or g.has_edge(a, x) or g.has_edge(b, y):
            continue
        g.remove_edges_from([(a, b), (x, y)])
        g.add_edges_from([(a, x), (b, y)])
        new = cost()
        if new <= cur or rng.random() < math.exp((cur - new) / temp):
            cur = new
        else:
            g.remove_edges_from([(a, x), (b, y)])
            g.add_edges_from([(a, b), (x, y)])
        temp = max(0.05, temp * 0.9999)
    return None


def _named() -> list[tuple[SmallGraph, str]]:
    f = families
    return [
        (f.complete(2), "K2"),
        (f.cycle(4), "C4"),
        (f.complete(3), "K3"),
        (f.hypercube(3), "Q3"),
        (f.prism(3), "triangular prism"),
        (f.complete(4), "K4"),
        (f.antiprism(3), "octahedron"),
        (f.antiprism(4), "square antiprism"),
        (f.antiprism(5), "pentagonal antiprism"),
        (f.cuboctahedron(), "cuboctahedron"),
        (f.icosahedron(), "icosahedron"),
        (f.rhombicuboctahedron(), "rhombicuboctahedron"),
        (f.snub_cube(), "snub cube"),
        (f.petersen(), "Petersen"),
        (f.hypercube(4), "Q4"),
        (f.complete_bipartite(3, 3), "K3,3"),
        (f.line_graph(f.petersen()), "line graph of Petersen"),
        (f.cocktail_party(4), "cocktail party K2,2,2,2"),
        (complement_transform(f.icosahedron()), "complement of icosahedron"),
        (complement_transform(f.cycle(9)), "complement of C9"),
        (complement_transform(disjoint_union(*[f.complete(3)] * 3)), "K3,3,3"),
    ]


def build(budget: float) -> list:
    records = []
    searched: dict[tuple[int, int], SmallGraph] = {}
    missing: list[tuple[int, int, int]] = []

    def keep(g: SmallGraph, source: str, **meta) -> None:
        rec = make_record(g, source, **meta)
        if rec is None:
            raise RuntimeError(f"{source} is not (r,c)-constant")
        records.append(rec)

    for r, row in KNOWN_ORDERS.items():
        for c, order in enumerate(row):
            if order is None:
                continue
            start = time.monotonic()
            try:
                found = find_smallest(r, c, order, mode="first", max_seconds=budget)
            except SearchBudgetExceeded as exc:
                log.info("(%d,%d): %s, existence-only", r, c, exc)
                missing.append((r, c, order))
                continue
            if found.graph is None or found.order != order:
                raise RuntimeError(f"({r},{c}) smallest order {found.order}, expected {order}")
            searched[r, c] = found.graph
            keep(found.graph, f"search: least order for ({r},{c})", certified_smallest=True)
            log.info("(%d,%d) = %d in %.1fs", r, c, order, time.monotonic() - start)

    for r, c, order in missing:
        for seed in range(200):
            g = anneal(order, r, c, seed)
            if g is not None:
                keep(g, f"edge-switch search for ({r},{c}), seed {seed}")
                log.info("(%d,%d) witness on %d vertices from seed %d", r, c, order, seed)
                break

    for text in CIRCULANTS:
        spec = CirculantSpec.parse(text)
        keep(make_circulant(spec), f"circulant Circ({text})", circulant_spec=str(spec))

    for g, name in _named():
        keep(g, name)

    if (5, 2) in searched:
        keep(complement_transform(searched[5, 2]), "complement of the (5,2) witness")

    products = [
        (families.complete(3), families.complete(3), "K3 x K3"),
        (families.complete(3), families.complete(2), "K3 x K2"),
        (families.cycle(4), families.complete(3), "C4 x K3"),
        (families.petersen(), families.complete(2), "Petersen x K2"),
        (families.complete(4), families.cycle(5), "K4 x C5"),
        (families.antiprism(3), families.complete(2), "octahedron x K2"),
    ]
    for g, h, name in products:
        keep(cartesian_product(g, h), name)

    for r in range(1, 7):
        for c in range(r * (r - 1) // 2 + 1):
            if solve_clique_partition(r, c) is not None:
                g = fact2_construct(r, c)
                if g.n <= 64:
                    keep(g, f"clique product for ({r},{c})")
    return records


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--budget", type=float, default=120.0, help="seconds per least-order search")
    args = parser.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    cat = Catalog()
    added = sum(cat.add(rec) for rec in build(args.budget))
    OUT.write_text(cat.export("jsonl"), encoding="utf-8")
    log.info("wrote %d records to %s", added, OUT)


if __name__ == "__main__":
    main()
