from __future__ import annotations

import networkx as nx

from .graph import SmallGraph


def is_planar(g: SmallGraph) -> bool:
    """Planarity via the left-right criterion (networkx implementation)."""
    if g.n <= 4:
        return True
    e = g.num_edges
    if e > 3 * g.n - 6:
        return False
    if e < 9:
        # every Kuratowski subdivision has at least 9 edges
        return True
    planar, _ = nx.check_planarity(g.to_networkx())
    return planar
