from __future__ import annotations

import sys
from pathlib import Path

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from rcgraphs.graph import SmallGraph  # noqa: E402

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def small_graphs(draw, min_n: int = 0, max_n: int = 9) -> SmallGraph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return SmallGraph.from_edges(n, [p for p, keep in zip(pairs, bits) if keep])


@st.composite
def permuted(draw, g: SmallGraph) -> list[int]:
    return draw(st.permutations(list(range(g.n))))
