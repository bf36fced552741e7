"""Circulants Circ(n, S): neighbourhood edge orbits, the mod-3 law, and (r,c) synthesis."""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb

from .graph import GraphError, SmallGraph, neighborhood_edges, rc_signature


class CirculantError(GraphError):
    pass


class Mod3Impossible(CirculantError):
    """No circulant has every link with c = 2 (mod 3) edges."""


class BelowBound(CirculantError):
    """(r, c) lies below what the implemented constructions reach."""


@dataclass(frozen=True)
class CirculantSpec:
    n: int
    jumps: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise CirculantError("circulant order must be at least 2")
        if len(set(self.jumps)) != len(self.jumps):
            raise CirculantError(f"duplicate jumps in {self.jumps}")
        for s in self.jumps:
            if not 1 <= s <= self.n // 2:
                raise CirculantError(f"jump {s} outside 1..{self.n // 2}")
        object.__setattr__(self, "jumps", tuple(sorted(self.jumps)))

    @property
    def degree(self) -> int:
        return 2 * len(self.jumps) - (self.n % 2 == 0 and self.n // 2 in self.jumps)

    def connection_set(self) -> set[int]:
        """S together with -S, as residues in 0..n-1."""
        return {s for s in self.jumps} | {self.n - s for s in self.jumps}

    def __str__(self) -> str:
        return f"{self.n}:{','.join(map(str, self.jumps))}"

    @classmethod
    def parse(cls, text: str) -> CirculantSpec:
        try:
            n_text, _, jumps_text = text.strip().partition(":")
            jumps = tuple(int(s) for s in jumps_text.split(",") if s.strip())
            return cls(int(n_text), jumps)
        except ValueError as exc:
            raise CirculantError(f"cannot parse circulant spec {text!r}") from exc


@dataclass(frozen=True)
class CanonicalEdge:
    """Neighbourhood edge written as {x, x + y} with x in S u -S and y in S."""

    x: int
    y: int


Edge = tuple[int, int]


def _edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def make_circulant(spec: CirculantSpec) -> SmallGraph:
    n = spec.n
    conn = spec.connection_set()
    rows = []
    for i in range(n):
        m = 0
        for s in conn:
            m |= 1 << ((i + s) % n)
        rows.append(m)
    return SmallGraph(n, tuple(rows))


def neighborhood_edges_at_zero(spec: CirculantSpec) -> list[Edge]:
    conn = spec.connection_set()
    nb = sorted(conn)
    return [(a, b) for i, a in enumerate(nb) for b in nb[i + 1:] if (b - a) % spec.n in conn]


def canonical_edge(spec: CirculantSpec, edge: Edge) -> CanonicalEdge:
    n = spec.n
    a, b = edge
    conn = spec.connection_set()
    if a not in conn or b not in conn or (b - a) % n not in conn:
        raise CirculantError(f"{edge} is not an edge of the subgraph induced by N(0)")
    jumps = set(spec.jumps)
    options = []
    for x, other in ((a, b), (b, a)):
        y = (other - x) % n
        if y in jumps:
            options.append(CanonicalEdge(x, y))
    if len(options) == 2:
        # both differences lie in S only when y = n/2; then x must itself be a jump
        options = [o for o in options if o.x in jumps]
    if len(options) != 1:
        raise CirculantError(f"no unique canonical representation for {edge}")
    return options[0]


def edge_orbit(spec: CirculantSpec, e: CanonicalEdge) -> frozenset[Edge]:
    """The (at most six) images of {x, x+y} among the triangles through 0."""
    n = spec.n
    x, y = e.x % n, e.y % n
    nx_, ny, s, ns = (-x) % n, (-y) % n, (x + y) % n, (-x - y) % n
    pairs = [(x, s), (y, s), (x, ny), (y, nx_), (nx_, ns), (ny, ns)]
    return frozenset(_edge(a, b) for a, b in pairs)


def orbit_partition(spec: CirculantSpec) -> list[frozenset[Edge]]:
    covered: set[Edge] = set()
    orbits = []
    for edge in neighborhood_edges_at_zero(spec):
        if edge in covered:
            continue
        orbit = edge_orbit(spec, canonical_edge(spec, edge))
        covered |= orbit
        orbits.append(orbit)
    return orbits


def mod3_class(spec: CirculantSpec) -> int:
    return len(neighborhood_edges_at_zero(spec)) % 3


def has_unit_orbit(spec: CirculantSpec) -> bool:
    return spec.n % 3 == 0 and spec.n // 3 in spec.jumps


def build_jump_set(k: int, j: int, l: int) -> list[int]:
    """{1, ..., k-1, k+j} followed by the first l terms of 2(k+j)+1, step k+j+1."""
    if not (k > j >= 0 and l >= 0):
        raise CirculantError(f"need k > j >= 0 and l >= 0, got k={k}, j={j}, l={l}")
    base = list(range(1, k)) + [k + j]
    start, step = 2 * (k + j) + 1, k + j + 1
    return base + [start + i * step for i in range(l)]


def link_edge_formula(k: int, j: int, with_unit_orbit: bool = False) -> int:
    if not k > j >= 0:
        raise CirculantError(f"need k > j >= 0, got k={k}, j={j}")
    return 3 * comb(k - 1, 2) + 3 * (k - 1 - j) + (1 if with_unit_orbit else 0)


def recover_kj(c: int) -> tuple[int, int]:
    """Least k with 3C(k-1,2) <= c <= 3C(k,2), and j making the link formula equal c (c = 0 mod 3)."""
    if c < 0 or c % 3:
        raise CirculantError(f"c={c} is not a non-negative multiple of 3")
    k = 1
    while 3 * k * (k - 1) // 2 < c:
        k += 1
    j = k - 1 - (c - 3 * comb(k - 1, 2)) // 3
    return k, j


def threshold(c: int) -> float:
    """Degree from which the constructions below always succeed (1 for c = 0)."""
    if c == 0:
        return 1.0
    return 6 + math.sqrt((8 * c - 5) / 3)


def _verified(spec: CirculantSpec, r: int, c: int) -> bool:
    if spec.degree != r:
        return False
    sig = rc_signature(make_circulant(spec))
    return sig is not None and (sig.r, sig.c) == (r, c)


def _scan(r: int, c: int, base: list[int], extra, start: int, step: int, limit: int) -> CirculantSpec | None:
    n = start
    while n <= limit:
        jumps = base + extra(n)
        if max(jumps) <= n // 2 and len(set(jumps)) == len(jumps):
            spec = CirculantSpec(n, tuple(jumps))
            if _verified(spec, r, c):
                return spec
        n += step
    return None


def construct_rc_circulant(r: int, c: int, scan_limit: int | None = None) -> CirculantSpec:
    """An (r, c)-circulant from the S_{k,j,l} jump-set recipes, verified before it is returned."""
    if r < 0 or c < 0 or c > comb(r, 2):
        raise CirculantError(f"({r}, {c}) is not a valid signature")
    if c % 3 == 2:
        raise Mod3Impossible(f"no ({r}, {c})-circulant: link edge counts are 0 or 1 mod 3")
    if r == 0:
        return CirculantSpec(2, ()) if c == 0 else _fail(r, c)
    if r == 1:
        if c:
            _fail(r, c)
        return CirculantSpec(2, (1,))
    unit = c % 3 == 1
    k, j = recover_kj(c - 1 if unit else c)

    def limit(base: list[int]) -> int:
        return scan_limit or 12 * (max(base) + r + 6)

    if not unit:
        if r < 2 * k:
            _fail(r, c)
        l, odd = divmod(r - 2 * k, 2)
        base = build_jump_set(k, j, l)
        if odd:
            start = 2 * max(base) + 2
            spec = _scan(r, c, base, lambda n: [n // 2], start, 2, limit(base))
        else:
            spec = _scan(r, c, base, lambda n: [], 2 * max(base) + 1, 1, limit(base))
    elif r % 2 == 0:
        if r < 2 * k:
            _fail(r, c)
        l = r // 2 - k
        if l == 0:
            spec = _l0_unit(r, c, k, j)
        else:
            base = build_jump_set(k, j, l - 1)
            m = max(base) + 1
            spec = _scan(r, c, base, lambda n: [n // 3], 3 * m, 3, limit(base))
    else:
        if r < 2 * k + 3:
            _fail(r, c)
        l = (r - 1) // 2 - k
        base = build_jump_set(k, j, l - 1)
        m = max(base) + 1
        spec = _scan(r, c, base, lambda n: [n // 3, n // 2], 6 * m, 6, limit(base))
    if spec is None:
        _fail(r, c)
    return spec


def _l0_unit(r: int, c: int, k: int, j: int) -> CirculantSpec | None:
    # Circ(3k, S_{k,j}) carries the unit orbit only if k is a jump, i.e. j = 0;
    # Circ(3(k+j), S_{k,j}) puts n/3 = k+j into S for every j.
    base = build_jump_set(k, j, 0)
    for n in (3 * k, 3 * (k + j)):
        if n >= 2 and max(base) <= n // 2:
            spec = CirculantSpec(n, tuple(base))
            if _verified(spec, r, c):
                return spec
    return None


def _fail(r: int, c: int):
    raise BelowBound(f"({r}, {c}) is below the reach of the circulant constructions")


def link_counts(spec: CirculantSpec) -> list[int]:
    """e(v) for every vertex of the built circulant."""
    g = make_circulant(spec)
    return [neighborhood_edges(g, v) for v in range(g.n)]
