"""Vertex-by-vertex generation of (r,c)-graphs with pruning and isomorph rejection.

Partial graphs are induced subgraphs of every completion, so edges between
placed vertices are final. A partial graph is cut as soon as no completion to
an (r,c)-graph on n vertices can exist; survivors are canonically relabelled
and deduplicated per depth.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations
from math import comb
from typing import Literal

from .canon import canonical_rows
from .graph import GraphError, SmallGraph, rc_signature
from .graph6 import g6_encode
from .planarity import is_planar

Rows = tuple[int, ...]

DEFAULT_MAX_NODES = 10**8
DEFAULT_MAX_SECONDS = 600.0


class SearchBudgetExceeded(GraphError):
    def __init__(self, message: str, partial: list[SmallGraph] | None = None, last_completed: int | None = None):
        super().__init__(message)
        self.partial = partial or []
        self.last_completed = last_completed


@dataclass(frozen=True)
class SearchConfig:
    n: int
    r: int
    c: int
    planar_only: bool = False
    limit: int = 0
    mode: Literal["all", "first"] = "all"
    max_nodes: int = DEFAULT_MAX_NODES
    max_seconds: float = DEFAULT_MAX_SECONDS

    def __post_init__(self) -> None:
        if self.n < 1 or self.r < 0 or self.c < 0:
            raise GraphError("n must be positive, r and c non-negative")
        if self.c > comb(self.r, 2):
            raise GraphError(f"c={self.c} exceeds C(r,2)={comb(self.r, 2)}")
        if self.mode not in ("all", "first"):
            raise GraphError(f"unknown mode {self.mode!r}")

    @property
    def trivially_empty(self) -> bool:
        # handshake, r < n, and the triangle count cn/3 must be an integer
        return self.r >= self.n or (self.r * self.n) % 2 == 1 or (self.c * self.n) % 3 != 0

    @property
    def target_count(self) -> int:
        return 1 if self.mode == "first" else self.limit


@dataclass
class SearchStats:
    nodes_expanded: int = 0
    pruned_degree: int = 0
    pruned_link: int = 0
    pruned_feasibility: int = 0
    isomorphs_rejected: int = 0
    elapsed: float = 0.0

    def merge(self, other: SearchStats) -> None:
        for name in ("nodes_expanded", "pruned_degree", "pruned_link", "pruned_feasibility", "isomorphs_rejected"):
            setattr(self, name, getattr(self, name) + getattr(other, name))

    def to_json(self) -> str:
        return json.dumps(asdict(self))


@dataclass
class SearchResult:
    graphs: list[SmallGraph]
    stats: SearchStats
    complete: bool = True
    keys: list[bytes] = field(default_factory=list, repr=False)


@dataclass(frozen=True)
class Cut:
    reason: Literal["degree", "link", "feasibility"]
    detail: str = ""


KEEP = None


def _link_count(adj: Rows, v: int) -> int:
    row = adj[v]
    total = 0
    while row:
        low = row & -row
        total += (adj[low.bit_length() - 1] & adj[v]).bit_count()
        row ^= low
    return total // 2


def prune_rows(adj: Rows, n: int, r: int, c: int, planar_only: bool = False) -> Cut | None:
    """Decide whether the partial graph ``adj`` (k <= n vertices) can still complete."""
    k = len(adj)
    remaining = n - k
    degs = [row.bit_count() for row in adj]
    for v, d in enumerate(degs):
        if d > r:
            return Cut("degree", f"vertex {v} has degree {d} > {r}")
    links = [_link_count(adj, v) for v in range(k)]
    for v, e in enumerate(links):
        if e > c:
            return Cut("link", f"vertex {v} has e(v)={e} > {c}")
        if degs[v] == r and e != c:
            return Cut("link", f"vertex {v} is saturated with e(v)={e} != {c}")
    residual_total = 0
    for v, d in enumerate(degs):
        need = r - d
        if need > remaining:
            return Cut("feasibility", f"vertex {v} needs {need} more neighbours, {remaining} vertices left")
        residual_total += need
        if need:
            # upper bound on e(v) once its last `need` neighbours arrive
            reach = links[v] + comb(need, 2)
            row = adj[v]
            while row:
                low = row & -row
                reach += min(need, r - degs[low.bit_length() - 1])
                row ^= low
            if reach < c:
                return Cut("feasibility", f"vertex {v} can reach at most e(v)={reach} < {c}")
    inner = remaining * r - residual_total
    if inner < 0 or inner % 2 or inner > remaining * (remaining - 1):
        return Cut("feasibility", f"residual degree sum {residual_total} cannot be absorbed by {remaining} vertices")
    if planar_only and not is_planar(SmallGraph(k, adj)):
        return Cut("feasibility", "partial graph is not planar")
    return KEEP


def prune(partial: SmallGraph, cfg: SearchConfig) -> Cut | None:
    """``None`` keeps the partial graph; a :class:`Cut` names why it cannot complete."""
    return prune_rows(partial.adj, cfg.n, cfg.r, cfg.c, cfg.planar_only)


def _candidate_masks(adj: Rows, cfg: SearchConfig, stats: SearchStats | None = None) -> list[int]:
    k = len(adj)
    n, r = cfg.n, cfg.r
    after = n - k - 1  # vertices still to come once the new one is placed
    free = []
    forced = 0
    for v, row in enumerate(adj):
        need = r - row.bit_count()
        if need <= 0:
            continue
        if need > after:
            forced |= 1 << v
        else:
            free.append(v)
    nforced = forced.bit_count()
    lo = max(0, r - after)
    masks = []
    for size in range(max(lo - nforced, 0), min(r - nforced, len(free)) + 1):
        for combo in combinations(free, size):
            m = forced
            for v in combo:
                m |= 1 << v
            masks.append(m)
    if stats is not None:
        stats.pruned_degree += (1 << k) - len(masks)
    masks.sort()
    return masks


def _extend(adj: Rows, m: int) -> Rows:
    k = len(adj)
    bit = 1 << k
    return tuple(row | bit if m >> v & 1 else row for v, row in enumerate(adj)) + (m,)


def extend_one_vertex(partial: SmallGraph, cfg: SearchConfig) -> list[SmallGraph]:
    """All one-vertex extensions of ``partial`` that survive pruning (labelled, not deduplicated)."""
    if partial.n >= cfg.n:
        return []
    out = []
    for m in _candidate_masks(partial.adj, cfg):
        child = _extend(partial.adj, m)
        if prune_rows(child, cfg.n, cfg.r, cfg.c, cfg.planar_only) is KEEP:
            out.append(SmallGraph(len(child), child))
    return out


class _Budget:
    def __init__(self, cfg: SearchConfig, start: float) -> None:
        self.max_nodes = cfg.max_nodes
        self.deadline = start + cfg.max_seconds

    def exhausted(self, stats: SearchStats) -> bool:
        if stats.nodes_expanded >= self.max_nodes:
            return True
        return stats.nodes_expanded % 256 == 0 and time.monotonic() > self.deadline


class _Runner:
    def __init__(self, cfg: SearchConfig, start: float) -> None:
        self.cfg = cfg
        self.stats = SearchStats()
        self.seen: list[set[Rows]] = [set() for _ in range(cfg.n + 1)]
        self.found: dict[Rows, None] = {}
        self.budget = _Budget(cfg, start)
        self.complete = True

    def _done(self) -> bool:
        target = self.cfg.target_count
        return bool(target) and len(self.found) >= target

    def children(self, adj: Rows) -> list[Rows]:
        cfg = self.cfg
        stats = self.stats
        out = []
        depth_seen = self.seen[len(adj) + 1]
        for m in _candidate_masks(adj, cfg, stats):
            child = _extend(adj, m)
            cut = prune_rows(child, cfg.n, cfg.r, cfg.c, cfg.planar_only)
            if cut is not None:
                if cut.reason == "link":
                    stats.pruned_link += 1
                elif cut.reason == "degree":
                    stats.pruned_degree += 1
                else:
                    stats.pruned_feasibility += 1
                continue
            key = canonical_rows(child)
            if key in depth_seen:
                stats.isomorphs_rejected += 1
                continue
            depth_seen.add(key)
            out.append(key)
        return out

    def dfs(self, adj: Rows) -> None:
        stack = [adj]
        n = self.cfg.n
        while stack:
            if self._done():
                return
            if self.budget.exhausted(self.stats):
                self.complete = False
                return
            node = stack.pop()
            if len(node) == n:
                self.found[node] = None
                continue
            self.stats.nodes_expanded += 1
            # reversed so that the smallest mask is expanded first
            stack.extend(reversed(self.children(node)))

    def frontier(self, adj: Rows, width: int) -> list[Rows]:
        level = [adj]
        while level and len(level[0]) < self.cfg.n and len(level) < width:
            nxt = []
            for node in level:
                self.stats.nodes_expanded += 1
                nxt.extend(self.children(node))
            level = nxt
        return level


def _run_subtree(args: tuple[SearchConfig, Rows, float]) -> tuple[list[Rows], SearchStats, bool]:
    cfg, root, start = args
    runner = _Runner(cfg, start)
    runner.dfs(root)
    return list(runner.found), runner.stats, runner.complete


def _finish(cfg: SearchConfig, found: list[Rows], stats: SearchStats, complete: bool, start: float) -> SearchResult:
    keyed = {}
    for rows in found:
        key = canonical_rows(rows)
        g = SmallGraph(len(key), key)
        sig = rc_signature(g)
        assert sig is not None and (sig.r, sig.c) == (cfg.r, cfg.c), "search emitted a graph with the wrong signature"
        keyed[g6_encode(g).encode("ascii")] = g
    keys = sorted(keyed)
    if cfg.target_count:
        keys = keys[: cfg.target_count]
    stats.elapsed = time.monotonic() - start
    return SearchResult([keyed[k] for k in keys], stats, complete, keys)


def search(cfg: SearchConfig, workers: int = 1) -> SearchResult:
    """Run the pruned search; a result with ``complete=False`` ran out of budget."""
    start = time.monotonic()
    if cfg.trivially_empty:
        return _finish(cfg, [], SearchStats(), True, start)
    runner = _Runner(cfg, start)
    root: Rows = (0,)
    if prune_rows(root, cfg.n, cfg.r, cfg.c, cfg.planar_only) is not None:
        return _finish(cfg, [], runner.stats, True, start)
    runner.seen[1].add(root)
    # first/limit runs stop at the earliest witnesses in DFS order; splitting the tree
    # would make which witnesses come back depend on the worker count
    if workers <= 1 or cfg.target_count:
        runner.dfs(root)
        return _finish(cfg, list(runner.found), runner.stats, runner.complete, start)
    frontier = runner.frontier(root, 8 * workers)
    found = [f for f in frontier if len(f) == cfg.n]
    pending = [(cfg, f, start) for f in frontier if len(f) < cfg.n]
    complete = True
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for rows, stats, ok in pool.map(_run_subtree, pending):
            found.extend(rows)
            runner.stats.merge(stats)
            complete &= ok
    return _finish(cfg, found, runner.stats, complete, start)


def generate_rc_graphs(cfg: SearchConfig, workers: int = 1) -> list[SmallGraph]:
    """All pairwise non-isomorphic (r,c)-graphs on n vertices, sorted by canonical graph6."""
    result = search(cfg, workers)
    if not result.complete:
        raise SearchBudgetExceeded(
            f"search budget exhausted for n={cfg.n}, r={cfg.r}, c={cfg.c}", partial=result.graphs
        )
    return result.graphs


@dataclass
class SmallestResult:
    graph: SmallGraph | None
    order: int | None
    stats: dict[int, SearchStats]
    complete: bool = True


def find_smallest(
    r: int,
    c: int,
    n_max: int,
    planar_only: bool = False,
    mode: Literal["all", "first"] = "all",
    max_seconds: float = DEFAULT_MAX_SECONDS,
    max_nodes: int = DEFAULT_MAX_NODES,
    workers: int = 1,
) -> SmallestResult:
    """Scan n upward; the witness at the least n is the one with the least canonical graph6."""
    if c > comb(r, 2):
        raise GraphError(f"c={c} exceeds C(r,2)={comb(r, 2)}")
    per_n: dict[int, SearchStats] = {}
    deadline = time.monotonic() + max_seconds
    last_completed = None
    for n in range(r + 1, n_max + 1):
        left = deadline - time.monotonic()
        if left <= 0:
            raise SearchBudgetExceeded(f"time budget exhausted before n={n}", last_completed=last_completed)
        cfg = SearchConfig(n, r, c, planar_only, mode=mode, max_seconds=left, max_nodes=max_nodes)
        result = search(cfg, workers)
        per_n[n] = result.stats
        if result.graphs:
            return SmallestResult(result.graphs[0], n, per_n, result.complete)
        if not result.complete:
            raise SearchBudgetExceeded(f"budget exhausted at n={n}", last_completed=last_completed)
        last_completed = n
    return SmallestResult(None, None, per_n)


def smallest_rc_graph(r: int, c: int, n_max: int, planar_only: bool = False, **kwargs) -> tuple[SmallGraph, int] | None:
    found = find_smallest(r, c, n_max, planar_only, **kwargs)
    if found.graph is None:
        return None
    return found.graph, found.order
