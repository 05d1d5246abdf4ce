"""Exact thickness of small graphs by branch and bound over edge-to-part assignments.

Edges are assigned hardest first (largest degree sum).  Parts are opened in
first-use order, which fixes edge 0 to part 0 and removes part relabelings.
A part is abandoned when it would exceed ``3|V_used| - 6`` edges or stop
being planar; a node is abandoned when the remaining edges cannot fit in the
remaining planar capacity of the ``k`` parts.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from . import _kernels
from .graph import Edge, Graph

DEFAULT_MAX_EDGES = 36
DEFAULT_NODE_CAP = 10**8
NODE_CAP_ENV = "THICKNESS_LAB_NODE_CAP"


class SolverRefusal(RuntimeError):
    """The instance exceeds the edge budget or the search hit the node cap."""


def default_node_cap() -> int:
    raw = os.environ.get(NODE_CAP_ENV)
    return int(raw) if raw else DEFAULT_NODE_CAP


@dataclass
class SolverStats:
    nodes: int = 0
    planarity_calls: int = 0
    cache_hits: int = 0
    nodes_per_k: dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "nodes": self.nodes,
            "planarity_calls": self.planarity_calls,
            "cache_hits": self.cache_hits,
            "nodes_per_k": {str(k): v for k, v in sorted(self.nodes_per_k.items())},
        }


@dataclass
class SolverResult:
    thickness: Optional[int]
    witness: list[list[Edge]]
    stats: SolverStats
    k_max: int
    density_lower_bound: int = 1

    @property
    def exceeds_k_max(self) -> bool:
        return self.thickness is None

    def to_dict(self, graph: Optional[Graph] = None) -> dict:
        from .construction import decomposition_to_dict

        out: dict = {
            "thickness": self.thickness,
            "status": "exact" if self.thickness is not None else f">{self.k_max}",
            "k_max": self.k_max,
            "density_lower_bound": self.density_lower_bound,
        }
        if self.thickness is not None:
            if graph is not None:
                out["witness"] = decomposition_to_dict(self.witness, host=graph)
            else:
                out["witness"] = {"parts": [[list(e) for e in p] for p in self.witness]}
        out["stats"] = self.stats.to_dict()
        return out


def edge_order(g: Graph) -> list[Edge]:
    deg = g.degrees()
    return sorted(g.edges, key=lambda e: (-(deg[e[0]] + deg[e[1]]), e))


def density_lower_bound(g: Graph) -> int:
    """max(1, ceil(|E| / (3|V| - 6))) for |V| >= 3."""
    if g.n_vertices < 3 or g.n_edges == 0:
        return 1
    cap = 3 * g.n_vertices - 6
    return max(1, -(-g.n_edges // cap))


class _Search:
    def __init__(self, g: Graph, k: int, node_cap: int, stats: SolverStats, cache: dict) -> None:
        self.n = g.n_vertices
        self.order = edge_order(g)
        self.k = k
        self.node_cap = node_cap
        self.stats = stats
        self.cache = cache
        self.cap = 3 * self.n - 6 if self.n >= 3 else max(0, self.n - 1)
        self.part_edges: list[list[Edge]] = [[] for _ in range(k)]
        self.part_mask = [0] * k
        self.vcount = [[0] * self.n for _ in range(k)]
        self.vused = [0] * k

    def _planar_with(self, p: int, idx: int) -> bool:
        edges = self.part_edges[p]
        if len(edges) < 8:  # at most 8 edges after adding: always planar
            return True
        key = self.part_mask[p] | (1 << idx)
        hit = self.cache.get(key)
        if hit is not None:
            self.stats.cache_hits += 1
            return hit
        self.stats.planarity_calls += 1
        ok = _kernels.is_planar_edges(self.n, edges + [self.order[idx]])
        self.cache[key] = ok
        return ok

    def _place(self, p: int, idx: int) -> None:
        u, v = self.order[idx]
        self.part_edges[p].append((u, v))
        self.part_mask[p] |= 1 << idx
        vc = self.vcount[p]
        for x in (u, v):
            if vc[x] == 0:
                self.vused[p] += 1
            vc[x] += 1

    def _unplace(self, p: int, idx: int) -> None:
        u, v = self.order[idx]
        self.part_edges[p].pop()
        self.part_mask[p] &= ~(1 << idx)
        vc = self.vcount[p]
        for x in (u, v):
            vc[x] -= 1
            if vc[x] == 0:
                self.vused[p] -= 1

    def run(self, start: int = 0, opened: int = 0) -> bool:
        order, k = self.order, self.k
        total = len(order)
        if start == total:
            return True
        remaining = total - start
        free = sum(self.cap - len(self.part_edges[p]) for p in range(k))
        if free < remaining:
            return False
        u, v = order[start]
        for p in range(min(opened + 1, k)):
            self.stats.nodes += 1
            if self.stats.nodes > self.node_cap:
                raise SolverRefusal(f"node cap {self.node_cap} exceeded")
            vc = self.vcount[p]
            new_v = self.vused[p] + (vc[u] == 0) + (vc[v] == 0)
            ne = len(self.part_edges[p]) + 1
            if new_v >= 3 and ne > 3 * new_v - 6:
                continue
            if not self._planar_with(p, start):
                continue
            self._place(p, start)
            if self.run(start + 1, max(opened, p + 1)):
                return True
            self._unplace(p, start)
        return False

    def witness(self) -> list[list[Edge]]:
        return [sorted(p) for p in self.part_edges if p]


def _check_budget(g: Graph, max_edges: int) -> None:
    if g.n_edges > max_edges:
        raise SolverRefusal(f"{g.n_edges} edges exceeds the solver budget of {max_edges}")


def _prefixes(order_len: int, k: int, depth: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = [()]
    for _ in range(min(depth, order_len)):
        nxt = []
        for pre in out:
            opened = max(pre, default=-1) + 1
            nxt.extend(pre + (p,) for p in range(min(opened + 1, k)))
        out = nxt
    return out


def _solve_prefix(args: tuple) -> tuple[Optional[list[list[Edge]]], int, int, int]:
    g, k, prefix, node_cap = args
    stats = SolverStats()
    s = _Search(g, k, node_cap, stats, {})
    for idx, p in enumerate(prefix):
        u, v = s.order[idx]
        vc = s.vcount[p]
        new_v = s.vused[p] + (vc[u] == 0) + (vc[v] == 0)
        if new_v >= 3 and len(s.part_edges[p]) + 1 > 3 * new_v - 6:
            return None, stats.nodes, stats.planarity_calls, stats.cache_hits
        if not s._planar_with(p, idx):
            return None, stats.nodes, stats.planarity_calls, stats.cache_hits
        s._place(p, idx)
    opened = max(prefix, default=-1) + 1
    ok = s.run(len(prefix), opened)
    return (s.witness() if ok else None), stats.nodes, stats.planarity_calls, stats.cache_hits


def _search_k(
    g: Graph, k: int, node_cap: int, stats: SolverStats, parallel: bool, workers: Optional[int]
) -> Optional[list[list[Edge]]]:
    if k == 1:
        stats.planarity_calls += 1
        return [list(g.edges)] if _kernels.is_planar_edges(g.n_vertices, list(g.edges)) else None
    if not parallel:
        before = stats.nodes
        s = _Search(g, k, node_cap, stats, {})
        try:
            found = s.run()
        finally:
            stats.nodes_per_k[k] = stats.nodes - before
        return s.witness() if found else None
    workers = workers or os.cpu_count() or 1
    prefixes = _prefixes(g.n_edges, k, depth=6)
    tasks = [(g, k, pre, node_cap) for pre in prefixes]
    found_w = None
    nodes = 0
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # results are consumed in prefix order, so the witness matches the sequential one
        for w, n_nodes, calls, hits in pool.map(_solve_prefix, tasks):
            nodes += n_nodes
            stats.planarity_calls += calls
            stats.cache_hits += hits
            if w is not None and found_w is None:
                found_w = w
                break
    stats.nodes += nodes
    stats.nodes_per_k[k] = nodes
    return found_w


def thickness_exact(
    g: Graph,
    k_max: int = 6,
    *,
    max_edges: int = DEFAULT_MAX_EDGES,
    node_cap: Optional[int] = None,
    parallel: bool = False,
    workers: Optional[int] = None,
) -> SolverResult:
    """Smallest ``k <= k_max`` with a planar ``k``-decomposition, with witness.

    Raises ``SolverRefusal`` rather than returning an unproven answer.
    ``thickness is None`` means no decomposition with at most ``k_max`` parts.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    _check_budget(g, max_edges)
    cap = default_node_cap() if node_cap is None else node_cap
    stats = SolverStats()
    lb = density_lower_bound(g)
    if g.n_edges == 0:
        return SolverResult(1, [[]], stats, k_max, lb)
    for k in range(lb, k_max + 1):
        w = _search_k(g, k, cap, stats, parallel, workers)
        if w is not None:
            return SolverResult(k, w, stats, k_max, lb)
    return SolverResult(None, [], stats, k_max, lb)


def find_biplanar(
    g: Graph,
    *,
    max_edges: int = DEFAULT_MAX_EDGES,
    node_cap: Optional[int] = None,
    parallel: bool = False,
    workers: Optional[int] = None,
) -> Optional[list[list[Edge]]]:
    """Two planar parts covering ``E(g)``, or ``None`` if none exists."""
    _check_budget(g, max_edges)
    cap = default_node_cap() if node_cap is None else node_cap
    stats = SolverStats()
    if _kernels.is_planar_edges(g.n_vertices, list(g.edges)):
        return [list(g.edges), []]
    if density_lower_bound(g) > 2:
        return None
    return _search_k(g, 2, cap, stats, parallel, workers)
