"""Recursive biplanar decomposition of K8 x Pm, its verification and normalization.

Layer ``j`` carries the gadget pair (H1, H2) for odd ``j`` and (I1, I2) for
even ``j``.  The eight connector edges between layers ``j-1`` and ``j`` split
by clique index: for even ``j`` indices 1-4 join part 1 and 5-8 join part 2,
for odd ``j`` the other way round.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .graph import (
    Edge,
    Graph,
    canonical_edge,
    canonical_edges,
    decode_vertex,
    encode_vertex,
    kn_pm,
    parse_graph6,
    to_graph6,
)
from .planarity import Embedding, embedding_from_coordinates, has_common_face, is_planar_edges

N = 8


class GadgetKind(str, enum.Enum):
    H1 = "H1"
    H2 = "H2"
    I1 = "I1"
    I2 = "I2"


def _pairs(text: str) -> tuple[tuple[int, int], ...]:
    return tuple((int(p[0]), int(p[1])) for p in text.split())


# labels 1..8, read off the two drawings of each figure
H1_EDGES = _pairs("13 15 18 23 27 28 34 35 36 37 38 46 48 58 68 78")
H2_EDGES = _pairs("12 14 16 17 24 25 26 45 47 56 57 67")

RELABEL = {1: 1, 2: 2, 3: 4, 4: 3, 5: 5, 6: 6, 7: 8, 8: 7}  # (3 4)(7 8)

# Straight-line drawings: label -> (x, y).  Paths are the polylines of the
# drawings, listed as label sequences.
FIGURE_COORDS: dict[GadgetKind, dict[int, tuple[float, float]]] = {
    GadgetKind.H1: {1: (0, 4), 5: (0, 3), 6: (0, 2), 4: (0, 1), 7: (0, -1), 2: (0, -2), 3: (-2, 0), 8: (2, 0)},
    GadgetKind.H2: {
        3: (2, 5), 8: (3, 5), 5: (0, 5.196), 2: (-0.75, 2.165),
        4: (0.75, 2.165), 1: (0, 0.866), 6: (-3, 0), 7: (3, 0),
    },
    GadgetKind.I1: {
        4: (2, 5), 7: (3, 5), 5: (0, 5.196), 2: (-0.75, 2.165),
        3: (0.75, 2.165), 1: (0, 0.866), 6: (-3, 0), 8: (3, 0),
    },
    GadgetKind.I2: {1: (0, 4), 5: (0, 3), 6: (0, 2), 3: (0, 1), 8: (0, -1), 2: (0, -2), 4: (-2, 0), 7: (2, 0)},
}
_H_PATHS = [
    [(2, 0), (0, 4), (-2, 0), (0, 3), (2, 0), (0, 2), (-2, 0), (0, 1), (2, 0), (-2, 0), (0, -1), (2, 0), (0, -2), (-2, 0)],
    [(0, 4), (0, 3)],
    [(0, 2), (0, 1)],
    [(0, -1), (0, -2)],
]
_TRI_PATH = [
    [(0, 5.196), (-3, 0), (3, 0), (0, 5.196), (-0.75, 2.165), (-3, 0), (0, 0.866), (-0.75, 2.165),
     (0.75, 2.165), (0, 0.866), (3, 0), (0.75, 2.165), (0, 5.196)],
]
FIGURE_PATHS: dict[GadgetKind, list[list[tuple[float, float]]]] = {
    GadgetKind.H1: _H_PATHS,
    GadgetKind.H2: _TRI_PATH,
    GadgetKind.I1: _TRI_PATH,
    GadgetKind.I2: _H_PATHS,
}


def edges_from_figure(kind: GadgetKind) -> list[Edge]:
    """Edge list (labels 1..8) traced from the drawing polylines."""
    at = {xy: label for label, xy in FIGURE_COORDS[kind].items()}
    edges = set()
    for path in FIGURE_PATHS[kind]:
        for a, b in zip(path, path[1:]):
            edges.add(canonical_edge(at[a], at[b]))
    return sorted(edges)


def gadget_edges(kind: GadgetKind | str) -> list[Edge]:
    """Gadget edges over labels 1..8, sorted."""
    kind = GadgetKind(kind.upper() if isinstance(kind, str) else kind)
    if kind is GadgetKind.H1:
        return sorted(H1_EDGES)
    if kind is GadgetKind.H2:
        return sorted(H2_EDGES)
    base = H2_EDGES if kind is GadgetKind.I1 else H1_EDGES
    return sorted(canonical_edge(RELABEL[a], RELABEL[b]) for a, b in base)


def gadget_graph(kind: GadgetKind | str) -> Graph:
    """The gadget on vertex ids 0..7 (label minus one)."""
    return Graph(N, ((a - 1, b - 1) for a, b in gadget_edges(kind)))


def gadget_embedding(kind: GadgetKind | str) -> Embedding:
    """Embedding read off the drawing; isolated vertices sit in the outer face."""
    kind = GadgetKind(kind.upper() if isinstance(kind, str) else kind)
    coords = {label - 1: xy for label, xy in FIGURE_COORDS[kind].items()}
    return embedding_from_coordinates(gadget_graph(kind), coords)


def layer_edges(kind: GadgetKind, layer: int) -> list[Edge]:
    return [
        canonical_edge(encode_vertex(a, layer, N), encode_vertex(b, layer, N))
        for a, b in gadget_edges(kind)
    ]


def connector_edges(layer: int, indices: Iterable[int]) -> list[Edge]:
    """Edges ``u_i^{layer-1} u_i^{layer}`` for the given clique indices."""
    return [(encode_vertex(i, layer - 1, N), encode_vertex(i, layer, N)) for i in indices]


LOW = (1, 2, 3, 4)
HIGH = (5, 6, 7, 8)


@dataclass(frozen=True)
class BiplanarDecomposition:
    m: int
    part1: tuple[Edge, ...]
    part2: tuple[Edge, ...]

    @property
    def n_vertices(self) -> int:
        return N * self.m

    @property
    def parts(self) -> list[tuple[Edge, ...]]:
        return [self.part1, self.part2]

    def graph(self) -> Graph:
        return kn_pm(N, self.m)

    def to_dict(self) -> dict:
        return decomposition_to_dict(self.parts, n=N, m=self.m)


def build_decomposition(m: int) -> BiplanarDecomposition:
    if m < 1:
        raise ValueError("m must be >= 1")
    part1 = layer_edges(GadgetKind.H1, 1)
    part2 = layer_edges(GadgetKind.H2, 1)
    for j in range(2, m + 1):
        if j % 2 == 0:
            part1 += layer_edges(GadgetKind.I1, j) + connector_edges(j, LOW)
            part2 += layer_edges(GadgetKind.I2, j) + connector_edges(j, HIGH)
        else:
            part1 += layer_edges(GadgetKind.H1, j) + connector_edges(j, HIGH)
            part2 += layer_edges(GadgetKind.H2, j) + connector_edges(j, LOW)
    return BiplanarDecomposition(m, tuple(sorted(part1)), tuple(sorted(part2)))


def outer_face_labels(m: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Clique indices on layer ``m`` that bound the outer face of each part."""
    if m % 2 == 0:
        return (5, 6, 8, 7), (1, 4, 2, 7)
    return (1, 3, 2, 8), (5, 6, 7, 8)


def outer_faces_hold(dec: BiplanarDecomposition) -> tuple[bool, bool]:
    """Apex test: the named top-layer vertices of each part share a face."""
    out = []
    for part, labels in zip(dec.parts, outer_face_labels(dec.m)):
        vs = [encode_vertex(i, dec.m, N) for i in labels]
        out.append(has_common_face(dec.n_vertices, part, vs))
    return out[0], out[1]


# --- verification ----------------------------------------------------------------


@dataclass
class DecompositionReport:
    is_partition: bool
    parts_planar: list[bool]
    missing_edges: list[Edge] = field(default_factory=list)
    duplicated_edges: list[Edge] = field(default_factory=list)
    foreign_edges: list[Edge] = field(default_factory=list)
    part_sizes: list[int] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return self.is_partition and all(self.parts_planar)

    @property
    def thickness_upper_witnessed(self) -> Optional[int]:
        return len(self.parts_planar) if self.valid else None

    def to_dict(self) -> dict:
        return {
            "is_partition": self.is_partition,
            "parts_planar": self.parts_planar,
            "part_sizes": self.part_sizes,
            "missing_edges": [list(e) for e in self.missing_edges],
            "duplicated_edges": [list(e) for e in self.duplicated_edges],
            "foreign_edges": [list(e) for e in self.foreign_edges],
            "valid": self.valid,
            "thickness_upper_witnessed": self.thickness_upper_witnessed,
        }


def verify_decomposition(g: Graph, parts: Sequence[Iterable[tuple[int, int]]]) -> DecompositionReport:
    seen: dict[Edge, int] = {}
    canon_parts = []
    dup = set()
    for part in parts:
        cp = []
        for u, v in part:
            if not (0 <= u < g.n_vertices and 0 <= v < g.n_vertices) or u == v:
                raise ValueError(f"edge {(u, v)} is not over V(g)")
            e = canonical_edge(u, v)
            if e in seen:
                dup.add(e)
            seen[e] = seen.get(e, 0) + 1
            cp.append(e)
        canon_parts.append(cp)
    es = g.edge_set
    missing = sorted(es - seen.keys())
    foreign = sorted(seen.keys() - es)
    planar = [is_planar_edges(g.n_vertices, sorted(set(cp))) for cp in canon_parts]
    return DecompositionReport(
        is_partition=not (missing or foreign or dup),
        parts_planar=planar,
        missing_edges=missing,
        duplicated_edges=sorted(dup),
        foreign_edges=foreign,
        part_sizes=[len(cp) for cp in canon_parts],
    )


# --- normalization -----------------------------------------------------------------


class NormalizationError(ValueError):
    pass


def normalize_decomposition(
    parts: Sequence[Iterable[tuple[int, int]]], n_vertices: Optional[int] = None
) -> list[list[Edge]]:
    """Move edges so every part has at least two, keeping every part planar.

    Each move takes the lexicographically smallest edge of the largest part
    (lowest index on ties) that keeps the receiving part planar.  Parts
    already holding two or more edges are returned unchanged.
    """
    work = [canonical_edges(p) for p in parts]
    flat = [e for p in work for e in p]
    if len(set(flat)) != len(flat):
        raise NormalizationError("parts are not edge-disjoint")
    if len(flat) < 2 * len(work):
        raise NormalizationError(f"{len(flat)} edges cannot fill {len(work)} parts with two each")
    if n_vertices is None:
        n_vertices = 1 + max((v for e in flat for v in e), default=-1)
    while True:
        small = [i for i, p in enumerate(work) if len(p) < 2]
        if not small:
            return work
        r = small[0]
        donors = sorted(
            (i for i, p in enumerate(work) if len(p) > 2),
            key=lambda i: (-len(work[i]), i),
        )
        for d in donors:
            move = next(
                (e for e in work[d] if is_planar_edges(n_vertices, sorted(work[r] + [e]))),
                None,
            )
            if move is not None:
                work[d].remove(move)
                work[r] = sorted(work[r] + [move])
                break
        else:
            raise NormalizationError("no edge move keeps the receiving part planar")


# --- file formats ------------------------------------------------------------------


def decomposition_to_dict(
    parts: Sequence[Iterable[tuple[int, int]]],
    n: Optional[int] = None,
    m: Optional[int] = None,
    host: Optional[Graph] = None,
) -> dict:
    """``{"n", "m", "parts"}`` for ``K_n x P_m``, else ``{"graph6", "parts"}``."""
    out: dict = {}
    if n is not None and m is not None:
        out["n"] = n
        out["m"] = m
    elif host is not None:
        out["n_vertices"] = host.n_vertices
        out["graph6"] = to_graph6(host)
    else:
        raise ValueError("need n and m, or a host graph")
    out["parts"] = [[list(e) for e in canonical_edges(p)] for p in parts]
    return out


def dump_decomposition(data: Mapping) -> str:
    return json.dumps(data, separators=(",", ":"), sort_keys=False) + "\n"


def load_decomposition(data: Mapping) -> tuple[Graph, list[list[Edge]]]:
    """Host graph and canonical parts from a decomposition dict."""
    if "n" in data and "m" in data:
        host = kn_pm(int(data["n"]), int(data["m"]))
    elif "graph6" in data:
        host = parse_graph6(data["graph6"])
    else:
        raise ValueError("decomposition needs either n and m or graph6")
    parts = [[canonical_edge(int(a), int(b)) for a, b in p] for p in data["parts"]]
    return host, parts


_COLORS = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e"]


def to_dot(n_vertices: int, parts: Sequence[Iterable[tuple[int, int]]], n: int = N, name: str = "G") -> str:
    """DOT for the union of the parts, one edge colour per part."""
    lines = [f"graph {name} {{", "  node [shape=circle, fontsize=10];"]
    for v in range(n_vertices):
        k, layer = decode_vertex(v, n)
        lines.append(f'  {v} [label="{k},{layer}"];')
    for idx, part in enumerate(parts):
        color = _COLORS[idx % len(_COLORS)]
        for u, v in canonical_edges(part):
            lines.append(f'  {u} -- {v} [color="{color}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def parts_to_graph6(n_vertices: int, parts: Sequence[Iterable[tuple[int, int]]]) -> str:
    return "".join(to_graph6(Graph(n_vertices, p)) + "\n" for p in parts)
