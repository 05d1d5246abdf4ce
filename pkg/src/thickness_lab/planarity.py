"""Planarity certificates, rotation-system embeddings, faces and the face census.

Rotation convention: ``rotation[v]`` is the cyclic order of neighbours of
``v``; the face walk after dart ``(u, v)`` continues with ``(v, w)`` where
``w`` follows ``u`` in ``rotation[v]``.  For a straight-line drawing with
counterclockwise rotations this traces the outer face counterclockwise and
every bounded face clockwise.

A disconnected plane graph is the drawing of its first component (the one
holding the smallest vertex id) with every other component placed in some
face of the aggregate; by default that is the first component's outer face.
A face that hosts other components has several boundary walks and its length
is their sum.  An isolated vertex is a single walk of length 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from . import _kernels
from ._lr import adjacency_from_edges, lr_planarity
from .bounds import face_upper_bound
from .graph import Edge, Graph, canonical_edge, canonical_edges

Dart = tuple[int, int]


class EmbeddingError(ValueError):
    """Rotation system or placement data is structurally inconsistent."""


class CensusPreconditionError(ValueError):
    """Some part has fewer than two edges; normalize the decomposition first."""


@dataclass(frozen=True)
class Embedding:
    """Rotation system for a (possibly disconnected) planar graph.

    ``outer`` maps a component (keyed by its smallest vertex) to a dart on its
    outer face; components without an entry get the face of largest length
    (ties: smallest dart).  ``component_placement`` maps a non-first component
    to a dart of the face that hosts it; missing or ``None`` means the outer
    face of the first component.
    """

    graph: Graph
    rotation: tuple[tuple[int, ...], ...]
    outer: Mapping[int, Dart] = field(default_factory=dict)
    component_placement: Mapping[int, Optional[Dart]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        g = self.graph
        if len(self.rotation) != g.n_vertices:
            raise EmbeddingError("rotation must list every vertex")
        for v, rot in enumerate(self.rotation):
            if len(set(rot)) != len(rot) or sorted(rot) != list(g.adjacency[v]):
                raise EmbeddingError(f"rotation at {v} does not match its incident edges")


@dataclass(frozen=True)
class BoundaryWalk:
    vertices: tuple[int, ...]
    darts: tuple[Dart, ...]

    @property
    def length(self) -> int:
        return len(self.darts)


@dataclass(frozen=True)
class Face:
    boundary_walks: tuple[BoundaryWalk, ...]

    @property
    def total_length(self) -> int:
        return sum(w.length for w in self.boundary_walks)

    @property
    def is_2cell(self) -> bool:
        return len(self.boundary_walks) == 1

    def edges(self) -> set[Edge]:
        return {canonical_edge(*d) for w in self.boundary_walks for d in w.darts}


@dataclass
class PlanarityCertificate:
    planar: bool
    embedding: Optional[Embedding] = None
    witness: Optional[tuple[Edge, ...]] = None
    witness_kind: Optional[str] = None  # "K5" or "K3,3"

    def __bool__(self) -> bool:
        return self.planar

    def to_dict(self) -> dict:
        if self.planar:
            assert self.embedding is not None
            return {"kind": "embedding", "embedding": embedding_to_dict(self.embedding)}
        return {
            "kind": "kuratowski",
            "subdivision_of": self.witness_kind,
            "edges": [list(e) for e in self.witness or ()],
        }


# --- planarity ----------------------------------------------------------------


def is_planar_edges(n_vertices: int, edges: Sequence[tuple[int, int]]) -> bool:
    """Verdict only; uses the compiled kernel when available."""
    return _kernels.is_planar_edges(n_vertices, list(edges))


def is_planar(g: Graph) -> PlanarityCertificate:
    rot = lr_planarity(g.n_vertices, g.adjacency)
    if rot is not None:
        return PlanarityCertificate(True, embedding=Embedding(g, tuple(map(tuple, rot))))
    witness = kuratowski_subgraph(g)
    return PlanarityCertificate(False, witness=witness, witness_kind=classify_kuratowski(witness))


def kuratowski_subgraph(g: Graph) -> tuple[Edge, ...]:
    """Edge-minimal nonplanar subgraph, found by greedy deletion.

    Every edge-minimal nonplanar graph is a subdivision of K5 or K3,3 (plus
    isolated vertices), so the result is a Kuratowski witness.
    """
    n = g.n_vertices
    if is_planar_edges(n, g.edges):
        raise ValueError("graph is planar")
    kept = list(g.edges)
    i = 0
    while i < len(kept):
        trial = kept[:i] + kept[i + 1 :]
        if is_planar_edges(n, trial):
            i += 1
        else:
            kept = trial
    return tuple(kept)


def classify_kuratowski(edges: Iterable[tuple[int, int]]) -> Optional[str]:
    """``"K5"`` / ``"K3,3"`` if the edges form a subdivision of it, else ``None``.

    Works purely on the degree structure: suppress degree-2 vertices and
    compare the branch multigraph against K5 and K3,3.
    """
    es = canonical_edges(edges)
    adj: dict[int, list[int]] = {}
    for u, v in es:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if not adj:
        return None
    if any(len(nb) not in (2, 3, 4) for nb in adj.values()):
        return None
    branch = sorted(v for v, nb in adj.items() if len(nb) != 2)
    used: set[Edge] = set()
    links: list[Edge] = []
    for b in branch:
        for nxt in adj[b]:
            if canonical_edge(b, nxt) in used:
                continue
            prev, cur = b, nxt
            used.add(canonical_edge(prev, cur))
            while len(adj[cur]) == 2:
                a, c = adj[cur]
                prev, cur = cur, (c if a == prev else a)
                used.add(canonical_edge(prev, cur))
            if cur == b:
                return None
            links.append(canonical_edge(b, cur))
    if len(used) != len(es):
        return None  # a cycle of degree-2 vertices
    link_set = set(links)
    if len(link_set) != len(links):
        return None
    degs = {b: len(adj[b]) for b in branch}
    if len(branch) == 5 and all(d == 4 for d in degs.values()) and len(link_set) == 10:
        return "K5"
    if len(branch) == 6 and all(d == 3 for d in degs.values()) and len(link_set) == 9:
        side = {branch[0]: 0}
        stack = [branch[0]]
        nbrs: dict[int, list[int]] = {b: [] for b in branch}
        for u, v in link_set:
            nbrs[u].append(v)
            nbrs[v].append(u)
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y not in side:
                    side[y] = 1 - side[x]
                    stack.append(y)
                elif side[y] == side[x]:
                    return None
        if len(side) == 6 and sum(side.values()) == 3:
            return "K3,3"
    return None


def has_common_face(n_vertices: int, edges: Sequence[tuple[int, int]], vertices: Iterable[int]) -> bool:
    """Whether some planar embedding puts all ``vertices`` on one face.

    Tested by joining a new apex vertex to each of them and checking planarity.
    """
    apex = n_vertices
    extra = [(v, apex) for v in sorted(set(vertices))]
    return is_planar_edges(n_vertices + 1, list(edges) + extra)


# --- embeddings and faces -------------------------------------------------------


def embedding_from_coordinates(
    g: Graph, coords: Mapping[int, tuple[float, float]], **kwargs
) -> Embedding:
    """Counterclockwise rotations read off a straight-line drawing.

    The outer face of each component is the walk with the largest signed
    area, which is the unbounded face under the tracing convention.
    """
    rot = []
    for v in range(g.n_vertices):
        x0, y0 = coords[v]
        rot.append(
            tuple(
                sorted(
                    g.adjacency[v],
                    key=lambda w: math.atan2(coords[w][1] - y0, coords[w][0] - x0),
                )
            )
        )
    base = Embedding(g, tuple(rot))
    outer = {}
    for comp, walks in _component_walks(base):
        if walks[0].darts:
            best = max(walks, key=lambda w: _signed_area(w, coords))
            outer[comp] = best.darts[0]
    outer.update(kwargs.pop("outer", {}))
    return Embedding(g, tuple(rot), outer=outer, **kwargs)


def _signed_area(w: BoundaryWalk, coords: Mapping[int, tuple[float, float]]) -> float:
    a = 0.0
    for u, v in w.darts:
        (x1, y1), (x2, y2) = coords[u], coords[v]
        a += x1 * y2 - x2 * y1
    return a / 2


def _component_walks(e: Embedding) -> list[tuple[int, list[BoundaryWalk]]]:
    """Boundary walks grouped by component, components keyed by min vertex."""
    g = e.graph
    rot = e.rotation
    pos = [{w: i for i, w in enumerate(r)} for r in rot]
    seen: set[Dart] = set()
    out = []
    for comp in g.components():
        walks = []
        if len(comp) == 1 and not rot[comp[0]]:
            walks.append(BoundaryWalk((comp[0],), ()))
        for u in comp:
            for v in rot[u]:
                if (u, v) in seen:
                    continue
                darts = []
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    darts.append((a, b))
                    r = rot[b]
                    a, b = b, r[(pos[b][a] + 1) % len(r)]
                if (a, b) != (u, v):
                    raise EmbeddingError("face walk does not close up")
                walks.append(BoundaryWalk(tuple(d[0] for d in darts), tuple(darts)))
        nv = len(comp)
        ne = sum(len(rot[x]) for x in comp) // 2
        if nv - ne + len(walks) != 2:
            raise EmbeddingError(
                f"component at {comp[0]}: V - E + F = {nv - ne + len(walks)}, rotation is not planar"
            )
        out.append((comp[0], walks))
    return out


def _default_outer(ws: Sequence[BoundaryWalk]) -> BoundaryWalk:
    # longest walk, ties broken by smallest dart
    return min(ws, key=lambda w: (-w.length, _dart_key(w)))


def _dart_key(w: BoundaryWalk) -> tuple[int, int]:
    return min(w.darts) if w.darts else (w.vertices[0], -1)


def _face_groups(e: Embedding) -> tuple[list[list[BoundaryWalk]], BoundaryWalk]:
    """Walks grouped into faces, plus the first component's outer walk."""
    comp_walks = _component_walks(e)
    walks: list[BoundaryWalk] = []
    walk_comp: list[int] = []
    dart_walk: dict[Dart, int] = {}
    outer_walk: dict[int, int] = {}
    for comp, ws in comp_walks:
        start = len(walks)
        for w in ws:
            for d in w.darts:
                dart_walk[d] = len(walks)
            walks.append(w)
            walk_comp.append(comp)
        if comp in e.outer:
            d = tuple(e.outer[comp])
            if d not in dart_walk or walk_comp[dart_walk[d]] != comp:
                raise EmbeddingError(f"outer dart {d} does not belong to component {comp}")
            outer_walk[comp] = dart_walk[d]
        else:
            outer_walk[comp] = start + ws.index(_default_outer(ws))

    parent = list(range(len(walks)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = [c for c, _ in comp_walks]
    host_comp: dict[int, int] = {}
    for comp in comps[1:]:
        ref = e.component_placement.get(comp)
        if ref is None:
            host = outer_walk[comps[0]]
        else:
            d = tuple(ref)
            if d not in dart_walk:
                raise EmbeddingError(f"placement dart {d} not in graph")
            host = dart_walk[d]
            if walk_comp[host] == comp:
                raise EmbeddingError(f"component {comp} placed inside itself")
        host_comp[comp] = walk_comp[host]
        parent[find(outer_walk[comp])] = find(host)
    for comp in comps[1:]:
        seen = {comp}
        c = comp
        while c != comps[0]:
            c = host_comp[c]
            if c in seen:
                raise EmbeddingError("component placement is cyclic")
            seen.add(c)

    groups: dict[int, list[int]] = {}
    for i in range(len(walks)):
        groups.setdefault(find(i), []).append(i)
    faces_ = [
        sorted((walks[i] for i in members), key=lambda w: min(w.vertices))
        for members in sorted(groups.values(), key=min)
    ]
    first_outer = walks[outer_walk[comps[0]]] if comps else None
    return faces_, first_outer  # type: ignore[return-value]


def faces(e: Embedding) -> list[Face]:
    """Faces of the aggregate plane graph; ``|V| - |E| + |F| = 1 + #components``."""
    groups, _ = _face_groups(e)
    return [Face(tuple(ws)) for ws in groups]


def outer_face(e: Embedding) -> Face:
    """The face holding the first component's outer walk."""
    groups, marker = _face_groups(e)
    for ws in groups:
        if any(w is marker for w in ws):
            return Face(tuple(ws))
    raise AssertionError("outer walk lost")


# --- face census ---------------------------------------------------------------


@dataclass
class FaceCensus:
    n: int
    total_faces: int
    path_faces: int
    face_lengths: list[int]
    path_face_lengths: list[int]
    face_bound: int
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "total_faces": self.total_faces,
            "path_faces": self.path_faces,
            "face_bound": self.face_bound,
            "face_lengths": self.face_lengths,
            "path_face_lengths": self.path_face_lengths,
            "checks": self.checks,
            "ok": self.ok,
        }


def face_census(parts: Sequence[Embedding], path_edges: Iterable[tuple[int, int]]) -> FaceCensus:
    """Face statistics of a planar decomposition of ``K_n x P_2``.

    ``path_edges`` are the ``n`` edges between the two copies of ``K_n``.
    Faces are counted over all parts; a path face is one whose boundary walks
    use a path edge.
    """
    pe = set(canonical_edges(path_edges))
    n = len(pe)
    for i, emb in enumerate(parts):
        if emb.graph.n_edges < 2:
            raise CensusPreconditionError(
                f"part {i} has {emb.graph.n_edges} edge(s); apply normalization first"
            )
    lengths: list[int] = []
    path_lengths: list[int] = []
    for emb in parts:
        for f in faces(emb):
            lengths.append(f.total_length)
            if f.edges() & pe:
                path_lengths.append(f.total_length)
    bound = face_upper_bound(n) if n >= 2 else 0
    checks = {
        "total_faces_le_bound": len(lengths) <= bound,
        "path_faces_le_n": len(path_lengths) <= n,
        "path_face_lengths_ge_4": all(x >= 4 for x in path_lengths),
        "face_lengths_ge_3": all(x >= 3 for x in lengths),
    }
    return FaceCensus(n, len(lengths), len(path_lengths), lengths, path_lengths, bound, checks)


# --- serialization ---------------------------------------------------------------


def embedding_to_dict(e: Embedding) -> dict:
    out: dict = {
        "n_vertices": e.graph.n_vertices,
        "rotation": {str(v): list(r) for v, r in enumerate(e.rotation)},
    }
    if e.outer:
        out["outer"] = {str(k): list(d) for k, d in sorted(e.outer.items())}
    if e.component_placement:
        out["component_placement"] = {
            str(k): (list(d) if d is not None else None) for k, d in sorted(e.component_placement.items())
        }
    return out


def embedding_from_dict(data: Mapping) -> Embedding:
    """Accepts the wrapped form above or a bare ``{vertex: [cyclic nbrs]}`` map."""
    rot_map = data["rotation"] if "rotation" in data else data
    rot_map = {int(k): [int(x) for x in v] for k, v in rot_map.items()}
    n = int(data.get("n_vertices", 1 + max(rot_map, default=-1))) if "rotation" in data else 1 + max(
        rot_map, default=-1
    )
    edges = {canonical_edge(v, w) for v, nb in rot_map.items() for w in nb}
    g = Graph(n, edges)
    rotation = tuple(tuple(rot_map.get(v, ())) for v in range(n))
    outer = {int(k): tuple(d) for k, d in data.get("outer", {}).items()} if "rotation" in data else {}
    placement = (
        {int(k): (tuple(d) if d is not None else None) for k, d in data.get("component_placement", {}).items()}
        if "rotation" in data
        else {}
    )
    return Embedding(g, rotation, outer=outer, component_placement=placement)


def embed_edges(n_vertices: int, edges: Iterable[tuple[int, int]]) -> Embedding:
    """Embedding of the spanning subgraph; raises ``ValueError`` if nonplanar."""
    g = Graph(n_vertices, edges)
    rot = lr_planarity(n_vertices, adjacency_from_edges(n_vertices, g.edges))
    if rot is None:
        raise ValueError("edge set is not planar")
    return Embedding(g, tuple(map(tuple, rot)))
