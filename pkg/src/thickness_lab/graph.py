"""Simple undirected graphs, the K_n / P_m generators and Cartesian products.

Vertices are dense integer ids ``0..n_vertices-1``.  In a product
``K_n x P_m`` the vertex ``u_i^j`` (clique index ``i`` in ``1..n``, layer
``j`` in ``1..m``) has id ``(j - 1) * n + (i - 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, NamedTuple

Edge = tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def canonical_edges(edges: Iterable[Iterable[int]]) -> list[Edge]:
    """Sorted list of ``(min, max)`` pairs; rejects loops."""
    out = set()
    for e in edges:
        u, v = e
        u, v = int(u), int(v)
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        out.add(canonical_edge(u, v))
    return sorted(out)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``edges`` is a sorted tuple of ``(min, max)`` pairs and ``adjacency`` holds
    a sorted neighbour tuple per vertex.
    """

    n_vertices: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    def __init__(self, n_vertices: int, edges: Iterable[Iterable[int]] = ()) -> None:
        if n_vertices < 0:
            raise ValueError("n_vertices must be non-negative")
        es = []
        seen = set()
        for e in edges:
            u, v = e
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise ValueError(f"edge {(u, v)} out of range for {n_vertices} vertices")
            ce = canonical_edge(u, v)
            if ce in seen:
                raise ValueError(f"multi-edge {ce}")
            seen.add(ce)
            es.append(ce)
        es.sort()
        adj: list[list[int]] = [[] for _ in range(n_vertices)]
        for u, v in es:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "n_vertices", n_vertices)
        object.__setattr__(self, "edges", tuple(es))
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edge_set

    @property
    def edge_set(self) -> frozenset[Edge]:
        try:
            return self.__dict__["_edge_set"]
        except KeyError:
            s = frozenset(self.edges)
            object.__setattr__(self, "_edge_set", s)
            return s

    def edge_subgraph(self, edges: Iterable[Iterable[int]]) -> "Graph":
        """Spanning subgraph on the same vertex set."""
        return Graph(self.n_vertices, edges)

    def components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n_vertices
        comps = []
        for s in range(self.n_vertices):
            if seen[s]:
                continue
            seen[s] = True
            stack = [s]
            comp = []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adjacency[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps


class ProductVertex(NamedTuple):
    k_index: int  # 1..n
    layer: int  # 1..m


def encode_vertex(k_index: int, layer: int, n: int) -> int:
    if not 1 <= k_index <= n or layer < 1:
        raise ValueError(f"bad product vertex ({k_index}, {layer}) for n={n}")
    return (layer - 1) * n + (k_index - 1)


def decode_vertex(vid: int, n: int) -> ProductVertex:
    layer, k = divmod(vid, n)
    return ProductVertex(k + 1, layer + 1)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete_graph needs n >= 1")
    return Graph(n, combinations(range(n), 2))


def path_graph(m: int) -> Graph:
    if m < 1:
        raise ValueError("path_graph needs m >= 1")
    return Graph(m, ((i, i + 1) for i in range(m - 1)))


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """``g x h`` with vertex ``(u, v)`` encoded as ``v * |V(g)| + u``."""
    if g.n_vertices == 0 or h.n_vertices == 0:
        raise ValueError("cartesian_product needs nonempty factors")
    n = g.n_vertices
    edges = []
    for v in range(h.n_vertices):
        off = v * n
        edges.extend((off + a, off + b) for a, b in g.edges)
    for a, b in h.edges:
        edges.extend((a * n + u, b * n + u) for u in range(n))
    return Graph(n * h.n_vertices, edges)


def kn_pm(n: int, m: int) -> Graph:
    return cartesian_product(complete_graph(n), path_graph(m))


def path_edges(n: int, m: int) -> list[Edge]:
    """Inter-layer (path) edges of ``K_n x P_m``."""
    return [(j * n + i, (j + 1) * n + i) for j in range(m - 1) for i in range(n)]


# --- edge-list text -------------------------------------------------------


def to_edge_list(g: Graph, header: bool = False) -> str:
    lines = [f"# vertices {g.n_vertices}"] if header else []
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, n_vertices: int | None = None) -> Graph:
    """Parse ``u v`` lines; ``#`` starts a comment.

    A ``# vertices N`` header fixes the vertex count, otherwise it is
    ``max id + 1`` (or ``n_vertices`` if given).
    """
    edges = []
    declared = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == "vertices":
                declared = int(parts[1])
            continue
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        edges.append((int(parts[0]), int(parts[1])))
    n = n_vertices if n_vertices is not None else declared
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph(n, edges)


# --- graph6 ---------------------------------------------------------------


def _g6_size(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    n = g.n_vertices
    es = g.edge_set
    bits = [1 if (i, j) in es else 0 for j in range(1, n) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))
    body = "".join(
        chr(63 + int("".join(map(str, bits[k : k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _g6_size(n) + body


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    data = [ord(c) - 63 for c in s]
    if not data or any(not 0 <= x <= 63 for x in data):
        raise ValueError("invalid graph6 string")
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) > 1 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    else:
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        pos = 8
    need = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != (need + 5) // 6:
        raise ValueError(f"graph6 body has {len(body)} bytes, expected {(need + 5) // 6}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def read_graph(text: str) -> Graph:
    """Sniff graph6 versus edge-list text."""
    stripped = text.strip()
    if stripped.startswith(">>graph6<<") or (
        stripped and "\n" not in stripped and " " not in stripped and not stripped.startswith("#")
    ):
        return parse_graph6(stripped)
    return parse_edge_list(text)
