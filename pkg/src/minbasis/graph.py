"""Weighted undirected multigraphs with stable edge indexing.

Edges carry non-negative integer weights and are identified by their
position in construction order; parallel edges are legal and stay
distinguishable, self-loops are rejected.  Path and cycle weights are
compared with an exact tie-breaking key so that between any two vertices
exactly one path is shortest: conceptually edge ``i`` picks up an
infinitesimal weight bonus proportional to ``2**i``, which in practice
means comparing ``(weight sum, edge bit set)`` pairs with the bit set
read as an integer.  Distinct edge sets therefore never compare equal,
and everything downstream is deterministic.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from .errors import ParseError
from .gf2 import Gf2Vector

#: Largest accepted edge weight.  Sums never overflow (Python integers are
#: unbounded); the cap just keeps inputs inside a sane 64-bit range.
MAX_WEIGHT = 2**63 - 1


class Edge(NamedTuple):
    u: int
    v: int
    w: int


@dataclass(frozen=True, order=True)
class PerturbedWeight:
    """Exact tie-broken weight of an edge set: (weight sum, edge bit set)."""

    base: int
    tie: int

    def __add__(self, other: "PerturbedWeight") -> "PerturbedWeight":
        if not isinstance(other, PerturbedWeight):
            return NotImplemented
        # Concatenation is only defined for edge-disjoint sets.
        if self.tie & other.tie:
            raise ValueError("edge sets overlap; concatenation undefined")
        return PerturbedWeight(self.base + other.base, self.tie | other.tie)

    @classmethod
    def zero(cls) -> "PerturbedWeight":
        return cls(0, 0)


class Graph:
    """Undirected multigraph on vertices ``0..n-1`` with indexed edges."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        es: list[Edge] = []
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v, w in edges:
            idx = len(es)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {idx}: endpoint out of range")
            if u == v:
                raise ValueError(f"edge {idx}: self-loops are not allowed")
            if not 0 <= w <= MAX_WEIGHT:
                raise ValueError(f"edge {idx}: weight must be in [0, 2^63-1]")
            es.append(Edge(u, v, w))
            adj[u].append(idx)
            adj[v].append(idx)
        self.edges: tuple[Edge, ...] = tuple(es)
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(a) for a in adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def incident(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def other_end(self, edge_index: int, v: int) -> int:
        e = self.edges[edge_index]
        if v == e.u:
            return e.v
        if v == e.v:
            return e.u
        raise ValueError(f"vertex {v} not an endpoint of edge {edge_index}")

    def mask_weight(self, mask: int) -> int:
        """Sum of weights of the edges in a bit mask."""
        total = 0
        while mask:
            low = mask & -mask
            total += self.edges[low.bit_length() - 1].w
            mask ^= low
        return total

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Cycle:
    """An even-degree edge set with its weight.

    Members of the cycle space in general; elementary exactly when every
    touched vertex has degree 2 and the edges are connected.  The weight
    tie key equals the edge-set bits.
    """

    edge_set: Gf2Vector
    weight: PerturbedWeight
    vertex_count: int

    @property
    def mask(self) -> int:
        return self.edge_set.bits

    def edge_indices(self) -> tuple[int, ...]:
        return self.edge_set.indices()

    def edge_count(self) -> int:
        return self.edge_set.popcount()


def cycle_from_mask(g: Graph, mask: int) -> Cycle:
    """Build a Cycle from an edge bit mask, checking even degrees."""
    if mask < 0 or mask >> g.m:
        raise ValueError("edge mask out of range")
    degree: dict[int, int] = {}
    base = 0
    rest = mask
    while rest:
        low = rest & -rest
        e = g.edges[low.bit_length() - 1]
        base += e.w
        degree[e.u] = degree.get(e.u, 0) + 1
        degree[e.v] = degree.get(e.v, 0) + 1
        rest ^= low
    for v, d in degree.items():
        if d & 1:
            raise ValueError(f"vertex {v} has odd degree; not a cycle-space member")
    return Cycle(Gf2Vector(g.m, mask), PerturbedWeight(base, mask), len(degree))


def cycle_from_edges(g: Graph, indices: Iterable[int]) -> Cycle:
    mask = 0
    for i in indices:
        if not 0 <= i < g.m:
            raise ValueError(f"edge index {i} out of range")
        if mask >> i & 1:
            raise ValueError(f"edge index {i} repeated")
        mask |= 1 << i
    return cycle_from_mask(g, mask)


@dataclass
class SpTree:
    """Shortest-path tree under the tie-broken order.

    ``dist``, ``parent_edge`` and ``parent_vertex`` are None for
    unreachable vertices (and for the root's parent fields); ``order``
    lists reachable vertices in settle order, root first.
    """

    root: int
    dist: list[Optional[PerturbedWeight]]
    parent_edge: list[Optional[int]]
    parent_vertex: list[Optional[int]]
    order: list[int]

    def path_edges(self, v: int) -> list[int]:
        """Edge indices of the unique shortest path root -> v."""
        if self.dist[v] is None:
            raise ValueError(f"vertex {v} unreachable from root {self.root}")
        out = []
        while self.parent_edge[v] is not None:
            out.append(self.parent_edge[v])
            v = self.parent_vertex[v]
        out.reverse()
        return out


def dijkstra(g: Graph, root: int) -> SpTree:
    """Single-source shortest paths with exact tie-breaking.

    Deterministic for a fixed graph: all comparisons use the
    (weight, edge bit set) order, under which path keys are unique.
    """
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} out of range")
    dist: list[Optional[tuple[int, int]]] = [None] * g.n
    parent_edge: list[Optional[int]] = [None] * g.n
    parent_vertex: list[Optional[int]] = [None] * g.n
    order: list[int] = []
    dist[root] = (0, 0)
    heap: list[tuple[int, int, int]] = [(0, 0, root)]
    while heap:
        b, t, v = heapq.heappop(heap)
        if (b, t) != dist[v]:
            continue  # stale entry
        order.append(v)
        for e_idx in g.incident(v):
            e = g.edges[e_idx]
            u = e.v if v == e.u else e.u
            cand = (b + e.w, t | (1 << e_idx))
            if dist[u] is None or cand < dist[u]:
                dist[u] = cand
                parent_edge[u] = e_idx
                parent_vertex[u] = v
                heapq.heappush(heap, (cand[0], cand[1], u))
    return SpTree(
        root,
        [PerturbedWeight(*d) if d is not None else None for d in dist],
        parent_edge,
        parent_vertex,
        order,
    )


@dataclass
class AllPairs:
    """All shortest-path trees plus the pairwise distance table."""

    graph: Graph
    trees: list[SpTree]
    table: list[list[Optional[PerturbedWeight]]]


def apsp(g: Graph) -> AllPairs:
    """All-pairs shortest paths: one Dijkstra run per root."""
    trees = [dijkstra(g, r) for r in range(g.n)]
    table = [list(t.dist) for t in trees]
    return AllPairs(g, trees, table)


def component_labels(g: Graph) -> list[int]:
    """Connected-component label per vertex (labels are root vertex ids)."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in g.edges:
        ru, rv = find(e.u), find(e.v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    return [find(v) for v in range(g.n)]


def component_count(g: Graph) -> int:
    labels = component_labels(g)
    return len(set(labels))


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or component_count(g) == 1


def cyclomatic_number(g: Graph) -> int:
    """Dimension of the cycle space: m - n + (number of components)."""
    return g.m - g.n + component_count(g)


def spanning_forest(g: Graph) -> tuple[list[int], list[int]]:
    """Split edge indices into (tree, non-tree) by index-order union-find."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree: list[int] = []
    nontree: list[int] = []
    for idx, e in enumerate(g.edges):
        ru, rv = find(e.u), find(e.v)
        if ru == rv:
            nontree.append(idx)
        else:
            parent[max(ru, rv)] = min(ru, rv)
            tree.append(idx)
    return tree, nontree


def _forest_path_masks(g: Graph, tree_edges: list[int]) -> list[int]:
    """Per-vertex edge mask of the forest path from an arbitrary component root."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for e_idx in tree_edges:
        e = g.edges[e_idx]
        adj[e.u].append((e.v, e_idx))
        adj[e.v].append((e.u, e_idx))
    mask = [0] * g.n
    seen = [False] * g.n
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        while stack:
            v = stack.pop()
            for u, e_idx in adj[v]:
                if not seen[u]:
                    seen[u] = True
                    mask[u] = mask[v] | (1 << e_idx)
                    stack.append(u)
    return mask


def fundamental_cycles(g: Graph) -> list[Cycle]:
    """One cycle per non-tree edge of the index-order spanning forest.

    The cycle of non-tree edge e is e plus the forest path between its
    endpoints; together they form a basis of the cycle space.
    """
    tree, nontree = spanning_forest(g)
    pmask = _forest_path_masks(g, tree)
    out = []
    for e_idx in nontree:
        e = g.edges[e_idx]
        # XOR of the two root paths leaves exactly the tree path u..v.
        out.append(cycle_from_mask(g, pmask[e.u] ^ pmask[e.v] | (1 << e_idx)))
    return out


# ---------------------------------------------------------------------------
# Text format: `graph <n> <m>` header, then `e <u> <v> <w>` lines.

def parse_graph(text: str) -> Graph:
    """Parse the graph text format; errors carry 1-based line numbers."""
    n = None
    m_declared = None
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if fields[0] != "graph" or len(fields) != 3:
                raise ParseError(f"line {lineno}: expected header 'graph <n> <m>'")
            try:
                n, m_declared = int(fields[1]), int(fields[2])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer header field") from None
            if n < 0 or m_declared < 0:
                raise ParseError(f"line {lineno}: negative count in header")
            continue
        if fields[0] != "e" or len(fields) != 4:
            raise ParseError(f"line {lineno}: expected 'e <u> <v> <w>'")
        try:
            u, v, w = int(fields[1]), int(fields[2]), int(fields[3])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer edge field") from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: endpoint out of range [0, {n})")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop not allowed")
        if not 0 <= w <= MAX_WEIGHT:
            raise ParseError(f"line {lineno}: weight out of range")
        edges.append((u, v, w))
        if len(edges) > m_declared:
            raise ParseError(f"line {lineno}: more than {m_declared} edges declared")
    if n is None:
        raise ParseError("line 1: missing 'graph <n> <m>' header")
    if len(edges) != m_declared:
        raise ParseError(f"expected {m_declared} edges, found {len(edges)}")
    return Graph(n, edges)


def load_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def format_graph(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        for c in comment.splitlines():
            lines.append(f"# {c}")
    lines.append(f"graph {g.n} {g.m}")
    for e in g.edges:
        lines.append(f"e {e.u} {e.v} {e.w}")
    return "\n".join(lines) + "\n"


def save_graph(g: Graph, path, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g, comment))
