"""Enumeration of tight (isometric) cycles under the tie-broken metric.

A simple cycle is tight when, for every pair of its vertices, one of the
two cycle arcs is the shortest path between them.  Because the
tie-broken metric makes shortest paths unique, every tight cycle arises
as ``path(v,x) + edge(x,y) + path(y,v)`` for some vertex v and edge
(x,y), so candidate generation over all (v, e) pairs followed by the
pairwise tightness filter is complete.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import Gf2Vector
from .graph import AllPairs, Cycle, Graph, PerturbedWeight, SpTree, apsp


@dataclass
class TightCycleSet:
    """All tight cycles, strictly sorted by weight."""

    cycles: list[Cycle]
    total_length: int  # sum of edge counts


def _path_masks(g: Graph, tree: SpTree) -> tuple[list[int], list[int]]:
    """Per-vertex (edge mask, vertex mask) of the tree path from the root.

    Unreachable vertices get mask 0 and must be screened via tree.dist.
    """
    emask = [0] * g.n
    vmask = [0] * g.n
    for v in tree.order:
        p = tree.parent_vertex[v]
        if p is None:
            vmask[v] = 1 << v
        else:
            emask[v] = emask[p] | (1 << tree.parent_edge[v])
            vmask[v] = vmask[p] | (1 << v)
    return emask, vmask


def horton_candidates(g: Graph, trees: list[SpTree]) -> list[Cycle]:
    """Candidate cycles path(v,x) + (x,y) + path(y,v) over all v and (x,y).

    Keeps only combinations where the two paths share no vertex besides v
    and the joining edge lies on neither path; each such edge set is a
    simple cycle.  Candidates are deduplicated and sorted by weight.
    """
    seen: set[int] = set()
    out: list[Cycle] = []
    for tree in trees:
        emask, vmask = _path_masks(g, tree)
        root_bit = 1 << tree.root
        dist = tree.dist
        for e_idx, e in enumerate(g.edges):
            dx, dy = dist[e.u], dist[e.v]
            if dx is None or dy is None:
                continue
            if vmask[e.u] & vmask[e.v] != root_bit:
                continue
            path_edges = emask[e.u] | emask[e.v]
            e_bit = 1 << e_idx
            if path_edges & e_bit:
                continue
            mask = path_edges | e_bit
            if mask in seen:
                continue
            seen.add(mask)
            base = dx.base + dy.base + e.w
            out.append(
                Cycle(Gf2Vector(g.m, mask), PerturbedWeight(base, mask), mask.bit_count())
            )
    out.sort(key=lambda c: c.weight)
    return out


def _cycle_walk(g: Graph, cycle: Cycle) -> tuple[list[int], list[int]]:
    """Closed walk (vertices, edges) of an elementary cycle.

    Returns vertices v_0..v_{k-1} and edges e_0..e_{k-1} with e_i joining
    v_i and v_{i+1 mod k}.  Raises ValueError when the edge set is not a
    single closed loop of degree-2 vertices.
    """
    incident: dict[int, list[int]] = {}
    rest = cycle.mask
    count = 0
    while rest:
        low = rest & -rest
        e_idx = low.bit_length() - 1
        e = g.edges[e_idx]
        incident.setdefault(e.u, []).append(e_idx)
        incident.setdefault(e.v, []).append(e_idx)
        count += 1
        rest ^= low
    if count == 0:
        raise ValueError("empty cycle has no walk")
    for v, inc in incident.items():
        if len(inc) != 2:
            raise ValueError(f"vertex {v} has degree {len(inc)}; cycle not elementary")
    start = min(incident)
    verts = [start]
    edges = [incident[start][0]]
    v = g.other_end(edges[0], start)
    while v != start:
        verts.append(v)
        a, b = incident[v]
        nxt = b if a == edges[-1] else a
        edges.append(nxt)
        v = g.other_end(nxt, v)
    if len(edges) != count:
        raise ValueError("edge set is disconnected; cycle not elementary")
    return verts, edges


def is_tight(cycle: Cycle, pairs: AllPairs) -> bool:
    """Check that one arc of the cycle realizes every pairwise distance.

    Comparisons are exact in the tie-broken order, so an arc matches the
    distance only when it is, edge for edge, the unique shortest path.
    """
    g = pairs.graph
    verts, edges = _cycle_walk(g, cycle)
    k = len(edges)
    # prefix[i] = weight/mask of the arc v_0..v_i (first i edges)
    pre_b = [0] * (k + 1)
    pre_m = [0] * (k + 1)
    for i, e_idx in enumerate(edges):
        pre_b[i + 1] = pre_b[i] + g.edges[e_idx].w
        pre_m[i + 1] = pre_m[i] | (1 << e_idx)
    total_b, total_m = pre_b[k], cycle.mask
    table = pairs.table
    for i in range(k):
        row = table[verts[i]]
        for j in range(i + 1, k):
            d = row[verts[j]]
            arc_b = pre_b[j] - pre_b[i]
            arc_m = pre_m[j] ^ pre_m[i]
            other_b = total_b - arc_b
            other_m = total_m ^ arc_m
            if (arc_b, arc_m) <= (other_b, other_m):
                best_b, best_m = arc_b, arc_m
            else:
                best_b, best_m = other_b, other_m
            if best_b != d.base or best_m != d.tie:
                return False
    return True


def enumerate_tight_cycles(g: Graph, pairs: AllPairs | None = None) -> TightCycleSet:
    """All tight cycles of the graph, sorted by tie-broken weight."""
    if pairs is None:
        pairs = apsp(g)
    candidates = horton_candidates(g, pairs.trees)
    cycles = [c for c in candidates if is_tight(c, pairs)]
    total_length = sum(c.edge_count() for c in cycles)
    return TightCycleSet(cycles, total_length)
