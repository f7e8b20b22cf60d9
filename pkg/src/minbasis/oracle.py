"""Brute-force reference implementations for small instances.

Everything here prefers exhaustive enumeration over cleverness so the
results can serve as an independent check of the production engines:
cycle vectors come from all combinations of fundamental cycles, shortest
paths from enumerating every simple path, tightness from the raw
pairwise definition, and bases from weight-sorted greedy selection.
Budgets refuse instances that would blow up instead of hanging.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetExceededError, InternalInvariantError
from .gf2 import SpanTracker
from .graph import Cycle, Graph, cycle_from_mask, cyclomatic_number, fundamental_cycles
from .mcb import BasisReport
from .mhb import HomologyBasisReport
from .simplicial import SimplicialComplex, boundary_matrix, homology_profile, skeleton
from .tight import TightCycleSet

ORACLE_VERSION = 1


@dataclass(frozen=True)
class OracleBudget:
    max_cycle_rank: int = 16
    max_vertices: int = 12


DEFAULT_BUDGET = OracleBudget()


def _check_rank_budget(g: Graph, budget: OracleBudget) -> int:
    nu = cyclomatic_number(g)
    if nu > budget.max_cycle_rank:
        raise BudgetExceededError(
            f"cycle rank {nu} exceeds oracle budget {budget.max_cycle_rank}"
        )
    return nu


def all_cycle_vectors(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> list[Cycle]:
    """Every nonzero cycle-space vector (2^nu - 1 of them)."""
    nu = _check_rank_budget(g, budget)
    fund = [c.mask for c in fundamental_cycles(g)]
    masks = [0] * (1 << nu)
    out: list[Cycle] = []
    for k in range(1, 1 << nu):
        low = k & -k
        masks[k] = masks[k ^ low] ^ fund[low.bit_length() - 1]
        out.append(cycle_from_mask(g, masks[k]))
    return out


def brute_mcb(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> BasisReport:
    """Greedy minimum basis over the full cycle space, sorted by weight."""
    nu = _check_rank_budget(g, budget)
    vectors = sorted(all_cycle_vectors(g, budget), key=lambda c: c.weight)
    tracker = SpanTracker()
    chosen = [c for c in vectors if tracker.add(c.mask)]
    if len(chosen) != nu:
        raise InternalInvariantError("cycle vectors did not span the cycle space")
    return BasisReport("oracle", chosen, sum(c.weight.base for c in chosen))


def brute_mhb(
    k: SimplicialComplex, budget: OracleBudget = DEFAULT_BUDGET
) -> HomologyBasisReport:
    """Greedy minimum basis modulo boundaries over the full cycle space."""
    g = skeleton(k)
    vectors = sorted(all_cycle_vectors(g, budget), key=lambda c: c.weight)
    profile = homology_profile(k)
    tracker = SpanTracker()
    boundary_sel = [
        t for t, col in enumerate(boundary_matrix(k, 2).columns) if tracker.add(col.bits)
    ]
    chosen = []
    for c in vectors:
        if tracker.add(c.mask):
            chosen.append(c)
    if len(chosen) != profile.beta1:
        raise InternalInvariantError(
            f"greedy kept {len(chosen)} cycles, expected beta1 = {profile.beta1}"
        )
    total = sum(c.weight.base for c in chosen)
    return HomologyBasisReport("oracle", chosen, total, tuple(boundary_sel))


def _simple_cycle_walks(g: Graph, budget: OracleBudget) -> list[tuple[list[int], list[int]]]:
    """All elementary cycles as (vertex walk, edge walk) pairs.

    Each cycle is produced exactly once: the walk starts at its smallest
    vertex and the first edge index is smaller than the last, which also
    covers two-edge cycles made of parallel edges.
    """
    if g.n > budget.max_vertices:
        raise BudgetExceededError(
            f"{g.n} vertices exceed oracle budget {budget.max_vertices}"
        )
    out: list[tuple[list[int], list[int]]] = []

    def extend(start: int, v: int, visited: int, verts: list[int], walk: list[int]):
        for e_idx in g.incident(v):
            o = g.other_end(e_idx, v)
            if o == start:
                if walk and e_idx > walk[0]:
                    out.append((verts.copy(), walk + [e_idx]))
                continue
            if o < start or (visited >> o) & 1:
                continue
            verts.append(o)
            walk.append(e_idx)
            extend(start, o, visited | (1 << o), verts, walk)
            verts.pop()
            walk.pop()

    for s in range(g.n):
        extend(s, s, 1 << s, [s], [])
    return out


def _min_path_table(g: Graph) -> list[list[tuple[int, int] | None]]:
    """Pairwise minimum (weight, edge mask) keys over all simple paths."""
    table: list[list[tuple[int, int] | None]] = [[None] * g.n for _ in range(g.n)]
    for s in range(g.n):
        best = table[s]
        best[s] = (0, 0)

        def walk(v: int, visited: int, base: int, emask: int):
            for e_idx in g.incident(v):
                o = g.other_end(e_idx, v)
                if (visited >> o) & 1:
                    continue
                key = (base + g.edges[e_idx].w, emask | (1 << e_idx))
                if best[o] is None or key < best[o]:
                    best[o] = key
                walk(o, visited | (1 << o), key[0], key[1])

        walk(s, 1 << s, 0, 0)
    return table


def brute_tight_cycles(
    g: Graph, budget: OracleBudget = DEFAULT_BUDGET
) -> TightCycleSet:
    """Exhaustive enumeration filtered by the pairwise tightness definition."""
    walks = _simple_cycle_walks(g, budget)
    table = _min_path_table(g)
    tight: list[Cycle] = []
    for verts, walk in walks:
        k = len(walk)
        total_b = sum(g.edges[e].w for e in walk)
        total_m = 0
        for e in walk:
            total_m |= 1 << e
        ok = True
        for i in range(k):
            for j in range(i + 1, k):
                arc_b = sum(g.edges[e].w for e in walk[i:j])
                arc_m = 0
                for e in walk[i:j]:
                    arc_m |= 1 << e
                one = (arc_b, arc_m)
                two = (total_b - arc_b, total_m ^ arc_m)
                if min(one, two) != table[verts[i]][verts[j]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            tight.append(cycle_from_mask(g, total_m))
    tight.sort(key=lambda c: c.weight)
    return TightCycleSet(tight, sum(c.edge_count() for c in tight))
