"""Minimum cycle basis engines.

Three interchangeable engines, all exact and deterministic:

* ``earliest``  - keep the first independent cycles of the weight-sorted
  tight list (the earliest basis of the tight-cycle matrix).
* ``depina``    - maintain support vectors; repeatedly take the lightest
  tight cycle with odd inner product against the current support vector
  and re-orthogonalize the rest one by one.
* ``kavitha``   - same invariants as ``depina`` but the support vectors
  are re-orthogonalized in bulk by a divide-and-conquer block update.

Support vectors live on the non-tree-edge coordinates of a fixed
spanning forest: the unit vector on a non-tree edge is never orthogonal
to that edge's fundamental cycle, so a qualifying cycle always exists.
For reporting they are embedded back into full edge space (zero on tree
edges), which leaves all inner products unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .errors import InfeasibleSupportError, InternalInvariantError
from .gf2 import Gf2Matrix, Gf2Vector, SpanTracker, invert, mat_mul
from .graph import Cycle, Graph, cyclomatic_number, spanning_forest
from .tight import TightCycleSet, enumerate_tight_cycles


@dataclass
class BasisReport:
    """An ordered cycle basis with its weight and optional certificate.

    ``certificate`` holds the final support vectors (full edge length,
    supported on non-tree edges) for the engines that maintain them.
    """

    engine: str
    cycles: list[Cycle]
    total_weight: int
    certificate: Optional[list[Gf2Vector]] = None

    def weight_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(c.weight.base for c in self.cycles))


def min_weight_odd_cycle(tcs: TightCycleSet, s: Gf2Vector) -> Cycle:
    """Lightest tight cycle with odd inner product against ``s``.

    ``s`` must be a nonzero vector over edge coordinates.  For any
    nonzero support vector arising in the engines below a qualifying
    cycle exists because the tight cycles span the cycle space; failure
    to find one therefore signals a broken invariant, not bad input.
    """
    if s.is_zero():
        raise ValueError("support vector must be nonzero")
    s_bits = s.bits
    for c in tcs.cycles:
        if c.edge_set.length != s.length:
            raise ValueError(f"dimension mismatch: {c.edge_set.length} != {s.length}")
        if (c.mask & s_bits).bit_count() & 1:
            return c
    raise InfeasibleSupportError(
        "no tight cycle has odd inner product with the support vector"
    )


def mcb_earliest(g: Graph, tight: TightCycleSet | None = None) -> BasisReport:
    """Earliest basis of the weight-sorted tight-cycle matrix.

    Because the columns are sorted by weight and independence is matroid
    independence, the first spanning independent set is a minimum basis.
    """
    tcs = tight if tight is not None else enumerate_tight_cycles(g)
    nu = cyclomatic_number(g)
    tracker = SpanTracker()
    chosen: list[Cycle] = []
    for c in tcs.cycles:
        if tracker.add(c.mask):
            chosen.append(c)
            if len(chosen) == nu:
                break
    if len(chosen) != nu:
        raise InternalInvariantError(
            f"tight cycles span rank {len(chosen)} < cyclomatic number {nu}"
        )
    return BasisReport("earliest", chosen, sum(c.weight.base for c in chosen))


def _support_setup(g: Graph, tight: TightCycleSet | None):
    tcs = tight if tight is not None else enumerate_tight_cycles(g)
    _, nontree = spanning_forest(g)
    return tcs, nontree


def _embed_support(m: int, nontree: list[int], s_bits: int) -> Gf2Vector:
    """Lift a non-tree-coordinate vector back to full edge coordinates."""
    bits = 0
    rest = s_bits
    while rest:
        low = rest & -rest
        bits |= 1 << nontree[low.bit_length() - 1]
        rest ^= low
    return Gf2Vector(m, bits)


def _project(mask: int, nontree: list[int]) -> int:
    """Restrict an edge mask to the non-tree coordinates."""
    bits = 0
    for k, e_idx in enumerate(nontree):
        if (mask >> e_idx) & 1:
            bits |= 1 << k
    return bits


def mcb_depina(g: Graph, tight: TightCycleSet | None = None) -> BasisReport:
    """Support-vector engine with one-by-one re-orthogonalization.

    Invariants maintained: after step i every remaining support vector is
    orthogonal to the cycles chosen so far, and the cycle chosen at step
    i has odd inner product with its own support vector.
    """
    tcs, nontree = _support_setup(g, tight)
    nu = len(nontree)
    m = g.m
    support = [1 << i for i in range(nu)]
    cycles: list[Cycle] = []
    proj: list[int] = []
    for i in range(nu):
        c = min_weight_odd_cycle(tcs, _embed_support(m, nontree, support[i]))
        cycles.append(c)
        p = _project(c.mask, nontree)
        proj.append(p)
        for j in range(i + 1, nu):
            if (p & support[j]).bit_count() & 1:
                support[j] ^= support[i]
    certificate = [_embed_support(m, nontree, s) for s in support]
    return BasisReport("depina", cycles, sum(c.weight.base for c in cycles), certificate)


def mcb_kavitha(g: Graph, tight: TightCycleSet | None = None) -> BasisReport:
    """Support-vector engine with divide-and-conquer bulk updates.

    After solving the left half [lo, q], the right-half support vectors
    are made orthogonal to the chosen cycles in one block step: with
    A = C^T [S_lo..S_q] and B = C^T [S_{q+1}..S_u], adding the left
    vectors combined by W = A^-1 B zeroes all the inner products at
    once.  A is unitriangular by the invariants, so it is invertible; a
    singular A means a broken invariant and surfaces as an error.
    """
    tcs, nontree = _support_setup(g, tight)
    nu = len(nontree)
    m = g.m
    support = [1 << i for i in range(nu)]
    cycles: list[Optional[Cycle]] = [None] * nu
    proj: list[int] = [0] * nu

    def block_inner(lo: int, q: int, col_range: range) -> Gf2Matrix:
        k = q - lo + 1
        cols = []
        for j in col_range:
            bits = 0
            for r in range(k):
                if (proj[lo + r] & support[j]).bit_count() & 1:
                    bits |= 1 << r
            cols.append(Gf2Vector(k, bits))
        return Gf2Matrix(k, cols)

    def solve(lo: int, u: int) -> None:
        if lo == u:
            c = min_weight_odd_cycle(tcs, _embed_support(m, nontree, support[lo]))
            cycles[lo] = c
            proj[lo] = _project(c.mask, nontree)
            return
        q = (lo + u) // 2
        solve(lo, q)
        a = block_inner(lo, q, range(lo, q + 1))
        b = block_inner(lo, q, range(q + 1, u + 1))
        w = mat_mul(invert(a), b)
        for c_off, w_col in enumerate(w.columns):
            acc = 0
            rest = w_col.bits
            while rest:
                low = rest & -rest
                acc ^= support[lo + low.bit_length() - 1]
                rest ^= low
            support[q + 1 + c_off] ^= acc
        solve(q + 1, u)

    if nu:
        solve(0, nu - 1)
    out = [c for c in cycles if c is not None]
    if len(out) != nu:
        raise InternalInvariantError("divide-and-conquer left cycles unassigned")
    certificate = [_embed_support(m, nontree, s) for s in support]
    return BasisReport("kavitha", out, sum(c.weight.base for c in out), certificate)


ENGINES: dict[str, Callable[..., BasisReport]] = {
    "earliest": mcb_earliest,
    "depina": mcb_depina,
    "kavitha": mcb_kavitha,
}
