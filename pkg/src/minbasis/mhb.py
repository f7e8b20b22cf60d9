"""Minimum homology basis engines for 1-homology with Z2 coefficients.

Both engines reduce the problem to a column rank profile: seed the
elimination with the triangle boundary columns, then scan a weight-sorted
list of cycles and keep those that grow the rank.  The kept cycles are
independent modulo boundaries and, because the scan order is by weight,
form a minimum-weight homology basis.  The engines differ only in the
cycle list they scan: all tight cycles, or a minimum cycle basis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInvariantError
from .gf2 import Gf2Vector, SpanTracker, in_span
from .graph import Cycle
from .mcb import ENGINES
from .simplicial import SimplicialComplex, boundary_matrix, homology_profile, skeleton
from .tight import enumerate_tight_cycles


@dataclass
class HomologyBasisReport:
    """Cycles spanning the 1-homology classes at minimum total weight."""

    engine: str
    cycles: list[Cycle]
    total_weight: int
    boundary_profile: tuple[int, ...]  # triangle indices of the earliest boundary basis

    def weight_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(c.weight.base for c in self.cycles))


def _require_valid(k: SimplicialComplex) -> None:
    violations = k.validate()
    if violations:
        raise ValueError("invalid complex: " + "; ".join(violations))


def _profile_basis(
    k: SimplicialComplex, cycle_columns: list[Cycle], engine: str
) -> HomologyBasisReport:
    profile = homology_profile(k)
    d2 = boundary_matrix(k, 2)
    tracker = SpanTracker()
    boundary_sel = [t for t, col in enumerate(d2.columns) if tracker.add(col.bits)]
    chosen: list[Cycle] = []
    for c in cycle_columns:
        if tracker.rank == profile.cycle_rank:
            break
        if tracker.add(c.mask):
            chosen.append(c)
    if len(boundary_sel) != profile.boundary_rank or len(chosen) != profile.beta1:
        raise InternalInvariantError(
            f"rank profile split selected {len(boundary_sel)} boundary and "
            f"{len(chosen)} cycle columns; expected {profile.boundary_rank} "
            f"and {profile.beta1}"
        )
    total = sum(c.weight.base for c in chosen)
    return HomologyBasisReport(engine, chosen, total, tuple(boundary_sel))


def mhb_tight(k: SimplicialComplex) -> HomologyBasisReport:
    """Rank profile of the boundary columns followed by all tight cycles."""
    _require_valid(k)
    tcs = enumerate_tight_cycles(skeleton(k))
    return _profile_basis(k, tcs.cycles, "tight")


def mhb_via_mcb(k: SimplicialComplex, mcb_engine: str = "earliest") -> HomologyBasisReport:
    """Rank profile of the boundary columns followed by a minimum cycle basis."""
    _require_valid(k)
    try:
        engine = ENGINES[mcb_engine]
    except KeyError:
        raise ValueError(f"unknown mcb engine {mcb_engine!r}") from None
    basis = engine(skeleton(k))
    columns = sorted(basis.cycles, key=lambda c: c.weight)
    return _profile_basis(k, columns, "via_mcb")


def _check_cycle(k: SimplicialComplex, z: Cycle, name: str) -> None:
    if z.edge_set.length != k.m:
        raise ValueError(f"{name}: edge-vector length {z.edge_set.length} != {k.m}")
    parity = 0  # per-vertex degree parity packed as bits
    rest = z.mask
    while rest:
        low = rest & -rest
        e = k.edges[low.bit_length() - 1]
        parity ^= (1 << e.u) | (1 << e.v)
        rest ^= low
    if parity:
        v = parity.bit_length() - 1
        raise ValueError(f"{name}: vertex {v} has odd degree; not a cycle")


def homologous(k: SimplicialComplex, z1: Cycle, z2: Cycle) -> bool:
    """Whether two cycles differ by a sum of triangle boundaries."""
    _require_valid(k)
    _check_cycle(k, z1, "z1")
    _check_cycle(k, z2, "z2")
    diff = Gf2Vector(k.m, z1.mask ^ z2.mask)
    return in_span(boundary_matrix(k, 2), diff) is not None
