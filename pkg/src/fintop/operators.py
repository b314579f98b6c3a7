"""Interior, closure, exterior, boundary, point roles, and density notions.

Interior/closure/exterior/boundary are computed from the open/closed
families; the per-point role flags are computed from raw neighborhood
quantifiers instead, so the identities between the two routes stay
checkable rather than being true by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .carrier import PointSet, same_carrier
from .errors import CrossCheckFailure
from .space import TopSpace, neighborhoods


def interior(s: TopSpace, A: PointSet) -> PointSet:
    """Union of all opens contained in A (the largest open inside A)."""
    same_carrier(s.n, A.n)
    bits = 0
    for m in s.opens.masks:
        if m & ~A.bits == 0:
            bits |= m
    return PointSet(bits, s.n)


def closure(s: TopSpace, A: PointSet) -> PointSet:
    """Intersection of all closeds containing A (the smallest closed over A)."""
    same_carrier(s.n, A.n)
    bits = (1 << s.n) - 1
    for m in s.closeds.masks:
        if A.bits & ~m == 0:
            bits &= m
    return PointSet(bits, s.n)


def exterior(s: TopSpace, A: PointSet) -> PointSet:
    """Interior of the complement of A."""
    return interior(s, A.complement())


def boundary(s: TopSpace, A: PointSet) -> PointSet:
    """Closure minus interior."""
    return closure(s, A) - interior(s, A)


@dataclass(frozen=True, slots=True)
class RoleFlags:
    """Classification of one point relative to one set."""

    interior: bool
    exterior: bool
    boundary: bool
    adherent: bool
    limit: bool
    isolated: bool


def point_roles(s: TopSpace, A: PointSet, p: int) -> RoleFlags:
    """Classify p against A from the neighborhood definitions directly."""
    same_carrier(s.n, A.n)
    if not 0 <= p < s.n:
        raise ValueError(f"point {p} outside carrier of size {s.n}")
    pbit = 1 << p
    neis = [m for m in s.opens.masks if m & pbit]
    interior_pt = any(m & ~A.bits == 0 for m in neis)
    # The defining formula has a second, provably equal form: p lies in some
    # open subset of A.  Assert the equality instead of choosing one.
    alt = any(m & pbit and m & ~A.bits == 0 for m in s.opens.masks)
    if interior_pt != alt:
        raise CrossCheckFailure("interior-point formulas disagree")
    exterior_pt = any(m & A.bits == 0 for m in neis)
    boundary_pt = not interior_pt and not exterior_pt
    adherent = all(m & A.bits for m in neis)
    limit = all(m & A.bits & ~pbit for m in neis)
    isolated = any(m & A.bits == pbit for m in neis)
    return RoleFlags(interior_pt, exterior_pt, boundary_pt, adherent, limit, isolated)


def limit_set(s: TopSpace, A: PointSet) -> PointSet:
    """Points whose every neighborhood meets A off the point itself."""
    same_carrier(s.n, A.n)
    bits = 0
    for p in range(s.n):
        pbit = 1 << p
        if all(m & A.bits & ~pbit for m in s.opens.masks if m & pbit):
            bits |= pbit
    return PointSet(bits, s.n)


def isolated_set(s: TopSpace, A: PointSet) -> PointSet:
    """Points of A having a neighborhood meeting A exactly in themselves."""
    same_carrier(s.n, A.n)
    bits = 0
    for p in A.points():
        pbit = 1 << p
        if any(m & pbit and m & A.bits == pbit for m in s.opens.masks):
            bits |= pbit
    return PointSet(bits, s.n)


@dataclass(frozen=True, slots=True)
class DensityReport:
    dense: bool
    dense_in_itself: bool
    nowhere_dense: bool
    perfect: bool


def density_report(s: TopSpace, A: PointSet) -> DensityReport:
    same_carrier(s.n, A.n)
    full = (1 << s.n) - 1
    cl = closure(s, A)
    dense = cl.bits == full
    nowhere_dense = interior(s, cl).bits == 0
    dense_in_itself = isolated_set(s, A).bits == 0
    perfect = dense_in_itself and A.bits in s.closeds
    return DensityReport(dense, dense_in_itself, nowhere_dense, perfect)


def pair_relation(s: TopSpace, A: PointSet, B: PointSet) -> str:
    """Classify the pair as "glued", "free", or "neither".

    Glued: each set meets the other's closure; free: neither does.
    """
    a_meets = (A & closure(s, B)).bits != 0
    b_meets = (B & closure(s, A)).bits != 0
    if a_meets and b_meets:
        return "glued"
    if not a_meets and not b_meets:
        return "free"
    return "neither"


def is_dense_in(s: TopSpace, A_prime: PointSet, A: PointSet) -> bool:
    """True iff the closure of A_prime includes A."""
    return A <= closure(s, A_prime)


@lru_cache(maxsize=None)
def interior_table(s: TopSpace) -> tuple[int, ...]:
    """Interior of every subset, indexed by bitmask.  Small carriers only."""
    if s.n > 12:
        raise ValueError("interior_table is limited to n <= 12")
    return tuple(interior(s, PointSet(m, s.n)).bits for m in range(1 << s.n))


@lru_cache(maxsize=None)
def closure_table(s: TopSpace) -> tuple[int, ...]:
    """Closure of every subset, indexed by bitmask.  Small carriers only."""
    if s.n > 12:
        raise ValueError("closure_table is limited to n <= 12")
    return tuple(closure(s, PointSet(m, s.n)).bits for m in range(1 << s.n))
