"""Cover classification, subcover/refinement relations, pasting-lemma
verification, and exact minimal subcovers.

Fundamentality is decided by the literal scan over all 2**n candidate
subsets, so the open-cover / finite-closed-cover sufficient conditions
remain testable theorems instead of shortcuts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .carrier import Family, PointSet, family_union, same_carrier
from .errors import NotACover, NotFundamental
from .maps import FiniteMap, check_map, restrict
from .space import TopSpace


@dataclass(frozen=True, slots=True)
class CoverReport:
    """is_cover/open/closed/locally-finite flags; fundamental is None when
    the target is not the whole carrier (fundamentality is only defined for
    covers of the space)."""

    is_cover: bool
    open_cover: bool
    closed_cover: bool
    locally_finite: bool
    fundamental: Optional[bool]


def relative_opens(s: TopSpace, S: int) -> frozenset[int]:
    """Masks of the subspace-opens of S, in original indexing."""
    return frozenset(S & m for m in s.opens.masks)


def _is_fundamental(s: TopSpace, members) -> bool:
    rel = {S: relative_opens(s, S) for S in members}
    opens = set(s.opens.masks)
    for u in range(1 << s.n):
        if all(S & u in rel[S] for S in members) and u not in opens:
            return False
    return True


def classify_cover(
    s: TopSpace, C: Family, target: Optional[PointSet] = None
) -> CoverReport:
    """Classify C as a cover of `target` (default: the whole carrier)."""
    same_carrier(s.n, C.n)
    full = (1 << s.n) - 1
    tgt = full if target is None else target.bits
    if target is not None:
        same_carrier(target.n, s.n)
    is_cover = tgt & ~family_union(C).bits == 0
    opens = set(s.opens.masks)
    closeds = set(s.closeds.masks)
    open_cover = is_cover and all(m in opens for m in C.masks)
    closed_cover = is_cover and all(m in closeds for m in C.masks)
    # Literal local finiteness: every point has a neighborhood meeting only
    # finitely many members.  Degenerate on finite carriers (any
    # neighborhood meets finitely many members), kept literal anyway.
    def meets_finitely_many(u: int) -> bool:
        count = sum(1 for m in C.masks if m & u)
        return count < len(C.masks) + 1

    locally_finite = is_cover and all(
        any(u >> p & 1 and meets_finitely_many(u) for u in s.opens.masks)
        for p in range(s.n)
    )
    fundamental = None
    if tgt == full:
        fundamental = is_cover and _is_fundamental(s, C.masks)
    return CoverReport(is_cover, open_cover, closed_cover, locally_finite, fundamental)


def is_subcover(C_sub: Family, C: Family, target: PointSet, s: TopSpace) -> bool:
    """C_sub is a subfamily of C that still covers the target."""
    same_carrier(C_sub.n, C.n, target.n, s.n)
    pool = set(C.masks)
    if any(m not in pool for m in C_sub.masks):
        return False
    union = 0
    for m in C_sub.masks:
        union |= m
    return target.bits & ~union == 0


def is_refinement(C_ref: Family, C: Family, s: TopSpace) -> bool:
    """C_ref covers the carrier and every member sits inside some member of C."""
    same_carrier(C_ref.n, C.n, s.n)
    full = (1 << s.n) - 1
    union = 0
    for m in C_ref.masks:
        union |= m
    if union != full:
        return False
    return all(any(m & ~big == 0 for big in C.masks) for m in C_ref.masks)


def verify_pasting(s1: TopSpace, s2: TopSpace, f: FiniteMap, C: Family) -> bool:
    """Truth of: (every domain restriction of f to a member is continuous)
    implies (f is continuous).  C must be a fundamental cover of s1."""
    report = classify_cover(s1, C)
    if not report.fundamental:
        raise NotFundamental("pasting requires a fundamental cover of the domain")
    from .construct import subspace

    all_restrictions_continuous = True
    for member in C.members:
        sub, _ = subspace(s1, member)
        g = restrict(f, s1, s2, member)
        if not check_map(g, sub, s2).continuous:
            all_restrictions_continuous = False
            break
    if not all_restrictions_continuous:
        return True
    return check_map(f, s1, s2).continuous


def minimal_subcover(s: TopSpace, C: Family, target: Optional[PointSet] = None) -> Family:
    """Exact minimum-cardinality subcover, ties broken lexicographically by
    member bitmasks (branch-and-bound over members in ascending order)."""
    same_carrier(s.n, C.n)
    full = (1 << s.n) - 1
    tgt = full if target is None else target.bits
    masks = list(C.masks)
    union = 0
    for m in masks:
        union |= m
    if tgt & ~union:
        raise NotACover(f"family does not cover target {tgt:#x}")
    best: Optional[tuple[int, ...]] = None

    def bound(uncovered: int) -> int:
        # Each further member covers at most `biggest` uncovered points.
        biggest = max((m & uncovered).bit_count() for m in masks)
        if biggest == 0:
            return 10**9
        return -(-uncovered.bit_count() // biggest)

    def search(chosen: list[int], uncovered: int) -> None:
        nonlocal best
        if not uncovered:
            cand = tuple(sorted(chosen))
            if best is None or (len(cand), cand) < (len(best), best):
                best = cand
            return
        if best is not None and len(chosen) + bound(uncovered) > len(best):
            return
        # Branch on the lowest uncovered point: some chosen member must hold it.
        pivot = uncovered & -uncovered
        for m in masks:
            if m & pivot and m not in chosen:
                chosen.append(m)
                search(chosen, uncovered & ~m)
                chosen.pop()

    search([], tgt)
    assert best is not None
    return Family.of(C.n, best)
