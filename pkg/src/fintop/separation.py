"""Point-pair distinguishability and the separation ladder T0-T4.

Every axiom is evaluated twice: once from its literal definition and once
through an equivalent characterization, and the two results are required
to agree.  This turns the equivalence theorems into permanent cross-checks
inside the report itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .carrier import Family, PointSet, family_intersection
from .errors import CarrierTooLarge, CrossCheckFailure
from .operators import closure
from .space import TopSpace, discrete, meet_topologies, neighborhoods


@dataclass(frozen=True, slots=True)
class PairClass:
    indistinguishable: bool
    partially_distinguishable: bool
    distinguishable: bool
    separated: bool


def _nei_masks(s: TopSpace, p: int) -> frozenset[int]:
    return frozenset(m for m in s.opens.masks if m >> p & 1)


def classify_pair(s: TopSpace, p: int, q: int) -> PairClass:
    """Classify an ordered pair of points by their neighborhood families."""
    for x in (p, q):
        if not 0 <= x < s.n:
            raise ValueError(f"point {x} outside carrier of size {s.n}")
    np_, nq = _nei_masks(s, p), _nei_masks(s, q)
    indist = np_ == nq
    partially = not indist
    dist = not (np_ <= nq) and not (nq <= np_)
    separated = any(a & b == 0 for a in np_ for b in nq)
    return PairClass(indist, partially, dist, separated)


@dataclass(frozen=True, slots=True)
class SeparationReport:
    t0: bool
    t1: bool
    t2: bool
    t3: bool
    t4: bool
    regular: bool
    normal: bool


def _cross(name: str, literal: bool, alt: bool) -> bool:
    if literal != alt:
        raise CrossCheckFailure(f"{name}: literal={literal} equivalent={alt}")
    return literal


def _t0(s: TopSpace) -> bool:
    literal = all(
        classify_pair(s, p, q).partially_distinguishable
        for p in range(s.n)
        for q in range(p + 1, s.n)
    )
    # Equivalent: distinct points have distinct minimal open sets.
    alt = all(
        s.min_open[p] != s.min_open[q]
        for p in range(s.n)
        for q in range(p + 1, s.n)
    )
    return _cross("T0", literal, alt)


def _t1(s: TopSpace) -> bool:
    literal = all(
        classify_pair(s, p, q).distinguishable
        for p in range(s.n)
        for q in range(s.n)
        if p != q
    )
    # Equivalent: every singleton is closed.
    closeds = set(s.closeds.masks)
    alt = all(1 << p in closeds for p in range(s.n))
    return _cross("T1", literal, alt)


def _t2(s: TopSpace) -> bool:
    literal = all(
        classify_pair(s, p, q).separated
        for p in range(s.n)
        for q in range(s.n)
        if p != q
    )
    # Equivalent: every singleton is the intersection of its closed
    # neighborhoods (here: its closed supersets).
    alt = True
    for p in range(s.n):
        supersets = Family.of(s.n, (m for m in s.closeds.masks if m >> p & 1))
        if family_intersection(supersets).bits != 1 << p:
            alt = False
            break
    return _cross("T2", literal, alt)


def _disjoint_neighborhood_pair(s: TopSpace, A: int, B: int) -> bool:
    neis_a = [u for u in s.opens.masks if A & ~u == 0]
    neis_b = [u for u in s.opens.masks if B & ~u == 0]
    return any(a & b == 0 for a in neis_a for b in neis_b)


def _t3(s: TopSpace) -> bool:
    # Literal: every closed set and outside point have disjoint neighborhoods.
    literal = all(
        _disjoint_neighborhood_pair(s, c, 1 << p)
        for c in s.closeds.masks
        for p in range(s.n)
        if not c >> p & 1
    )
    # Equivalent: every neighborhood of a point includes the closure of a
    # smaller neighborhood of that point.
    alt = True
    for p in range(s.n):
        for u in s.opens.masks:
            if not u >> p & 1:
                continue
            if not any(
                v >> p & 1 and closure(s, PointSet(v, s.n)).bits & ~u == 0
                for v in s.opens.masks
            ):
                alt = False
    return _cross("T3", literal, alt)


def _t4(s: TopSpace) -> bool:
    literal = all(
        _disjoint_neighborhood_pair(s, a, b)
        for a in s.closeds.masks
        for b in s.closeds.masks
        if a & b == 0
    )
    # Equivalent: every neighborhood of a closed set includes the closure of
    # a smaller neighborhood of that set.
    alt = True
    for c in s.closeds.masks:
        for u in s.opens.masks:
            if c & ~u:
                continue
            if not any(
                c & ~v == 0 and closure(s, PointSet(v, s.n)).bits & ~u == 0
                for v in s.opens.masks
            ):
                alt = False
    return _cross("T4", literal, alt)


def separation_report(s: TopSpace) -> SeparationReport:
    t0, t1, t2, t3, t4 = _t0(s), _t1(s), _t2(s), _t3(s), _t4(s)
    if (t2 and not t1) or (t1 and not t0):
        raise CrossCheckFailure("separation ladder T2 => T1 => T0 broken")
    return SeparationReport(t0, t1, t2, t3, t4, t2 and t3, t2 and t4)


def t1_minimum(n: int) -> TopSpace:
    """Meet of all T1 topologies on n points (equals the discrete topology
    on finite carriers).  Enumerates all topologies, so n <= 3."""
    if n > 3:
        raise CarrierTooLarge("t1_minimum enumerates all topologies; n <= 3")
    from .enumeration import EnumConfig, enumerate_topologies

    t1_spaces = [
        s for s in enumerate_topologies(EnumConfig(n)) if separation_report(s).t1
    ]
    if not t1_spaces:  # pragma: no cover - discrete is always T1
        return discrete(n)
    return meet_topologies(t1_spaces)
