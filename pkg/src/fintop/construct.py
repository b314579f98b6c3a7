"""Constructors: bases, sub-bases, subspaces, binary products, quotients,
metric topologies, and the Alexandroff (one-point) extension."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .carrier import Family, Partition, PointSet, check_carrier, same_carrier
from .errors import (
    CarrierTooLarge,
    CrossCheckFailure,
    InvalidBase,
    InvalidMetric,
    SubbaseDoesNotCover,
)
from .maps import FiniteMap
from .space import TopSpace, space


@dataclass(frozen=True, slots=True)
class BaseProblem:
    """Why a family is not a base: it fails to cover, or some pairwise
    intersection is not a union of members (witnessed by the pair)."""

    kind: str  # "NotCovering" | "IntersectionNotUnion"
    witness: tuple[PointSet, ...] = ()


def check_base_conditions(n: int, B: Family) -> Optional[BaseProblem]:
    """None iff B covers the carrier and every pairwise intersection is a
    union of members (checked pointwise: each point of B1 & B2 lies in some
    member between it and the intersection)."""
    check_carrier(n)
    same_carrier(B.n, n)
    full = (1 << n) - 1
    union = 0
    for m in B.masks:
        union |= m
    if union != full:
        return BaseProblem("NotCovering")
    masks = B.masks
    for i, a in enumerate(masks):
        for b in masks[i:]:
            inter = a & b
            for p in range(n):
                if not inter >> p & 1:
                    continue
                if not any(m >> p & 1 and m & ~inter == 0 for m in masks):
                    return BaseProblem(
                        "IntersectionNotUnion", (PointSet(a, n), PointSet(b, n))
                    )
    return None


def _union_closure(n: int, masks) -> set[int]:
    """Closure of a set of masks (plus the empty set) under pairwise union."""
    if n <= 13:
        # A mask belongs to the closure iff it is the union of the members
        # it contains; a direct scan beats the fixpoint for small carriers.
        members = list(masks)
        out = {0}
        for w in range(1 << n):
            bits = 0
            for m in members:
                if m & ~w == 0:
                    bits |= m
            if bits == w:
                out.add(w)
        return out
    result = set(masks)
    result.add(0)
    frontier = set(result)
    while frontier:
        new = set()
        for a in frontier:
            for b in result:
                u = a | b
                if u not in result and u not in new:
                    new.add(u)
        result |= new
        frontier = new
    return result


def topology_from_base(n: int, B: Family) -> TopSpace:
    """The coarsest topology containing B: all unions of subfamilies."""
    problem = check_base_conditions(n, B)
    if problem is not None:
        raise InvalidBase(problem)
    return space(n, _union_closure(n, B.masks))


def is_base_for(s: TopSpace, B: Family) -> bool:
    """True iff B consists of opens and every open is a union of members."""
    same_carrier(s.n, B.n)
    opens = set(s.opens.masks)
    if any(m not in opens for m in B.masks):
        return False
    for u in s.opens.masks:
        bits = 0
        for m in B.masks:
            if m & ~u == 0:
                bits |= m
        if bits != u:
            return False
    return True


def base_generates_same(n: int, B1: Family, B2: Family) -> str:
    """Compare the topologies generated by two bases.

    Returns "equal", "t1_coarser", "t2_coarser", or "incomparable".  The
    subset test on generated topologies is cross-asserted against the
    pointwise refinement criterion on the bases themselves.
    """
    t1 = topology_from_base(n, B1)
    t2 = topology_from_base(n, B2)

    def pointwise_coarser(coarse: Family, fine: Family) -> bool:
        # Every member of `coarse` is resolvable pointwise by `fine`.
        for b in coarse.masks:
            for p in range(n):
                if not b >> p & 1:
                    continue
                if not any(m >> p & 1 and m & ~b == 0 for m in fine.masks):
                    return False
        return True

    one_sub_two = set(t1.opens.masks) <= set(t2.opens.masks)
    two_sub_one = set(t2.opens.masks) <= set(t1.opens.masks)
    if one_sub_two != pointwise_coarser(B1, B2) or two_sub_one != pointwise_coarser(
        B2, B1
    ):
        raise CrossCheckFailure("base comparison criteria disagree")
    if one_sub_two and two_sub_one:
        return "equal"
    if one_sub_two:
        return "t1_coarser"
    if two_sub_one:
        return "t2_coarser"
    return "incomparable"


def topology_from_subbase(n: int, S: Family) -> TopSpace:
    """Intersections of nonempty finite subfamilies form a base; generate.

    The sub-base must cover the carrier, otherwise the generated family
    would miss the carrier itself.
    """
    check_carrier(n)
    same_carrier(S.n, n)
    full = (1 << n) - 1
    union = 0
    for m in S.masks:
        union |= m
    if union != full:
        raise SubbaseDoesNotCover(f"sub-base covers {union:#x}, carrier is {full:#x}")
    # Closure under pairwise intersection = all nonempty-subfamily intersections.
    base = set(S.masks)
    frontier = set(base)
    while frontier:
        new = set()
        for a in frontier:
            for b in base:
                i = a & b
                if i not in base and i not in new:
                    new.add(i)
        base |= new
        frontier = new
    B = Family.of(n, base)
    problem = check_base_conditions(n, B)
    if problem is not None:  # pragma: no cover - guaranteed by construction
        raise InvalidBase(problem)
    return topology_from_base(n, B)


def subspace(s: TopSpace, Y: PointSet) -> tuple[TopSpace, FiniteMap]:
    """The induced topology on Y, with points re-indexed 0..|Y|-1 in
    ascending original order; also returns the inclusion map."""
    same_carrier(s.n, Y.n)
    points = Y.points()
    k = len(points)
    reindex = {p: i for i, p in enumerate(points)}
    opens = set()
    for m in s.opens.masks:
        bits = 0
        for p in points:
            if m >> p & 1:
                bits |= 1 << reindex[p]
        opens.add(bits)
    sub = space(k, opens)
    inclusion = FiniteMap(k, s.n, points)
    return sub, inclusion


@dataclass(frozen=True, slots=True)
class PairEncoding:
    """Bijection {0..n1-1} x {0..n2-1} -> {0..n1*n2-1} via (i, j) -> i*n2 + j."""

    n1: int
    n2: int

    def encode(self, i: int, j: int) -> int:
        if not (0 <= i < self.n1 and 0 <= j < self.n2):
            raise ValueError(f"pair ({i},{j}) outside {self.n1}x{self.n2}")
        return i * self.n2 + j

    def decode(self, k: int) -> tuple[int, int]:
        if not 0 <= k < self.n1 * self.n2:
            raise ValueError(f"index {k} outside product carrier")
        return divmod(k, self.n2)

    def projection1(self) -> FiniteMap:
        return FiniteMap(self.n1 * self.n2, self.n1, tuple(i for i in range(self.n1) for _ in range(self.n2)))

    def projection2(self) -> FiniteMap:
        return FiniteMap(self.n1 * self.n2, self.n2, tuple(j for _ in range(self.n1) for j in range(self.n2)))


def product(s1: TopSpace, s2: TopSpace) -> tuple[TopSpace, PairEncoding]:
    """Binary product: the topology generated by the base {U x V}."""
    n = s1.n * s2.n
    if n > 24:
        raise CarrierTooLarge(f"product carrier {s1.n}*{s2.n} exceeds 24")
    enc = PairEncoding(s1.n, s2.n)
    base = set()
    for u in s1.opens.masks:
        for v in s2.opens.masks:
            bits = 0
            for i in range(s1.n):
                if not u >> i & 1:
                    continue
                for j in range(s2.n):
                    if v >> j & 1:
                        bits |= 1 << enc.encode(i, j)
            base.add(bits)
    if n == 0:
        return space(0, {0}), enc
    return topology_from_base(n, Family.of(n, base)), enc


def quotient(s: TopSpace, P: Partition) -> tuple[TopSpace, FiniteMap]:
    """Quotient by a partition: a set of blocks is open iff the union of its
    blocks is open; blocks are indexed by smallest member."""
    same_carrier(s.n, P.n)
    k = len(P.blocks)
    opens = set()
    open_masks = set(s.opens.masks)
    for q in range(1 << k):
        bits = 0
        for i in range(k):
            if q >> i & 1:
                bits |= P.blocks[i].bits
        if bits in open_masks:
            opens.add(q)
    quot = space(k, opens)
    projection = FiniteMap(s.n, k, P.block_index())
    return quot, projection


@dataclass(frozen=True, slots=True)
class MetricTable:
    """Exact integer distances between carrier points."""

    n: int
    d: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        check_carrier(self.n)
        n, d = self.n, self.d
        if len(d) != n or any(len(row) != n for row in d):
            raise InvalidMetric("shape", (n,))
        for i in range(n):
            if d[i][i] != 0:
                raise InvalidMetric("diagonal", (i,))
            for j in range(n):
                if d[i][j] < 0 or (i != j and d[i][j] == 0):
                    raise InvalidMetric("positivity", (i, j))
                if d[i][j] != d[j][i]:
                    raise InvalidMetric("symmetry", (i, j))
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if d[i][k] > d[i][j] + d[j][k]:
                        raise InvalidMetric("triangle", (i, j, k))

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> "MetricTable":
        return cls(len(rows), tuple(tuple(row) for row in rows))


def metric_topology(m: MetricTable) -> TopSpace:
    """Topology generated by the open balls of the metric.

    Ball membership changes only at the distinct distance values, so radii
    are sampled there (plus one value past the maximum).
    """
    n = m.n
    if n == 0:
        return space(0, {0})
    values = sorted({v for row in m.d for v in row if v > 0})
    radii = values + [(values[-1] if values else 0) + 1]
    balls = set()
    for p in range(n):
        for r in radii:
            bits = 0
            for x in range(n):
                if m.d[p][x] < r:
                    bits |= 1 << x
            balls.add(bits)
    return topology_from_base(n, Family.of(n, balls))


def is_metrizable(s: TopSpace) -> bool:
    """A finite space is metrizable iff it is discrete (every metric on a
    finite carrier induces the discrete topology)."""
    return len(s.opens) == 1 << s.n


def alexandroff(s: TopSpace) -> TopSpace:
    """One-point compactification: adjoin a point at infinity whose
    neighborhoods are complements of closed compact sets."""
    from .compact import is_compact_set  # cycle: compact builds on subspaces

    n = s.n
    check_carrier(n + 1)
    inf = 1 << n
    closed = set(s.closeds.masks)
    masks = set(s.opens.masks)
    for u in s.opens.masks:
        k = (1 << n) - 1 & ~u
        # On a finite carrier the complement of an open is always closed and
        # compact; both halves are still checked literally, never assumed.
        if k in closed and is_compact_set(s, PointSet(k, n)):
            masks.add(u | inf)
    return space(n + 1, masks)
