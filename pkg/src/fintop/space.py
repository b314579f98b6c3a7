"""Validated topological spaces over finite carriers.

A topology is a canonical family of "open" bitmasks containing the empty
set and the carrier and closed under pairwise intersection and union
(pairwise union closure is equivalent to arbitrary-union closure for
finite families).  Validation populates two caches: the closed-set family
and the per-point minimal open set, which encodes the specialization
preorder of the space.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .carrier import (
    Family,
    PointSet,
    check_carrier,
    same_carrier,
)
from .errors import CarrierTooLarge, EmptyList, InvalidTopology

# validate_topology reports one violation per kind, with the
# lexicographically smallest witness masks, so goldens are deterministic.
VIOLATION_KINDS = (
    "MissingEmpty",
    "MissingCarrier",
    "NotIntersectionClosed",
    "NotUnionClosed",
    "MemberOutOfCarrier",
)


@dataclass(frozen=True, slots=True)
class AxiomViolation:
    kind: str
    witness: tuple[PointSet, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in VIOLATION_KINDS:
            raise ValueError(f"unknown violation kind {self.kind!r}")


@dataclass(frozen=True, slots=True)
class TopSpace:
    """A validated topological space.

    Construct via :func:`validate_topology` or :func:`space`; the closed-set
    family and minimal-open table are computed once at validation time.
    """

    n: int
    opens: Family
    closeds: Family = field(compare=False)
    min_open: tuple[PointSet, ...] = field(compare=False)

    def __repr__(self) -> str:
        return f"TopSpace(n={self.n}, opens={self.opens!r})"


def _canonical_masks(n: int, fam) -> tuple[list[int], list[AxiomViolation]]:
    """Normalize the input family to a sorted list of masks, flagging
    out-of-carrier members."""
    full = (1 << n) - 1
    raw = []
    if isinstance(fam, Family):
        same_carrier(fam.n, n)
        raw = list(fam.masks)
    else:
        for m in fam:
            if isinstance(m, PointSet):
                same_carrier(m.n, n)
                raw.append(m.bits)
            elif isinstance(m, int):
                raw.append(m)
            else:
                bits = 0
                for p in m:
                    if p < 0:
                        raise ValueError(f"negative point index {p}")
                    bits |= 1 << p
                raw.append(bits)
    violations = []
    bad = next((m for m in sorted(raw) if m < 0 or m & ~full), None)
    if bad is not None:
        # Witness the stray member over the smallest carrier that holds it.
        wide = min(24, max(n, bad.bit_length())) if bad >= 0 else n
        witness = (PointSet(bad & (1 << wide) - 1, wide),) if bad >= 0 else ()
        violations.append(AxiomViolation("MemberOutOfCarrier", witness))
        raw = [m for m in raw if 0 <= m <= full]
    return sorted(set(raw)), violations


def validate_topology(
    n: int, fam: Union[Family, Iterable]
) -> Union[TopSpace, list[AxiomViolation]]:
    """Check the topology axioms for a family of subsets of {0..n-1}.

    Returns a :class:`TopSpace` on success, otherwise the list of every
    violation found (one per kind, minimal witnesses).  Violations are
    returned rather than raised so enumeration filters can count failures.
    """
    check_carrier(n)
    full = (1 << n) - 1
    masks, violations = _canonical_masks(n, fam)
    mask_set = set(masks)
    if 0 not in mask_set:
        violations.append(AxiomViolation("MissingEmpty"))
    if full not in mask_set:
        violations.append(AxiomViolation("MissingCarrier"))
    inter_witness = None
    union_witness = None
    for i, a in enumerate(masks):
        for b in masks[i + 1 :]:
            if inter_witness is None and a & b not in mask_set:
                inter_witness = (a, b)
            if union_witness is None and a | b not in mask_set:
                union_witness = (a, b)
        if inter_witness is not None and union_witness is not None:
            break
    if inter_witness is not None:
        a, b = inter_witness
        violations.append(
            AxiomViolation("NotIntersectionClosed", (PointSet(a, n), PointSet(b, n)))
        )
    if union_witness is not None:
        a, b = union_witness
        violations.append(
            AxiomViolation("NotUnionClosed", (PointSet(a, n), PointSet(b, n)))
        )
    if violations:
        return violations
    opens = Family(tuple(PointSet(m, n) for m in masks), n)
    closeds = Family.of(n, (full & ~m for m in masks))
    min_open = []
    for p in range(n):
        acc = full
        for m in masks:
            if m >> p & 1:
                acc &= m
        min_open.append(PointSet(acc, n))
    return TopSpace(n, opens, closeds, tuple(min_open))


def space(n: int, fam: Union[Family, Iterable]) -> TopSpace:
    """Like :func:`validate_topology` but raises :class:`InvalidTopology`."""
    result = validate_topology(n, fam)
    if isinstance(result, list):
        raise InvalidTopology(result)
    return result


def discrete(n: int) -> TopSpace:
    """The topology of all subsets.  Capped at n <= 20 to bound 2**n opens."""
    check_carrier(n)
    if n > 20:
        raise CarrierTooLarge(f"discrete topology on {n} points has 2**{n} opens")
    return space(n, range(1 << n))


def indiscrete(n: int) -> TopSpace:
    """The topology {empty, carrier} (a single open when n = 0)."""
    check_carrier(n)
    return space(n, {0, (1 << n) - 1})


def closed_sets(s: TopSpace) -> Family:
    return s.closeds


def clopen_sets(s: TopSpace) -> Family:
    """Sets that are simultaneously open and closed."""
    closed = set(s.closeds.masks)
    return Family.of(s.n, (m for m in s.opens.masks if m in closed))


def neighborhoods(s: TopSpace, A: PointSet, kind: str = "open") -> Family:
    """All opens (kind="open") or closeds (kind="closed") containing A."""
    same_carrier(s.n, A.n)
    if kind == "open":
        pool = s.opens
    elif kind == "closed":
        pool = s.closeds
    else:
        raise ValueError(f"kind must be 'open' or 'closed', got {kind!r}")
    return Family.of(s.n, (m for m in pool.masks if A.bits & ~m == 0))


def minimal_open(s: TopSpace, p: int) -> PointSet:
    """Intersection of all open neighborhoods of {p}; itself open."""
    if not 0 <= p < s.n:
        raise ValueError(f"point {p} outside carrier of size {s.n}")
    return s.min_open[p]


#: Possible results of :func:`compare` (mutually exclusive).
EQUAL = "equal"
STRICTLY_FINER = "strictly_finer"
STRICTLY_COARSER = "strictly_coarser"
INCOMPARABLE = "incomparable"


def is_finer(t1: TopSpace, t2: TopSpace) -> bool:
    """True iff every open of t2 is an open of t1 (t1 at least as fine)."""
    same_carrier(t1.n, t2.n)
    return set(t1.opens.masks) >= set(t2.opens.masks)


def compare(t1: TopSpace, t2: TopSpace) -> str:
    """Classify t1 against t2 by inclusion of their opens families."""
    same_carrier(t1.n, t2.n)
    finer = is_finer(t1, t2)
    coarser = is_finer(t2, t1)
    if finer and coarser:
        return EQUAL
    if finer:
        return STRICTLY_FINER
    if coarser:
        return STRICTLY_COARSER
    return INCOMPARABLE


def meet_topologies(spaces: Sequence[TopSpace]) -> TopSpace:
    """Intersection of the opens families; always a topology."""
    if not spaces:
        raise EmptyList("meet of an empty list of topologies")
    n = same_carrier(*(s.n for s in spaces))
    common = set(spaces[0].opens.masks)
    for s in spaces[1:]:
        common &= set(s.opens.masks)
    return space(n, common)


def one_point_extension(s: TopSpace) -> TopSpace:
    """Adjoin a new point (index n) open-dense in every old open.

    The new topology is {{a} | U : U open} plus the empty set, over n+1
    points; this is always a topology.
    """
    n = s.n
    check_carrier(n + 1)
    a = 1 << n
    masks = {a | m for m in s.opens.masks}
    masks.add(0)
    return space(n + 1, masks)
