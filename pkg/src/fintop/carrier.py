"""Set algebra over a finite carrier {0..n-1}.

Subsets are stored as bitmasks (bit i set iff point i is a member), so all
set operations are single machine-word operations.  Families of subsets are
canonicalized on construction (sorted ascending by bitmask, deduplicated),
which makes family equality plain sequence equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    CarrierMismatch,
    CarrierTooLarge,
    EmptyFamilyIntersection,
    NotAPartition,
)

#: Largest supported carrier: a subset fits one machine word and a full
#: power-set scan stays at most 2**24 iterations.
MAX_CARRIER = 24


def check_carrier(n: int) -> None:
    if not 0 <= n <= MAX_CARRIER:
        raise CarrierTooLarge(f"carrier size {n} outside 0..{MAX_CARRIER}")


def same_carrier(*sizes: int) -> int:
    first = sizes[0]
    for n in sizes[1:]:
        if n != first:
            raise CarrierMismatch(f"carrier sizes differ: {sizes}")
    return first


@dataclass(frozen=True, slots=True)
class PointSet:
    """A subset of the carrier {0..n-1}, stored as a bitmask."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        check_carrier(self.n)
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bits {self.bits:#x} outside carrier of size {self.n}")

    @classmethod
    def of(cls, n: int, points: Iterable[int] = ()) -> "PointSet":
        bits = 0
        for p in points:
            if not 0 <= p < n:
                raise ValueError(f"point {p} outside carrier of size {n}")
            bits |= 1 << p
        return cls(bits, n)

    @classmethod
    def empty(cls, n: int) -> "PointSet":
        return cls(0, n)

    @classmethod
    def full(cls, n: int) -> "PointSet":
        return cls((1 << n) - 1, n)

    def points(self) -> tuple[int, ...]:
        return tuple(p for p in range(self.n) if self.bits >> p & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.points())

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, p: int) -> bool:
        return 0 <= p < self.n and bool(self.bits >> p & 1)

    def __or__(self, other: "PointSet") -> "PointSet":
        same_carrier(self.n, other.n)
        return PointSet(self.bits | other.bits, self.n)

    def __and__(self, other: "PointSet") -> "PointSet":
        same_carrier(self.n, other.n)
        return PointSet(self.bits & other.bits, self.n)

    def __sub__(self, other: "PointSet") -> "PointSet":
        same_carrier(self.n, other.n)
        return PointSet(self.bits & ~other.bits, self.n)

    def __le__(self, other: "PointSet") -> bool:
        same_carrier(self.n, other.n)
        return self.bits & ~other.bits == 0

    def __lt__(self, other: "PointSet") -> bool:
        return self <= other and self.bits != other.bits

    def issubset(self, other: "PointSet") -> bool:
        return self <= other

    def isdisjoint(self, other: "PointSet") -> bool:
        same_carrier(self.n, other.n)
        return self.bits & other.bits == 0

    def complement(self) -> "PointSet":
        return PointSet(~self.bits & (1 << self.n) - 1, self.n)

    def __repr__(self) -> str:
        return f"PointSet({{{','.join(map(str, self.points()))}}}, n={self.n})"


@dataclass(frozen=True, slots=True)
class Family:
    """A canonical (sorted, deduplicated) sequence of subsets of one carrier."""

    members: tuple[PointSet, ...]
    n: int

    def __post_init__(self) -> None:
        check_carrier(self.n)
        prev = -1
        for m in self.members:
            if m.n != self.n:
                raise CarrierMismatch(
                    f"member over carrier {m.n} in family over carrier {self.n}"
                )
            if m.bits <= prev:
                raise ValueError("family members must be strictly increasing by bitmask")
            prev = m.bits

    @classmethod
    def of(cls, n: int, members: Iterable[PointSet | int | Iterable[int]]) -> "Family":
        """Build a canonical family; members may be PointSets, bitmasks, or
        iterables of point indices."""
        masks = set()
        for m in members:
            if isinstance(m, PointSet):
                same_carrier(m.n, n)
                masks.add(m.bits)
            elif isinstance(m, int):
                masks.add(PointSet(m, n).bits)
            else:
                masks.add(PointSet.of(n, m).bits)
        return cls(tuple(PointSet(b, n) for b in sorted(masks)), n)

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(m.bits for m in self.members)

    def __iter__(self) -> Iterator[PointSet]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item: PointSet | int) -> bool:
        bits = item.bits if isinstance(item, PointSet) else item
        return any(m.bits == bits for m in self.members)

    def __repr__(self) -> str:
        inner = ",".join("{%s}" % ",".join(map(str, m.points())) for m in self.members)
        return f"Family([{inner}], n={self.n})"


def family_union(fam: Family) -> PointSet:
    """Union of all members; the empty family yields the empty set."""
    bits = 0
    for m in fam.members:
        bits |= m.bits
    return PointSet(bits, fam.n)


def family_intersection(fam: Family) -> PointSet:
    """Intersection of all members; undefined (raises) for the empty family."""
    if not fam.members:
        raise EmptyFamilyIntersection("intersection of an empty family is undefined")
    bits = (1 << fam.n) - 1
    for m in fam.members:
        bits &= m.bits
    return PointSet(bits, fam.n)


def subsets_iter(n: int) -> Iterator[PointSet]:
    """All 2**n subsets of the carrier, exactly once, ascending by bitmask."""
    check_carrier(n)
    for bits in range(1 << n):
        yield PointSet(bits, n)


@dataclass(frozen=True, slots=True)
class Partition:
    """Pairwise-disjoint nonempty blocks covering the carrier.

    Blocks are ordered by their smallest member, which fixes the block
    indexing used by quotients and component decompositions.
    """

    blocks: tuple[PointSet, ...]
    n: int

    def __post_init__(self) -> None:
        check_carrier(self.n)
        seen = 0
        for b in self.blocks:
            if b.n != self.n:
                raise CarrierMismatch("block carrier mismatch")
            if b.bits == 0:
                raise NotAPartition("empty block")
            if seen & b.bits:
                raise NotAPartition("blocks overlap")
            seen |= b.bits
        if seen != (1 << self.n) - 1:
            raise NotAPartition("blocks do not cover the carrier")
        lows = [(b.bits & -b.bits) for b in self.blocks]
        if lows != sorted(lows):
            raise NotAPartition("blocks must be ordered by smallest member")

    @classmethod
    def of(cls, n: int, blocks: Iterable[PointSet | int | Iterable[int]]) -> "Partition":
        sets = []
        for b in blocks:
            if isinstance(b, PointSet):
                sets.append(b)
            elif isinstance(b, int):
                sets.append(PointSet(b, n))
            else:
                sets.append(PointSet.of(n, b))
        sets.sort(key=lambda b: b.bits & -b.bits if b.bits else -1)
        return cls(tuple(sets), n)

    def block_index(self) -> tuple[int, ...]:
        """Per-point index of the containing block."""
        idx = [0] * self.n
        for i, b in enumerate(self.blocks):
            for p in b.points():
                idx[p] = i
        return tuple(idx)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self) -> Iterator[PointSet]:
        return iter(self.blocks)
