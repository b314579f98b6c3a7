import pytest
from hypothesis import given
from hypothesis import strategies as st

from fintop import (
    CarrierMismatch,
    CarrierTooLarge,
    EmptyFamilyIntersection,
    Family,
    Partition,
    PointSet,
    family_intersection,
    family_union,
    subsets_iter,
)
from fintop.errors import NotAPartition


class TestPointSet:
    def test_of_and_points(self):
        A = PointSet.of(3, [2, 0])
        assert A.bits == 0b101
        assert A.points() == (0, 2)
        assert list(A) == [0, 2]
        assert len(A) == 2
        assert 0 in A and 1 not in A

    def test_carrier_bounds(self):
        with pytest.raises(ValueError):
            PointSet(0b100, 2)
        with pytest.raises(CarrierTooLarge):
            PointSet.of(25, [0])
        with pytest.raises(ValueError):
            PointSet.of(2, [-1])

    def test_set_algebra(self):
        a = PointSet.of(3, [0, 1])
        b = PointSet.of(3, [1, 2])
        assert (a | b).points() == (0, 1, 2)
        assert (a & b).points() == (1,)
        assert (a - b).points() == (0,)
        assert a.complement().points() == (2,)
        assert not a <= b
        assert (a & b) <= a

    def test_complement_involution(self):
        for n in range(9):
            for m in range(1 << n):
                A = PointSet(m, n)
                assert A.complement().complement() == A

    def test_carrier_mismatch(self):
        with pytest.raises(CarrierMismatch):
            PointSet.of(2, [0]) | PointSet.of(3, [0])


class TestFamily:
    def test_canonicalization(self):
        fam = Family.of(2, [0b11, 0b01, 0b01, 0b00])
        assert fam.masks == (0b00, 0b01, 0b11)
        assert len(fam) == 3
        assert PointSet(0b01, 2) in fam
        assert 0b11 in fam

    def test_accepts_point_iterables(self):
        fam = Family.of(3, [[0, 1], [2]])
        assert fam.masks == (0b011, 0b100)

    def test_union(self):
        assert family_union(Family.of(3, [])).bits == 0
        assert family_union(Family.of(3, [[0], [1, 2]])).points() == (0, 1, 2)
        assert family_union(Family.of(3, [[0, 1], [1, 2]])).points() == (0, 1, 2)

    def test_intersection(self):
        assert family_intersection(Family.of(3, [[0, 1, 2]])).points() == (0, 1, 2)
        assert family_intersection(Family.of(3, [[0, 1], [1, 2]])).points() == (1,)
        with pytest.raises(EmptyFamilyIntersection):
            family_intersection(Family.of(3, []))

    @given(st.integers(0, 4), st.lists(st.integers(0, 15)))
    def test_union_intersection_bounds(self, n, raw):
        masks = [m & ((1 << n) - 1) for m in raw]
        fam = Family.of(n, masks)
        u = family_union(fam)
        for m in fam:
            assert m <= u
        if len(fam):
            i = family_intersection(fam)
            for m in fam:
                assert i <= m


class TestSubsetsIter:
    def test_small(self):
        assert [s.bits for s in subsets_iter(0)] == [0]
        assert [s.bits for s in subsets_iter(1)] == [0, 1]
        assert [s.bits for s in subsets_iter(2)] == [0, 1, 2, 3]

    def test_counts_and_order(self):
        for n in range(7):
            seen = [s.bits for s in subsets_iter(n)]
            assert seen == sorted(set(seen))
            assert len(seen) == 1 << n

    def test_cap(self):
        with pytest.raises(CarrierTooLarge):
            next(subsets_iter(25))


class TestPartition:
    def test_block_order_and_index(self):
        P = Partition.of(4, [[3, 1], [0, 2]])
        assert [b.points() for b in P.blocks] == [(0, 2), (1, 3)]
        assert P.block_index() == (0, 1, 0, 1)

    def test_rejects_non_partitions(self):
        with pytest.raises(NotAPartition):
            Partition.of(3, [[0, 1], [1, 2]])
        with pytest.raises(NotAPartition):
            Partition.of(3, [[0, 1]])
        with pytest.raises(NotAPartition):
            Partition.of(2, [[0, 1], []])
