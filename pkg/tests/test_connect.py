import itertools

from fintop import (
    Partition,
    PointSet,
    boundary,
    check_map,
    closure,
    component_partition,
    components,
    discrete,
    find_homeomorphism,
    indiscrete,
    is_connected,
    is_connected_set,
    is_finer,
    is_locally_connected,
    is_locally_connected_at,
    is_totally_disconnected,
    mcp,
    product,
    quotient,
    space,
    subspace,
)
from fintop.enumeration import all_spaces
from fintop.maps import FiniteMap


class TestIsConnected:
    def test_examples(self, sierpinski):
        for n in range(5):
            assert is_connected(indiscrete(n))
        assert not is_connected(discrete(2))
        assert is_connected(sierpinski)

    def test_clopen_characterization(self):
        from fintop import clopen_sets

        for s in all_spaces(3):
            trivial = set(clopen_sets(s).masks) == {0, 0b111}
            assert is_connected(s) == trivial


class TestConnectedSets:
    def test_empty_and_singletons(self, sierpinski):
        for s in all_spaces(3):
            assert is_connected_set(s, PointSet.empty(3))
            for p in range(3):
                assert is_connected_set(s, PointSet.of(3, [p]))

    def test_matches_subspace(self):
        for s in all_spaces(3):
            for m in range(8):
                A = PointSet(m, 3)
                sub, _ = subspace(s, A)
                assert is_connected_set(s, A) == is_connected(sub)

    def test_union_laws(self):
        for s in all_spaces(3):
            conn = [m for m in range(8) if is_connected_set(s, PointSet(m, 3))]
            for a in conn:
                for b in conn:
                    A, B = PointSet(a, 3), PointSet(b, 3)
                    if A & closure(s, B) or B & closure(s, A):
                        assert is_connected_set(s, A | B)

    def test_between_set_and_closure(self):
        for s in all_spaces(3):
            for a in range(8):
                A = PointSet(a, 3)
                if not is_connected_set(s, A):
                    continue
                cl = closure(s, A)
                for b in range(8):
                    B = PointSet(b, 3)
                    if A <= B and B <= cl:
                        assert is_connected_set(s, B)

    def test_boundary_characterization(self):
        # space connected iff only the trivial subsets have empty boundary
        for s in all_spaces(3):
            trivial_only = all(
                boundary(s, PointSet(m, 3)) or m in (0, 0b111) for m in range(8)
            )
            assert is_connected(s) == trivial_only

    def test_coarsening_preserves_connectedness(self):
        for s1 in all_spaces(3):
            for s2 in all_spaces(3):
                if is_finer(s1, s2) and is_connected(s1):
                    assert is_connected(s2)


class TestComponents:
    def test_empty_space(self):
        assert components(space(0, [0])).blocks == ()

    def test_discrete(self):
        d = components(discrete(3))
        assert [b.points() for b in d.blocks] == [(0,), (1,), (2,)]
        assert d.index == (0, 1, 2)

    def test_sierpinski(self, sierpinski):
        d = components(sierpinski)
        assert [b.points() for b in d.blocks] == [(0, 1)]

    def test_structure(self):
        for s in all_spaces(3):
            d = components(s)
            seen = PointSet.empty(3)
            for b in d.blocks:
                assert is_connected_set(s, b)
                assert b.bits in s.closeds
                assert not (seen & b)
                seen = seen | b
            assert seen == PointSet.full(3)
            assert component_partition(s) == Partition.of(
                3, [b.points() for b in d.blocks]
            )

    def test_homeomorphic_spaces_same_component_count(self):
        for s1 in all_spaces(3):
            for s2 in all_spaces(3):
                if find_homeomorphism(s1, s2) is not None:
                    assert len(components(s1).blocks) == len(components(s2).blocks)


class TestMcp:
    def test_examples(self, sierpinski):
        assert mcp(discrete(3), PointSet.of(3, [1])).points() == (1,)
        assert mcp(sierpinski, PointSet.of(2, [0])).points() == (0, 1)

    def test_empty_argument(self):
        # union of all connected supersets of the empty set is the carrier
        for s in all_spaces(3):
            assert mcp(s, PointSet.empty(3)) == PointSet.full(3)

    def test_singleton_gives_component(self):
        for s in all_spaces(3):
            d = components(s)
            for p in range(3):
                assert mcp(s, PointSet.of(3, [p])) == d.blocks[d.index[p]]


class TestTotallyDisconnected:
    def test_examples(self):
        assert is_totally_disconnected(discrete(4))
        assert is_totally_disconnected(space(1, [0, 1]))
        assert not is_totally_disconnected(indiscrete(2))

    def test_characterization(self):
        for s in all_spaces(3):
            expected = all(
                len(PointSet(m, 3)) <= 1
                for m in range(8)
                if is_connected_set(s, PointSet(m, 3))
            )
            assert is_totally_disconnected(s) == expected


class TestLocallyConnected:
    def test_examples(self, sierpinski):
        assert is_locally_connected(discrete(4))
        assert is_locally_connected(indiscrete(3))
        assert is_locally_connected(sierpinski)

    def test_pointwise_equivalence(self):
        for s in all_spaces(3):
            assert is_locally_connected(s) == all(
                is_locally_connected_at(s, p) for p in range(3)
            )


class TestTransport:
    def test_continuous_image_connected(self):
        for s1 in all_spaces(2):
            for s2 in all_spaces(2):
                for table in itertools.product(range(2), repeat=2):
                    f = FiniteMap.of(2, 2, table)
                    if not check_map(f, s1, s2).continuous:
                        continue
                    for m in range(4):
                        A = PointSet(m, 2)
                        if is_connected_set(s1, A):
                            assert is_connected_set(s2, f.image(A))

    def test_products_and_quotients_of_connected(self):
        for s1 in all_spaces(2):
            if not is_connected(s1):
                continue
            for s2 in all_spaces(2):
                if is_connected(s2):
                    p, _ = product(s1, s2)
                    assert is_connected(p)
            q, _ = quotient(s1, Partition.of(2, [[0, 1]]))
            assert is_connected(q)
            q, _ = quotient(s1, Partition.of(2, [[0], [1]]))
            assert is_connected(q)
