import itertools

import pytest

from fintop import (
    CarrierMismatch,
    FiniteMap,
    NotALimitPoint,
    PointSet,
    check_map,
    closure,
    discrete,
    embeddings_equivalent,
    find_homeomorphism,
    homeomorphic,
    indiscrete,
    is_continuous_at,
    limits_at,
    point_roles,
    restrict,
    space,
    subspace,
)
from fintop.enumeration import all_spaces


def all_maps(n1, n2):
    for table in itertools.product(range(n2), repeat=n1):
        yield FiniteMap.of(n1, n2, table)


class TestCheckMap:
    def test_identity(self, sierpinski):
        r = check_map(FiniteMap.identity(2), sierpinski, sierpinski)
        assert r.continuous and r.open_map and r.closed_map
        assert r.homeomorphism and r.embedding

    def test_constant(self, sierpinski, three_point):
        for v in range(3):
            r = check_map(FiniteMap.constant(2, 3, v), sierpinski, three_point)
            assert r.continuous

    def test_identity_between_topologies(self):
        ident = FiniteMap.identity(2)
        assert not check_map(ident, indiscrete(2), discrete(2)).continuous
        assert check_map(ident, discrete(2), indiscrete(2)).continuous

    def test_report_invariants(self):
        # homeomorphism <=> bijective + continuous + open <=> ... + closed
        for s1 in all_spaces(2):
            for s2 in all_spaces(2):
                for f in all_maps(2, 2):
                    r = check_map(f, s1, s2)
                    bij = r.injective and r.surjective
                    assert r.homeomorphism == (bij and r.continuous and r.open_map)
                    assert r.homeomorphism == (bij and r.continuous and r.closed_map)
                    if r.homeomorphism:
                        assert r.embedding

    def test_carrier_mismatch(self, sierpinski):
        with pytest.raises(CarrierMismatch):
            check_map(FiniteMap.identity(3), sierpinski, sierpinski)


class TestLocalContinuity:
    def test_discrete_domain(self, sierpinski):
        for f in all_maps(2, 2):
            for p in range(2):
                assert is_continuous_at(f, discrete(2), sierpinski, p)

    def test_indiscrete_codomain(self, sierpinski):
        for f in all_maps(2, 2):
            for p in range(2):
                assert is_continuous_at(f, sierpinski, indiscrete(2), p)

    def test_sierpinski_swap(self, sierpinski):
        swap = FiniteMap.of(2, 2, (1, 0))
        # f(0)=1 has the open neighborhood {1}, but every neighborhood of 0
        # contains 1 and maps onto {0,1}
        assert not is_continuous_at(swap, sierpinski, sierpinski, 0)
        assert is_continuous_at(swap, sierpinski, sierpinski, 1)

    def test_local_equals_global(self):
        for s1 in all_spaces(2):
            for s2 in all_spaces(2):
                for f in all_maps(2, 2):
                    everywhere = all(
                        is_continuous_at(f, s1, s2, p) for p in range(2)
                    )
                    assert everywhere == check_map(f, s1, s2).continuous


class TestRestrict:
    def test_identity_full(self, sierpinski):
        g = restrict(FiniteMap.identity(2), sierpinski, sierpinski, PointSet.full(2))
        assert g.table == (0, 1)

    def test_empty(self, sierpinski):
        g = restrict(FiniteMap.identity(2), sierpinski, sierpinski, PointSet.empty(2))
        assert g.table == ()

    def test_restriction_of_continuous_is_continuous(self):
        for s1 in all_spaces(3):
            for s2 in all_spaces(2):
                for f in all_maps(3, 2):
                    if not check_map(f, s1, s2).continuous:
                        continue
                    for a in range(8):
                        A = PointSet(a, 3)
                        sub, _ = subspace(s1, A)
                        g = restrict(f, s1, s2, A)
                        assert check_map(g, sub, s2).continuous


class TestLimits:
    def test_indiscrete_codomain_full(self, sierpinski):
        A = PointSet.of(2, [1])
        f = FiniteMap.of(1, 3, (0,))
        out = limits_at(sierpinski, A, f, indiscrete(3), 0)
        assert out == PointSet.full(3)

    def test_discrete_codomain(self):
        A = PointSet.of(2, [1])
        f = FiniteMap.of(1, 2, (0,))
        out = limits_at(indiscrete(2), A, f, discrete(2), 0)
        assert out.points() == (0,)

    def test_not_a_limit_point(self):
        A = PointSet.of(2, [1])
        f = FiniteMap.of(1, 2, (0,))
        with pytest.raises(NotALimitPoint):
            limits_at(discrete(2), A, f, discrete(2), 0)

    def test_hausdorff_uniqueness(self):
        from fintop import separation_report

        for s1 in all_spaces(3):
            for s2 in all_spaces(2):
                if not separation_report(s2).t2:
                    continue
                for a in range(8):
                    A = PointSet(a, 3)
                    for p in range(3):
                        if not point_roles(s1, A, p).limit:
                            continue
                        for f in all_maps(len(A), 2):
                            assert len(limits_at(s1, A, f, s2, p)) <= 1


class TestFindHomeomorphism:
    def test_self_identity(self, sierpinski, three_point):
        for s in (sierpinski, three_point, discrete(3)):
            w = find_homeomorphism(s, s)
            assert w is not None and w.table == tuple(range(s.n))

    def test_sierpinski_mirror(self, sierpinski, mirror_sierpinski):
        w = find_homeomorphism(sierpinski, mirror_sierpinski)
        assert w is not None and w.table == (1, 0)

    def test_none(self):
        assert find_homeomorphism(discrete(2), indiscrete(2)) is None
        assert not homeomorphic(discrete(2), indiscrete(2))

    def test_witness_is_homeomorphism(self):
        for s1 in all_spaces(3):
            for s2 in all_spaces(3):
                w = find_homeomorphism(s1, s2)
                if w is not None:
                    assert check_map(w, s1, s2).homeomorphism
                else:
                    for perm in itertools.permutations(range(3)):
                        f = FiniteMap.of(3, 3, perm)
                        assert not check_map(f, s1, s2).homeomorphism

    def test_equivalence_relation(self):
        spaces = all_spaces(3)
        for s1 in spaces:
            assert homeomorphic(s1, s1)
        for s1 in spaces:
            for s2 in spaces:
                assert homeomorphic(s1, s2) == homeomorphic(s2, s1)


class TestCompositionLaws:
    def test_composition(self):
        for s1 in all_spaces(2):
            for s2 in all_spaces(2):
                for s3 in all_spaces(2):
                    for f in all_maps(2, 2):
                        for g in all_maps(2, 2):
                            rf = check_map(f, s1, s2)
                            rg = check_map(g, s2, s3)
                            rc = check_map(g.compose(f), s1, s3)
                            if rf.continuous and rg.continuous:
                                assert rc.continuous
                            if rf.homeomorphism and rg.homeomorphism:
                                assert rc.homeomorphism

    def test_inverse_of_homeomorphism(self, sierpinski, mirror_sierpinski):
        w = find_homeomorphism(sierpinski, mirror_sierpinski)
        r = check_map(w.inverse(), mirror_sierpinski, sierpinski)
        assert r.homeomorphism


class TestEmbeddings:
    def test_inclusion_is_embedding(self):
        for s in all_spaces(3):
            for y in range(1, 8):
                Y = PointSet(y, 3)
                sub, inc = subspace(s, Y)
                assert check_map(inc, sub, s).embedding

    def test_transport_by_homeomorphism(self, sierpinski, mirror_sierpinski):
        w = find_homeomorphism(sierpinski, mirror_sierpinski)
        for m in range(4):
            A = PointSet(m, 2)
            assert w.image(closure(sierpinski, A)) == closure(
                mirror_sierpinski, w.image(A)
            )

    def test_embeddings_equivalent(self, sierpinski):
        one = space(1, [0, 1])
        e0 = FiniteMap.of(1, 2, (0,))
        e1 = FiniteMap.of(1, 2, (1,))
        # Sierpinski has a trivial automorphism group, so the two point
        # inclusions are inequivalent; each is equivalent to itself.
        assert embeddings_equivalent(one, sierpinski, e0, e0)
        assert not embeddings_equivalent(one, sierpinski, e0, e1)
        assert embeddings_equivalent(one, discrete(2), e0, e1)


class TestDenseImage:
    def test_surjective_continuous_image_of_dense_is_dense(self):
        from fintop import density_report

        for s1 in all_spaces(2):
            for s2 in all_spaces(2):
                for f in all_maps(2, 2):
                    r = check_map(f, s1, s2)
                    if not (r.continuous and r.surjective):
                        continue
                    for m in range(4):
                        A = PointSet(m, 2)
                        if density_report(s1, A).dense:
                            assert density_report(s2, f.image(A)).dense
