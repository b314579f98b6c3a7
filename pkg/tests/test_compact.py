import itertools

import pytest

from fintop import (
    CodomainNotHausdorff,
    FiniteMap,
    Partition,
    PointSet,
    check_map,
    closure,
    compactness_report,
    discrete,
    find_homeomorphism,
    hausdorff_compact_checks,
    indiscrete,
    is_compact,
    is_compact_set,
    is_locally_compact,
    product,
    quotient,
    space,
    subspace,
)
from fintop.enumeration import all_spaces


class TestCompactness:
    def test_all_finite_spaces_compact(self):
        for n in range(4):
            for s in all_spaces(n):
                assert is_compact(s)
                assert is_locally_compact(s)

    def test_empty_set_compact(self, sierpinski):
        assert is_compact_set(sierpinski, PointSet.empty(2))

    def test_compact_set_matches_subspace(self):
        for s in all_spaces(3):
            for m in range(8):
                A = PointSet(m, 3)
                sub, _ = subspace(s, A)
                assert is_compact_set(s, A) == is_compact(sub)

    def test_report(self, sierpinski):
        r = compactness_report(sierpinski)
        assert r.compact and r.locally_compact and r.exhaustive_scan
        assert r.witness_cover_stats["all_opens_minimal_subcover"] == 1

    def test_closed_subset_of_compact_is_compact(self):
        for s in all_spaces(3):
            for m in s.closeds.masks:
                assert is_compact_set(s, PointSet(m, 3))

    def test_union_intersection_laws(self):
        for s in all_spaces(3):
            for a in range(8):
                for b in range(8):
                    A, B = PointSet(a, 3), PointSet(b, 3)
                    if is_compact_set(s, A) and is_compact_set(s, B):
                        assert is_compact_set(s, A | B)


class TestHausdorffChecks:
    def test_codomain_not_hausdorff(self, sierpinski):
        with pytest.raises(CodomainNotHausdorff):
            hausdorff_compact_checks(sierpinski, sierpinski, FiniteMap.identity(2))

    def test_implications_always_hold(self):
        d = discrete(2)
        for s1 in all_spaces(2):
            for table in itertools.product(range(2), repeat=2):
                f = FiniteMap.of(2, 2, table)
                out = hausdorff_compact_checks(s1, d, f)
                assert all(out.values())

    def test_compact_set_in_hausdorff_is_closed(self):
        # finite Hausdorff = discrete, so every subset is closed; asserted
        # through the predicates rather than assumed
        for n in range(4):
            d = discrete(n)
            for m in range(1 << n):
                A = PointSet(m, n)
                if is_compact_set(d, A):
                    assert A.bits in d.closeds

    def test_disjoint_compacts_have_disjoint_neighborhoods(self):
        d = discrete(3)
        for a in range(8):
            for b in range(8):
                if a & b or not a or not b:
                    continue
                found = any(
                    a & ~u == 0 and b & ~w == 0 and not u & w
                    for u in d.opens.masks
                    for w in d.opens.masks
                )
                assert found


class TestTransport:
    def test_continuous_image_compact(self):
        for s1 in all_spaces(2):
            for s2 in all_spaces(2):
                for table in itertools.product(range(2), repeat=2):
                    f = FiniteMap.of(2, 2, table)
                    if not check_map(f, s1, s2).continuous:
                        continue
                    for m in range(4):
                        A = PointSet(m, 2)
                        if is_compact_set(s1, A):
                            assert is_compact_set(s2, f.image(A))

    def test_topological_property(self):
        for s1 in all_spaces(3):
            for s2 in all_spaces(3):
                if find_homeomorphism(s1, s2) is not None:
                    assert is_compact(s1) == is_compact(s2)

    def test_products_quotients(self):
        for s1 in all_spaces(2):
            for s2 in all_spaces(2):
                p, _ = product(s1, s2)
                assert is_compact(p)
            q, _ = quotient(s1, Partition.of(2, [[0, 1]]))
            assert is_compact(q)
