"""Acceptance suite: quantitative anchors, theorem sweeps, constructor laws,
cover optimality, CLI goldens, and fault injection.

Each timed criterion states its wall-clock budget inline; budgets are
generous for CI noise but tight enough to catch algorithmic regressions.
"""

import itertools
import json
import time

import pytest

from fintop import (
    Family,
    Partition,
    PointSet,
    alexandroff,
    closure,
    count_topologies,
    discrete,
    find_homeomorphism,
    minimal_subcover,
    product,
    quotient,
    separation_report,
    space,
    subspace,
    sweep_theorems,
    t1_minimum,
)
from fintop.cli import cli_dispatch
from fintop.covers import classify_cover
from fintop.enumeration import (
    EnumConfig,
    SWEEP_CORE,
    all_spaces,
    canonical_form,
    enumerate_topologies,
    topologies_naive,
)

EXPECTED_COUNTS = {0: 1, 1: 1, 2: 4, 3: 29, 4: 355}


class TestCriterion1Counts:
    def test_small_counts_fast(self):
        # n <= 3: both generators agree with the known values, under 1 s.
        start = time.perf_counter()
        for n in range(4):
            assert count_topologies(n) == EXPECTED_COUNTS[n]
            assert len(topologies_naive(n)) == EXPECTED_COUNTS[n]
        assert time.perf_counter() - start < 1.0

    def test_n4_counts(self):
        # n = 4: both generators agree exactly, under 60 s.
        start = time.perf_counter()
        assert count_topologies(4) == EXPECTED_COUNTS[4]
        assert len(topologies_naive(4)) == EXPECTED_COUNTS[4]
        assert time.perf_counter() - start < 60.0


class TestCriterion2HomeoClasses:
    def test_two_methods_agree(self):
        # Partition the 29 labeled topologies on 3 points into classes via
        # find_homeomorphism, and independently count canonical-orbit
        # representatives; exact agreement, under 10 s.
        start = time.perf_counter()
        spaces = all_spaces(3)
        reps = []
        for s in spaces:
            for r in reps:
                if find_homeomorphism(s, r) is not None:
                    break
            else:
                reps.append(s)
        canonical = list(enumerate_topologies(EnumConfig(3, "up_to_homeomorphism")))
        assert len(reps) == len(canonical) == 9
        # every labeled topology is homeomorphic to exactly one representative
        for s in spaces:
            matches = [r for r in canonical if find_homeomorphism(s, r) is not None]
            assert len(matches) == 1
            assert canonical_form(3, s.opens.masks) == matches[0].opens.masks
        assert time.perf_counter() - start < 10.0


class TestCriterion3SingleSpaceSweep:
    def test_core_sweep_n3(self):
        # Zero violations over all 29 topologies x all 8 subsets; the timed
        # core (operator identities + density/connectedness/separation/
        # compactness/Alexandroff/metric facts) runs under 5 s.
        start = time.perf_counter()
        report = sweep_theorems(3, theorems=SWEEP_CORE, include_maps=False)
        elapsed = time.perf_counter() - start
        bad = {k: v for k, v in report.items() if not v["ok"]}
        assert not bad, bad
        assert elapsed < 5.0

    def test_full_single_space_sweep_n3(self):
        report = sweep_theorems(3, include_maps=False)
        bad = {k: v for k, v in report.items() if not v["ok"]}
        assert not bad, bad

    def test_spot_sweep_n4_operator_identities(self):
        # all 355 topologies on 4 points, operator identities only
        report = sweep_theorems(4, include_maps=False)
        bad = {k: v for k, v in report.items() if not v["ok"]}
        assert not bad, bad


class TestCriterion4MapSweep:
    def test_map_quantified_sweep_n3(self):
        # All ordered pairs of 3-point topologies x all 27 map tables:
        # continuity equivalences, open/closed-map characterizations,
        # pasting, image-of-connected/compact/dense, homeomorphism
        # transport, Hausdorff limit uniqueness.  Under 120 s.
        start = time.perf_counter()
        report = sweep_theorems(3)
        elapsed = time.perf_counter() - start
        bad = {k: v for k, v in report.items() if not v["ok"]}
        assert not bad, bad
        assert elapsed < 120.0


class TestCriterion5T1Rigidity:
    def test_t1_iff_discrete(self):
        for n in range(4):
            for s in all_spaces(n):
                assert separation_report(s).t1 == (s == discrete(n))
            assert t1_minimum(n) == discrete(n)


class TestCriterion6ConstructorLaws:
    def test_laws(self):
        start = time.perf_counter()
        one = space(1, [0, 1])
        for n in range(4):
            for s in all_spaces(n):
                # product-unit homeomorphism
                p, _ = product(s, one)
                assert find_homeomorphism(p, s) is not None
                # quotient by singletons
                if n > 0:
                    q, _ = quotient(s, Partition.of(n, [[p_] for p_ in range(n)]))
                    assert find_homeomorphism(q, s) is not None
                # alexandroff restitution
                ext = alexandroff(s)
                sub, _ = subspace(ext, PointSet((1 << n) - 1, ext.n))
                assert sub.opens.masks == s.opens.masks
        # subspace transitivity over all chains Y' subset Y subset X at n = 3
        for s in all_spaces(3):
            for y in range(8):
                Y = PointSet(y, 3)
                sub1, inc1 = subspace(s, Y)
                for z in range(1 << len(Y)):
                    Z = PointSet(z, sub1.n)
                    sub2, inc2 = subspace(sub1, Z)
                    direct, inc3 = subspace(
                        s, PointSet.of(3, [inc1.table[p] for p in Z])
                    )
                    assert sub2 == direct
                    assert tuple(inc1.table[p] for p in inc2.table) == inc3.table
        assert time.perf_counter() - start < 10.0


class TestCriterion7MinimalSubcover:
    def test_optimal_vs_exhaustive(self):
        # All covers of size <= 4 over every n <= 3 space; under 10 s.
        start = time.perf_counter()
        for n in range(4):
            masks_pool = list(range(1, 1 << n)) or [0]
            for s in all_spaces(n):
                for size in range(1, 5):
                    for members in itertools.combinations(masks_pool, size):
                        C = Family.of(n, members)
                        if not classify_cover(s, C).is_cover:
                            continue
                        out = minimal_subcover(s, C)
                        best = min(
                            len(sub)
                            for k in range(len(C.masks) + 1)
                            for sub in itertools.combinations(C.masks, k)
                            if classify_cover(s, Family.of(n, sub)).is_cover
                        )
                        assert len(out) == best
        assert time.perf_counter() - start < 10.0


class TestCriterion8CliGoldens:
    def test_goldens_are_byte_identical(self, tmp_path, monkeypatch, capsys):
        # The 12 fixed transcripts live in test_cli.GOLDENS; here we assert
        # cross-run stability of all of them in one process.
        from test_cli import FILES, GOLDENS

        for name, text in FILES.items():
            (tmp_path / name).write_text(text)
        monkeypatch.chdir(tmp_path)
        assert len(GOLDENS) == 12
        for argv, expected, code in GOLDENS:
            for _ in range(2):
                got = cli_dispatch(argv)
                out = capsys.readouterr().out.rstrip("\n")
                assert out == expected, argv
                assert got == code, argv


class TestCriterion9FaultInjection:
    def test_corrupted_closure_surfaces_named_failure(self):
        def bad_closure(s, A):
            good = closure(s, A)
            full = (1 << s.n) - 1
            bits = (good.bits + 1) & full if good.bits != full else good.bits
            return PointSet(bits, s.n)

        report = sweep_theorems(
            3, overrides={"closure": bad_closure}, include_maps=False
        )
        failed = {k: v for k, v in report.items() if not v["ok"]}
        assert "closure_idempotent" in failed
        for name, rec in failed.items():
            assert rec["counterexample"], name
            # counterexamples serialize the offending space
            assert '"opens"' in rec["counterexample"]

    def test_corrupted_interior_surfaces_named_failure(self):
        def bad_interior(s, A):
            from fintop import interior

            good = interior(s, A)
            full = (1 << s.n) - 1
            bits = (good.bits + 1) & full if good.bits != full else good.bits
            return PointSet(bits, s.n)

        report = sweep_theorems(
            2, overrides={"interior": bad_interior}, include_maps=False
        )
        failed = {k for k, v in report.items() if not v["ok"]}
        assert "interior_idempotent" in failed
