"""Exhaustive generation of all topologies on a small carrier, plus the
theorem-regression sweep that quantifies the library's laws over them.

Two independent generators cross-validate each other: a minimal-open-set
(specialization preorder) enumerator used for production, and a naive
filter over every subset of the power set.  Enumeration correctness
anchors the entire regression suite, so both are kept.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Optional, Union

from . import compact as compact_mod
from . import connect as connect_mod
from . import construct as construct_mod
from . import covers as covers_mod
from . import maps as maps_mod
from . import operators as operators_mod
from . import separation as separation_mod
from .carrier import Family, Partition, PointSet, subsets_iter
from .errors import CarrierTooLarge
from .maps import FiniteMap
from .space import TopSpace, discrete, neighborhoods, space, validate_topology

#: Hard caps: labeled enumeration is exact up to 4 and best-effort at 5.
LABELED_CAP = 5
CLASS_CAP = 5

Predicate = Union[str, Callable[[TopSpace], bool], None]


@dataclass
class EnumConfig:
    n: int
    mode: str = "labeled"  # "labeled" | "up_to_homeomorphism"
    predicate: Predicate = None

    def __post_init__(self) -> None:
        if self.mode not in ("labeled", "up_to_homeomorphism"):
            raise ValueError(f"unknown mode {self.mode!r}")
        cap = LABELED_CAP if self.mode == "labeled" else CLASS_CAP
        if not 0 <= self.n <= cap:
            raise CarrierTooLarge(f"enumeration capped at n <= {cap}")


# -- generators ---------------------------------------------------------------


def _is_topology_masks(n: int, masks: frozenset[int]) -> bool:
    """Fast boolean axiom check on a set of bitmasks (no diagnostics)."""
    full = (1 << n) - 1
    if 0 not in masks or full not in masks:
        return False
    for a in masks:
        for b in masks:
            if a < b and (a & b not in masks or a | b not in masks):
                return False
    return True


@lru_cache(maxsize=None)
def topologies_naive(n: int) -> tuple[tuple[int, ...], ...]:
    """Every subset of the power set of the carrier, filtered through the
    axioms.  Exponential in 2**n; the independent cross-check generator."""
    if n > 4:
        raise CarrierTooLarge("naive filter capped at n <= 4")
    subsets = [ps.bits for ps in subsets_iter(n)]
    found = []
    for fam_bits in range(1 << len(subsets)):
        masks = frozenset(m for i, m in enumerate(subsets) if fam_bits >> i & 1)
        if _is_topology_masks(n, masks):
            found.append(tuple(sorted(masks)))
    return tuple(sorted(found))


def _minopen_scan(n: int, first: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Opens tuples from minimal-open assignments, optionally with the
    minimal open of point 0 fixed (the parallel partitioning key)."""
    if n == 0:
        yield (0,)
        return
    per_point = [
        [m for m in range(1 << n) if m >> p & 1] for p in range(n)
    ]
    if first is not None:
        per_point[0] = [first]
    for assign in itertools.product(*per_point):
        ok = True
        for p in range(n):
            up = assign[p]
            for q in range(n):
                if up >> q & 1 and assign[q] & ~up:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        yield tuple(
            m
            for m in range(1 << n)
            if all(assign[p] & ~m == 0 for p in range(n) if m >> p & 1)
        )


@lru_cache(maxsize=None)
def topologies_minopen(n: int) -> tuple[tuple[int, ...], ...]:
    """Enumerate topologies through their per-point minimal open sets.

    An assignment p -> U_p with p in U_p and (q in U_p implies U_q
    subseteq U_p) is exactly a specialization preorder; its topology is
    the family of sets that contain the minimal open of each of their
    points.  Distinct assignments give distinct topologies.
    """
    if n > LABELED_CAP:
        raise CarrierTooLarge(f"enumeration capped at n <= {LABELED_CAP}")
    return tuple(sorted(_minopen_scan(n)))


def _perm_image(perm, mask: int) -> int:
    bits = 0
    p = 0
    while mask:
        if mask & 1:
            bits |= 1 << perm[p]
        mask >>= 1
        p += 1
    return bits


def canonical_form(n: int, opens: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically least relabeling of the opens family."""
    best = None
    for perm in itertools.permutations(range(n)):
        cand = tuple(sorted(_perm_image(perm, m) for m in opens))
        if best is None or cand < best:
            best = cand
    return best if best is not None else tuple(sorted(opens))


PREDICATES: dict[str, Callable[[TopSpace], bool]] = {
    "t0": lambda s: separation_mod.separation_report(s).t0,
    "t1": lambda s: separation_mod.separation_report(s).t1,
    "t2": lambda s: separation_mod.separation_report(s).t2,
    "t3": lambda s: separation_mod.separation_report(s).t3,
    "t4": lambda s: separation_mod.separation_report(s).t4,
    "regular": lambda s: separation_mod.separation_report(s).regular,
    "normal": lambda s: separation_mod.separation_report(s).normal,
    "connected": connect_mod.is_connected,
    "totally_disconnected": connect_mod.is_totally_disconnected,
    "locally_connected": connect_mod.is_locally_connected,
    "compact": compact_mod.is_compact,
    "locally_compact": compact_mod.is_locally_compact,
    "metrizable": construct_mod.is_metrizable,
}


def _resolve_predicate(predicate: Predicate) -> Optional[Callable[[TopSpace], bool]]:
    if predicate is None:
        return None
    if callable(predicate):
        return predicate
    try:
        return PREDICATES[predicate]
    except KeyError:
        raise ValueError(f"unknown predicate {predicate!r}") from None


def enumerate_topologies(cfg: EnumConfig) -> Iterator[TopSpace]:
    """Yield each topology exactly once, ascending by opens family.

    In up_to_homeomorphism mode only the canonically least representative
    of each relabeling orbit is yielded.
    """
    pred = _resolve_predicate(cfg.predicate)
    all_opens = topologies_minopen(cfg.n)
    if cfg.mode == "up_to_homeomorphism":
        all_opens = tuple(
            o for o in all_opens if canonical_form(cfg.n, o) == o
        )
    for opens in all_opens:
        s = space(cfg.n, opens)
        if pred is None or pred(s):
            yield s


def count_topologies(n: int, predicate: Predicate = None) -> int:
    return sum(1 for _ in enumerate_topologies(EnumConfig(n, predicate=predicate)))


def _count_prefix(args: tuple[int, int, Optional[str]]) -> int:
    n, first, predicate = args
    pred = _resolve_predicate(predicate)
    count = 0
    for opens in _minopen_scan(n, first):
        if pred is None or pred(space(n, opens)):
            count += 1
    return count


def count_topologies_parallel(
    n: int, predicate: Optional[str] = None, processes: Optional[int] = None
) -> int:
    """Labeled count, partitioned across worker processes by the minimal
    open set of point 0.  Yield order is not defined here, the count is."""
    if not 0 <= n <= LABELED_CAP:
        raise CarrierTooLarge(f"enumeration capped at n <= {LABELED_CAP}")
    if n == 0:
        return count_topologies(0, predicate)
    import multiprocessing

    firsts = [m for m in range(1 << n) if m & 1]
    jobs = [(n, first, predicate) for first in firsts]
    with multiprocessing.Pool(processes) as pool:
        return sum(pool.map(_count_prefix, jobs))


@lru_cache(maxsize=None)
def all_spaces(n: int) -> tuple[TopSpace, ...]:
    return tuple(enumerate_topologies(EnumConfig(n)))


# -- theorem sweep ------------------------------------------------------------


def _ser(n: int, mask: int) -> list[int]:
    return [p for p in range(n) if mask >> p & 1]


def _ser_space(s: TopSpace) -> str:
    return json.dumps({"n": s.n, "opens": [_ser(s.n, m) for m in s.opens.masks]})


class _Ctx:
    """Per-space operator tables for one sweep run."""

    __slots__ = ("s", "n", "N", "full", "cl", "it", "opens", "closeds")

    def __init__(self, s: TopSpace, ops: dict) -> None:
        self.s = s
        self.n = s.n
        self.N = 1 << s.n
        self.full = self.N - 1
        self.cl = [ops["closure"](s, PointSet(m, s.n)).bits for m in range(self.N)]
        self.it = [ops["interior"](s, PointSet(m, s.n)).bits for m in range(self.N)]
        self.opens = set(s.opens.masks)
        self.closeds = set(s.closeds.masks)

    def ext(self, m: int) -> int:
        return self.it[self.full & ~m]

    def fr(self, m: int) -> int:
        return self.cl[m] & ~self.it[m]

    def cx(self, detail: str, *masks: int) -> str:
        sets = " ".join(str(_ser(self.n, m)) for m in masks)
        return f"{_ser_space(self.s)} sets {sets}: {detail}"


def _default_ops(overrides: Optional[dict]) -> dict:
    ops = {
        "closure": operators_mod.closure,
        "interior": operators_mod.interior,
    }
    if overrides:
        ops.update(overrides)
    return ops


# Each check takes the list of per-space contexts and returns the first
# counterexample found, or None.

def _chk_interior_idempotent(ctxs):
    for c in ctxs:
        for m in range(c.N):
            if c.it[c.it[m]] != c.it[m]:
                return c.cx("Int(Int(A)) != Int(A)", m)
    return None


def _chk_closure_idempotent(ctxs):
    for c in ctxs:
        for m in range(c.N):
            if c.cl[c.cl[m]] != c.cl[m]:
                return c.cx("Cl(Cl(A)) != Cl(A)", m)
    return None


def _chk_extensivity(ctxs):
    for c in ctxs:
        for m in range(c.N):
            if c.it[m] & ~m or m & ~c.cl[m]:
                return c.cx("Int(A) <= A <= Cl(A) broken", m)
    return None


def _chk_open_closed_fixpoints(ctxs):
    for c in ctxs:
        for m in range(c.N):
            if (c.it[m] == m) != (m in c.opens):
                return c.cx("Int(A)=A iff A open broken", m)
            if (c.cl[m] == m) != (m in c.closeds):
                return c.cx("Cl(A)=A iff A closed broken", m)
    return None


def _chk_interior_of_intersection(ctxs):
    for c in ctxs:
        for a in range(c.N):
            for b in range(c.N):
                if c.it[a & b] != c.it[a] & c.it[b]:
                    return c.cx("Int(A&B) != Int(A)&Int(B)", a, b)
    return None


def _chk_closure_of_union(ctxs):
    for c in ctxs:
        for a in range(c.N):
            for b in range(c.N):
                if c.cl[a | b] != c.cl[a] | c.cl[b]:
                    return c.cx("Cl(A|B) != Cl(A)|Cl(B)", a, b)
    return None


def _chk_exterior_of_union(ctxs):
    for c in ctxs:
        for a in range(c.N):
            for b in range(c.N):
                if c.ext(a | b) != c.ext(a) & c.ext(b):
                    return c.cx("Ext(A|B) != Ext(A)&Ext(B)", a, b)
    return None


def _chk_monotonicity(ctxs):
    for c in ctxs:
        for a in range(c.N):
            for b in range(c.N):
                if a & ~b:
                    continue
                if c.it[a] & ~c.it[b] or c.cl[a] & ~c.cl[b] or c.ext(b) & ~c.ext(a):
                    return c.cx("monotonicity broken for A <= B", a, b)
    return None


def _chk_frontier_identities(ctxs):
    for c in ctxs:
        for m in range(c.N):
            fr = c.fr(m)
            if fr != c.cl[m] & c.cl[c.full & ~m]:
                return c.cx("Fr(A) != Cl(A)&Cl(X-A)", m)
            if c.fr(c.full & ~m) != fr:
                return c.cx("Fr(X-A) != Fr(A)", m)
            it, ext = c.it[m], c.ext(m)
            if it | fr | ext != c.full or it & fr or it & ext or fr & ext:
                return c.cx("Int/Fr/Ext do not partition X", m)
            if c.cl[m] != it | fr or c.cl[m] != m | fr:
                return c.cx("Cl != Int|Fr or Cl != A|Fr", m)
    return None


def _chk_frontier_power(ctxs):
    for c in ctxs:
        for m in range(c.N):
            f2 = c.fr(c.fr(m))
            if c.fr(f2) != f2:
                return c.cx("Fr^3(A) != Fr^2(A)", m)
    return None


def _chk_interior_of_frontier(ctxs):
    for c in ctxs:
        for m in range(c.N):
            if (m in c.opens or m in c.closeds) and c.it[c.fr(m)]:
                return c.cx("Int(Fr(A)) != {} for open/closed A", m)
            if c.it[c.fr(c.cl[m])] or c.it[c.fr(c.it[m])]:
                return c.cx("Int(Fr(Cl(A))) or Int(Fr(Int(A))) nonempty", m)
    return None


def _chk_open_meets_closure(ctxs):
    for c in ctxs:
        for u in c.opens:
            for a in range(c.N):
                if u & c.cl[a] and not u & a:
                    return c.cx("open set meets Cl(A) but not A", u, a)
    return None


def _chk_dense_laws(ctxs):
    for c in ctxs:
        dense = [c.cl[m] == c.full for m in range(c.N)]
        for a in range(c.N):
            # dense iff A meets every nonempty open
            meets = all(u & a for u in c.opens if u)
            if dense[a] != meets:
                return c.cx("dense criterion mismatch", a)
            for b in range(c.N):
                if dense[a] and not dense[a | b]:
                    return c.cx("union of dense sets not dense", a, b)
                if dense[a] and dense[b] and a in c.opens and not dense[a & b]:
                    return c.cx("open-dense & dense not dense", a, b)
    return None


def _chk_nowhere_dense_laws(ctxs):
    for c in ctxs:
        nwd = [c.it[c.cl[m]] == 0 for m in range(c.N)]
        dense = [c.cl[m] == c.full for m in range(c.N)]
        for a in range(c.N):
            if nwd[a] != nwd[c.cl[a]]:
                return c.cx("A nwd iff Cl(A) nwd broken", a)
            if nwd[a] and not dense[c.full & ~a]:
                return c.cx("complement of nwd not dense", a)
            for b in range(c.N):
                if b & ~a == 0 and nwd[a] and not nwd[b]:
                    return c.cx("subset of nwd not nwd", a, b)
                if nwd[a] and nwd[b] and not nwd[a | b]:
                    return c.cx("union of nwd sets not nwd", a, b)
    return None


def _chk_dense_only_full_iff_discrete(ctxs):
    for c in ctxs:
        only_full = all(
            (c.cl[m] == c.full) == (m == c.full) for m in range(c.N)
        )
        if only_full != (len(c.opens) == c.N):
            return c.cx("sole-dense-set-is-X iff discrete broken")
    return None


def _chk_point_roles_match_operators(ctxs):
    for c in ctxs:
        s = c.s
        for m in range(c.N):
            A = PointSet(m, c.n)
            lim = operators_mod.limit_set(s, A).bits
            iso = operators_mod.isolated_set(s, A).bits
            if m | lim != c.cl[m]:
                return c.cx("Cl(A) != A | limit points", m)
            if (m & lim) & iso or ((m & lim) | iso) != m:
                return c.cx("limit/isolated split of A broken", m)
            for p in range(c.n):
                r = operators_mod.point_roles(s, A, p)
                pb = 1 << p
                if (
                    r.interior != bool(c.it[m] & pb)
                    or r.exterior != bool(c.ext(m) & pb)
                    or r.boundary != bool(c.fr(m) & pb)
                    or r.adherent != bool(c.cl[m] & pb)
                    or r.limit != bool(lim & pb)
                    or r.isolated != bool(iso & pb)
                ):
                    return c.cx(f"point role mismatch at p={p}", m)
                if sum((r.interior, r.exterior, r.boundary)) != 1:
                    return c.cx(f"role partition broken at p={p}", m)
                if r.adherent == r.exterior or (r.limit and r.isolated):
                    return c.cx(f"role invariants broken at p={p}", m)
    return None


def _chk_neighborhood_intersection(ctxs):
    for c in ctxs:
        s = c.s
        eq_everywhere = True
        for m in range(c.N):
            A = PointSet(m, c.n)
            inter = c.full
            for u in c.opens:
                if m & ~u == 0:
                    inter &= u
            if m & ~inter:
                return c.cx("A not inside intersection of its neighborhoods", m)
            if inter != m:
                eq_everywhere = False
        t1 = separation_mod.separation_report(s).t1
        if eq_everywhere != t1:
            return c.cx("nei-intersection equality iff T1 broken")
    return None


def _two_partitions(full: int):
    # unordered pairs (a, b) of disjoint nonempty sets with union = full
    seen = set()
    for a in range(1, full + 1):
        b = full & ~a
        if b == 0 or (b, a) in seen:
            continue
        seen.add((a, b))
        yield a, b


def _chk_connectedness_equivalences(ctxs):
    for c in ctxs:
        s = c.s
        conn = connect_mod.is_connected(s)
        no_open = not any(
            a in c.opens and b in c.opens for a, b in _two_partitions(c.full)
        )
        no_closed = not any(
            a in c.closeds and b in c.closeds for a, b in _two_partitions(c.full)
        )
        no_nonattached = not any(
            not (a & c.cl[b]) and not (b & c.cl[a])
            for a, b in _two_partitions(c.full)
        )
        only_trivial_empty_fr = all(
            (c.fr(m) == 0) == (m in (0, c.full)) for m in range(c.N)
        )
        if c.n == 0:
            # the empty carrier has no 2-partitions and one subset
            continue
        if not (conn == no_open == no_closed == no_nonattached == only_trivial_empty_fr):
            return c.cx(
                f"connectedness equivalences diverge: {conn},{no_open},"
                f"{no_closed},{no_nonattached},{only_trivial_empty_fr}"
            )
    return None


def _chk_connected_set_laws(ctxs):
    for c in ctxs:
        s = c.s
        conn = connect_mod.connected_set_masks(s)
        if 0 not in conn:
            return c.cx("empty set not connected")
        for p in range(c.n):
            if 1 << p not in conn:
                return c.cx(f"singleton {p} not connected")
        for a in conn:
            for b in range(c.N):
                if a & ~b == 0 and b & ~c.cl[a] == 0 and b not in conn:
                    return c.cx("A <= B <= Cl(A) with A connected, B not", a, b)
            for b in conn:
                if (a & c.cl[b] or b & c.cl[a]) and (a | b) not in conn:
                    return c.cx("touching connected sets with disconnected union", a, b)
        for a in conn:
            for pa, pb in _two_partitions(c.full):
                if pa in c.opens and pb in c.opens:
                    if a & pa and a & pb:
                        return c.cx("connected set split by open partition", a, pa)
    return None


def _chk_components(ctxs):
    for c in ctxs:
        s = c.s
        comp = connect_mod.components(s)
        conn = connect_mod.connected_set_masks(s)
        union = 0
        for block in comp.blocks:
            if block.bits not in conn:
                return c.cx("component not connected", block.bits)
            if block.bits not in c.closeds:
                return c.cx("component not closed", block.bits)
            if union & block.bits:
                return c.cx("components overlap", block.bits)
            union |= block.bits
        if union != c.full:
            return c.cx("components do not cover X")
        # components = maximal connected sets
        maximal = {
            a for a in conn if a and not any(b != a and a & ~b == 0 for b in conn)
        }
        if maximal != {b.bits for b in comp.blocks}:
            return c.cx("components differ from maximal connected sets")
    return None


def _chk_coarser_operator_comparison(ctxs):
    for c1 in ctxs:
        for c2 in ctxs:
            if not c2.opens <= c1.opens:
                continue  # require tau2 coarser than tau1
            if not c2.closeds <= c1.closeds:
                return c1.cx("coarser topology lost closed sets")
            for m in range(c1.N):
                if c2.it[m] & ~c1.it[m] or c1.cl[m] & ~c2.cl[m] or c1.fr(m) & ~c2.fr(m):
                    return c1.cx("operator comparison vs coarser topology broken", m)
    return None


def _chk_subspace_operator_comparison(ctxs):
    for c in ctxs:
        s = c.s
        for y in range(c.N):
            sub, inc = construct_mod.subspace(s, PointSet(y, c.n))
            for m in range(c.N):
                if m & ~y:
                    continue
                A_sub = inc.preimage(PointSet(m, c.n))
                it_y = inc.image(operators_mod.interior(sub, A_sub)).bits
                cl_y = inc.image(operators_mod.closure(sub, A_sub)).bits
                fr_y = inc.image(operators_mod.boundary(sub, A_sub)).bits
                ext_y = inc.image(operators_mod.exterior(sub, A_sub)).bits
                if c.it[m] & y & ~it_y:
                    return c.cx("Int_X(A)&Y not inside Int_Y(A)", y, m)
                if cl_y != y & c.cl[m]:
                    return c.cx("Cl_Y(A) != Y & Cl_X(A)", y, m)
                if fr_y & ~c.fr(m):
                    return c.cx("Fr_Y(A) not inside Fr_X(A)", y, m)
                if y & c.ext(m) & ~ext_y:
                    return c.cx("Y & Ext_X(A) not inside Ext_Y(A)", y, m)
    return None


def _chk_indistinguishability_equivalences(ctxs):
    for c in ctxs:
        s = c.s
        for p in range(c.n):
            for q in range(c.n):
                nei_eq = separation_mod.classify_pair(s, p, q).indistinguishable
                cnei_p = frozenset(m for m in c.closeds if m >> p & 1)
                cnei_q = frozenset(m for m in c.closeds if m >> q & 1)
                min_eq = s.min_open[p] == s.min_open[q]
                cl_eq = c.cl[1 << p] == c.cl[1 << q]
                if not (nei_eq == (cnei_p == cnei_q) == min_eq == cl_eq):
                    return c.cx(f"indistinguishability equivalences differ p={p} q={q}")
    return None


def _chk_t0_closure_injective(ctxs):
    for c in ctxs:
        t0 = separation_mod.separation_report(c.s).t0
        closures = [c.cl[1 << p] for p in range(c.n)]
        inj = len(set(closures)) == c.n
        if t0 != inj:
            return c.cx("T0 iff singleton-closure injective broken")
    return None


def _chk_t1_rigidity(ctxs):
    for c in ctxs:
        rep = separation_mod.separation_report(c.s)
        disc = len(c.opens) == c.N
        if rep.t1 != disc or rep.t2 != disc:
            return c.cx("finite T1/T2 iff discrete broken")
    return None


def _chk_separation_hereditary(ctxs):
    for c in ctxs:
        s = c.s
        rep = separation_mod.separation_report(s)
        for y in range(c.N):
            sub, _ = construct_mod.subspace(s, PointSet(y, c.n))
            sub_rep = separation_mod.separation_report(sub)
            if rep.t1 and not sub_rep.t1:
                return c.cx("T1 not hereditary", y)
            if rep.t3 and not sub_rep.t3:
                return c.cx("T3 not hereditary", y)
            if rep.normal and y in c.closeds and not sub_rep.normal:
                return c.cx("closed subspace of normal space not normal", y)
    return None


def _chk_compactness_facts(ctxs):
    for c in ctxs:
        s = c.s
        if not compact_mod.is_compact(s):
            return c.cx("finite space not compact")
        compacts = [m for m in range(c.N) if compact_mod.is_compact_set(s, PointSet(m, c.n))]
        if compacts != list(range(c.N)):
            return c.cx("some finite subset not compact")
        for m in c.closeds:
            if m not in compacts:
                return c.cx("closed set not compact", m)
        if not compact_mod.is_locally_compact(s):
            return c.cx("finite space not locally compact")
    return None


def _chk_alexandroff_facts(ctxs):
    for c in ctxs:
        s = c.s
        ext = construct_mod.alexandroff(s)
        if not compact_mod.is_compact(ext):
            return c.cx("Alexandroff extension not compact")
        sub, _ = construct_mod.subspace(ext, PointSet((1 << c.n) - 1, ext.n))
        if sub.opens.masks != s.opens.masks:
            return c.cx("Alexandroff restriction does not restore the space")
    return None


def _chk_metric_topology_discrete(ctxs):
    rng = random.Random(20260823)
    for trial in range(200):
        n = rng.randint(1, 6)
        lo, hi = rng.choice([(1, 2), (5, 9), (3, 5)])
        d = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                d[i][j] = d[j][i] = rng.randint(lo, hi)
        mt = construct_mod.metric_topology(construct_mod.MetricTable.of(d))
        if len(mt.opens) != 1 << n:
            return f"metric table {d} induced a non-discrete topology"
    return None


def _chk_locally_connected_equiv(ctxs):
    for c in ctxs:
        s = c.s
        space_level = connect_mod.is_locally_connected(s)
        pointwise = all(
            connect_mod.is_locally_connected_at(s, p) for p in range(c.n)
        )
        if space_level != pointwise:
            return c.cx("locally-connected space/pointwise equivalence broken")
    return None


def _chk_base_laws(ctxs):
    for c in ctxs:
        s = c.s
        if not construct_mod.is_base_for(s, s.opens):
            return c.cx("topology not a base for itself")
        regen = construct_mod.topology_from_base(c.n, s.opens)
        if regen.opens.masks != s.opens.masks:
            return c.cx("topology regenerated from itself differs")
        minbase = Family.of(c.n, (mo.bits for mo in s.min_open))
        if c.n and not construct_mod.is_base_for(s, minbase):
            return c.cx("minimal-open family not a base")
    return None


def _chk_fundamental_cover_laws(ctxs):
    for c in ctxs:
        s = c.s
        subsets = list(range(1, c.N))
        families = []
        for size in (1, 2, 3):
            families.extend(itertools.combinations(subsets, size))
        reports = {}
        for fam_masks in families:
            C = Family.of(c.n, fam_masks)
            reports[fam_masks] = (C, covers_mod.classify_cover(s, C))
        for fam_masks, (C, rep) in reports.items():
            if rep.open_cover and not rep.fundamental:
                return c.cx(f"open cover not fundamental: {fam_masks}")
            if rep.closed_cover and len(C) > 0 and not rep.fundamental:
                return c.cx(f"finite closed cover not fundamental: {fam_masks}")
            if rep.is_cover and rep.closed_cover and rep.locally_finite and not rep.fundamental:
                return c.cx(f"locally-finite closed cover not fundamental: {fam_masks}")
            if rep.is_cover:
                # FCOV2-set equals tau exactly when fundamental
                rel = {m: covers_mod.relative_opens(s, m) for m in fam_masks}
                u_set = {
                    u
                    for u in range(c.N)
                    if all(u & m in rel[m] for m in fam_masks)
                }
                if (u_set == c.opens) != rep.fundamental:
                    return c.cx(f"FCOV2-set criterion mismatch: {fam_masks}")
                # closed-set variant
                relc = {
                    m: frozenset(m & cl for cl in c.closeds) for m in fam_masks
                }
                v_set = {
                    v
                    for v in range(c.N)
                    if all(v & m in relc[m] for m in fam_masks)
                }
                if (v_set == c.closeds) != rep.fundamental:
                    return c.cx(f"closed FCOV2-set criterion mismatch: {fam_masks}")
        # refinement theorem over pairs of covering families
        covering = [fm for fm, (C, rep) in reports.items() if rep.is_cover]
        for fine in covering:
            fine_rep = reports[fine][1]
            if not fine_rep.fundamental:
                continue
            for coarse in covering:
                if covers_mod.is_refinement(
                    reports[fine][0], reports[coarse][0], s
                ) and not reports[coarse][1].fundamental:
                    return c.cx(f"fundamental refinement {fine} of non-fundamental {coarse}")
    return None


def _chk_constructor_laws(ctxs):
    one_point = space(1, (0, 1))
    for c in ctxs:
        s = c.s
        # subspace transitivity
        for y in range(c.N):
            sub_y, inc_y = construct_mod.subspace(s, PointSet(y, c.n))
            for yp in range(c.N):
                if yp & ~y:
                    continue
                inner_mask = inc_y.preimage(PointSet(yp, c.n))
                sub2, _ = construct_mod.subspace(sub_y, inner_mask)
                direct, _ = construct_mod.subspace(s, PointSet(yp, c.n))
                if sub2.opens.masks != direct.opens.masks:
                    return c.cx("subspace transitivity broken", y, yp)
        # product with the one-point space is homeomorphic to s
        prod, _ = construct_mod.product(s, one_point)
        if maps_mod.find_homeomorphism(prod, s) is None:
            return c.cx("product with one-point space not homeomorphic")
        # quotient by singletons is homeomorphic to s
        if c.n:
            P = Partition.of(c.n, [[p] for p in range(c.n)])
            quot, _ = construct_mod.quotient(s, P)
            if maps_mod.find_homeomorphism(quot, s) is None:
                return c.cx("quotient by singletons not homeomorphic")
        # base for s induces base for subspaces
        for y in range(c.N):
            sub_y, inc_y = construct_mod.subspace(s, PointSet(y, c.n))
            traced = Family.of(
                sub_y.n,
                (inc_y.preimage(PointSet(y & u, c.n)).bits for u in c.opens),
            )
            if not construct_mod.is_base_for(sub_y, traced):
                return c.cx("traced base not a base for the subspace", y)
        # open subset of open subspace is open in the whole space (closed analogue)
        for y in c.opens:
            sub_y, inc_y = construct_mod.subspace(s, PointSet(y, c.n))
            for v in sub_y.opens.masks:
                if inc_y.image(PointSet(v, sub_y.n)).bits not in c.opens:
                    return c.cx("open-in-open-subspace not open", y, v)
        for y in c.closeds:
            sub_y, inc_y = construct_mod.subspace(s, PointSet(y, c.n))
            for v in sub_y.closeds.masks:
                if inc_y.image(PointSet(v, sub_y.n)).bits not in c.closeds:
                    return c.cx("closed-in-closed-subspace not closed", y, v)
    return None


def _chk_product_quotient_preservation(ctxs):
    # Products over factor pairs with small product carriers; quotients
    # over all partitions of each space.
    if not ctxs:
        return None
    n = ctxs[0].n
    pools = {k: all_spaces(k) for k in range(n + 1)}
    for k1 in range(n + 1):
        for k2 in range(n + 1):
            if k1 * k2 > 6:
                continue
            for s1 in pools[k1]:
                for s2 in pools[k2]:
                    prod, _ = construct_mod.product(s1, s2)
                    if connect_mod.is_connected(s1) and connect_mod.is_connected(s2):
                        if not connect_mod.is_connected(prod):
                            return (
                                "product of connected spaces disconnected: "
                                f"{_ser_space(s1)} x {_ser_space(s2)}"
                            )
                    if not compact_mod.is_compact(prod):
                        return f"product not compact: {_ser_space(s1)} x {_ser_space(s2)}"
    for c in ctxs:
        s = c.s
        for P in _partitions(c.n):
            quot, _ = construct_mod.quotient(s, P)
            if connect_mod.is_connected(s) and not connect_mod.is_connected(quot):
                return c.cx(f"quotient of connected space disconnected: {P}")
            if not compact_mod.is_compact(quot):
                return c.cx(f"quotient not compact: {P}")
    return None


def _partitions(n: int):
    if n == 0:
        yield Partition.of(0, [])
        return
    def rec(p, blocks):
        if p == n:
            yield [list(b) for b in blocks]
            return
        for b in blocks:
            b.append(p)
            yield from rec(p + 1, blocks)
            b.pop()
        blocks.append([p])
        yield from rec(p + 1, blocks)
        blocks.pop()
    for blocks in rec(0, []):
        yield Partition.of(n, blocks)


SINGLE_SPACE_CHECKS = [
    ("interior_idempotent", _chk_interior_idempotent),
    ("closure_idempotent", _chk_closure_idempotent),
    ("interior_closure_extensivity", _chk_extensivity),
    ("open_closed_fixpoints", _chk_open_closed_fixpoints),
    ("interior_of_intersection", _chk_interior_of_intersection),
    ("closure_of_union", _chk_closure_of_union),
    ("exterior_of_union", _chk_exterior_of_union),
    ("operator_monotonicity", _chk_monotonicity),
    ("frontier_identities", _chk_frontier_identities),
    ("frontier_power", _chk_frontier_power),
    ("interior_of_frontier", _chk_interior_of_frontier),
    ("open_meets_closure", _chk_open_meets_closure),
    ("dense_laws", _chk_dense_laws),
    ("nowhere_dense_laws", _chk_nowhere_dense_laws),
    ("dense_only_full_iff_discrete", _chk_dense_only_full_iff_discrete),
    ("point_roles_match_operators", _chk_point_roles_match_operators),
    ("neighborhood_intersection", _chk_neighborhood_intersection),
    ("connectedness_equivalences", _chk_connectedness_equivalences),
    ("connected_set_laws", _chk_connected_set_laws),
    ("components_structure", _chk_components),
    ("coarser_operator_comparison", _chk_coarser_operator_comparison),
    ("subspace_operator_comparison", _chk_subspace_operator_comparison),
    ("indistinguishability_equivalences", _chk_indistinguishability_equivalences),
    ("t0_closure_injective", _chk_t0_closure_injective),
    ("finite_t1_rigidity", _chk_t1_rigidity),
    ("separation_hereditary", _chk_separation_hereditary),
    ("compactness_facts", _chk_compactness_facts),
    ("alexandroff_facts", _chk_alexandroff_facts),
    ("metric_topology_discrete", _chk_metric_topology_discrete),
    ("locally_connected_equivalence", _chk_locally_connected_equiv),
    ("base_laws", _chk_base_laws),
    ("fundamental_cover_laws", _chk_fundamental_cover_laws),
    ("constructor_laws", _chk_constructor_laws),
    ("product_quotient_preservation", _chk_product_quotient_preservation),
]

#: Subset of theorem ids cheap enough for the n=4 spot sweep.
OPERATOR_IDENTITY_CHECKS = [
    "interior_idempotent",
    "closure_idempotent",
    "interior_closure_extensivity",
    "open_closed_fixpoints",
    "interior_of_intersection",
    "closure_of_union",
    "exterior_of_union",
    "operator_monotonicity",
    "frontier_identities",
    "frontier_power",
    "interior_of_frontier",
    "open_meets_closure",
]


MAP_SWEEP_CHECKS = [
    "continuity_equivalences",
    "local_vs_global_continuity",
    "base_continuity_criterion",
    "open_closed_map_characterizations",
    "pasting_open_covers",
    "pasting_closed_covers",
    "image_of_connected",
    "image_of_compact",
    "image_of_dense",
    "homeomorphism_transport",
    "hausdorff_limit_uniqueness",
    "t1_pullback_and_indiscrete_maps",
    "hausdorff_codomain_implications",
]


def _map_tables(n: int) -> tuple[list, list, list]:
    """All function tables n -> n with per-table image/preimage arrays."""
    N = 1 << n
    tables = list(itertools.product(range(n), repeat=n))
    imgs, pres = [], []
    for t in tables:
        img = [0] * N
        for m in range(N):
            b = 0
            mm = m
            p = 0
            while mm:
                if mm & 1:
                    b |= 1 << t[p]
                mm >>= 1
                p += 1
            img[m] = b
        pre = [0] * N
        for m in range(N):
            b = 0
            for p in range(n):
                if m >> t[p] & 1:
                    b |= 1 << p
            pre[m] = b
        imgs.append(img)
        pres.append(pre)
    return tables, imgs, pres


def _fundamental_covers(c: _Ctx) -> tuple[list, list]:
    """Fundamental covers of the carrier: open-member families of size <= 3
    and closed-member families of size <= 2, filtered by the literal scan."""
    open_covers, closed_covers = [], []
    for pool, sizes, out in (
        (sorted(c.opens), (1, 2, 3), open_covers),
        (sorted(c.closeds), (1, 2), closed_covers),
    ):
        for size in sizes:
            for fam in itertools.combinations(pool, size):
                union = 0
                for m in fam:
                    union |= m
                if union == c.full and covers_mod._is_fundamental(c.s, fam):
                    out.append(fam)
    return open_covers, closed_covers


def _map_sweep(n: int, ctxs) -> dict:
    """Quantify the map-level theorems over all ordered pairs of spaces on n
    points and all n**n function tables between them."""
    results: dict[str, Optional[str]] = {k: None for k in MAP_SWEEP_CHECKS}
    N = 1 << n
    tables, imgs, pres = _map_tables(n)
    extras = []
    for c in ctxs:
        extras.append(
            {
                "conn": connect_mod.connected_set_masks(c.s),
                "compact": frozenset(
                    m
                    for m in range(N)
                    if compact_mod.is_compact_set(c.s, PointSet(m, n))
                ),
                "rel": {S: covers_mod.relative_opens(c.s, S) for S in range(N)},
                "t1": separation_mod.separation_report(c.s).t1,
                "minbase": tuple(mo.bits for mo in c.s.min_open),
                "covers": _fundamental_covers(c),
            }
        )

    def fail(c1, c2, t, detail):
        return f"s1={_ser_space(c1.s)} s2={_ser_space(c2.s)} f={list(t)}: {detail}"

    for i1, c1 in enumerate(ctxs):
        e1 = extras[i1]
        rel1 = e1["rel"]
        open_covers, closed_covers = e1["covers"]
        indiscrete1 = c1.opens == {0, c1.full} and n >= 1
        for i2, c2 in enumerate(ctxs):
            e2 = extras[i2]
            for ti, t in enumerate(tables):
                img, pre = imgs[ti], pres[ti]
                cont = all(pre[u] in c1.opens for u in c2.opens)

                if results["continuity_equivalences"] is None:
                    c_closed = all(pre[m] in c1.closeds for m in c2.closeds)
                    c_cl = all(
                        c1.cl[pre[m]] & ~pre[c2.cl[m]] == 0 for m in range(N)
                    )
                    c_img = all(
                        img[c1.cl[m]] & ~c2.cl[img[m]] == 0 for m in range(N)
                    )
                    c_it = all(
                        pre[c2.it[m]] & ~c1.it[pre[m]] == 0 for m in range(N)
                    )
                    if not cont == c_closed == c_cl == c_img == c_it:
                        results["continuity_equivalences"] = fail(
                            c1,
                            c2,
                            t,
                            f"equivalences diverge: {cont},{c_closed},{c_cl},{c_img},{c_it}",
                        )

                if results["local_vs_global_continuity"] is None:
                    loc = all(
                        all(
                            any(
                                u >> p & 1 and img[u] & ~w == 0
                                for u in c1.opens
                            )
                            for w in c2.opens
                            if w >> t[p] & 1
                        )
                        for p in range(n)
                    )
                    if loc != cont:
                        results["local_vs_global_continuity"] = fail(
                            c1, c2, t, f"pointwise={loc} global={cont}"
                        )

                if results["base_continuity_criterion"] is None:
                    base_cont = all(pre[b] in c1.opens for b in e2["minbase"])
                    if base_cont != cont:
                        results["base_continuity_criterion"] = fail(
                            c1, c2, t, "minimal-open-base criterion mismatch"
                        )

                if results["open_closed_map_characterizations"] is None:
                    omap = all(img[u] in c2.opens for u in c1.opens)
                    ochar = all(
                        img[c1.it[m]] & ~c2.it[img[m]] == 0 for m in range(N)
                    )
                    cmap = all(img[m] in c2.closeds for m in c1.closeds)
                    cchar = all(
                        c2.cl[img[m]] & ~img[c1.cl[m]] == 0 for m in range(N)
                    )
                    if omap != ochar or cmap != cchar:
                        results["open_closed_map_characterizations"] = fail(
                            c1,
                            c2,
                            t,
                            f"open {omap}/{ochar} closed {cmap}/{cchar}",
                        )

                if (
                    results["pasting_open_covers"] is None
                    or results["pasting_closed_covers"] is None
                ):
                    good_cache: dict[int, bool] = {}

                    def good(S):
                        v = good_cache.get(S)
                        if v is None:
                            v = all(S & pre[u] in rel1[S] for u in c2.opens)
                            good_cache[S] = v
                        return v

                    for key, cov_list in (
                        ("pasting_open_covers", open_covers),
                        ("pasting_closed_covers", closed_covers),
                    ):
                        if results[key] is not None:
                            continue
                        for fam in cov_list:
                            if all(good(S) for S in fam) and not cont:
                                results[key] = fail(
                                    c1, c2, t, f"pasting failed for cover {fam}"
                                )
                                break

                if cont:
                    if results["image_of_connected"] is None:
                        for a in e1["conn"]:
                            if img[a] not in e2["conn"]:
                                results["image_of_connected"] = fail(
                                    c1, c2, t, f"image of connected {a:#x} disconnected"
                                )
                                break
                    if results["image_of_compact"] is None:
                        for a in e1["compact"]:
                            if img[a] not in e2["compact"]:
                                results["image_of_compact"] = fail(
                                    c1, c2, t, f"image of compact {a:#x} not compact"
                                )
                                break
                    if results["image_of_dense"] is None and img[c1.full] == c2.full:
                        for a in range(N):
                            if c1.cl[a] == c1.full and c2.cl[img[a]] != c2.full:
                                results["image_of_dense"] = fail(
                                    c1, c2, t, f"image of dense {a:#x} not dense"
                                )
                                break
                    bij = len(set(t)) == n
                    if (
                        bij
                        and all(img[u] in c2.opens for u in c1.opens)
                        and results["homeomorphism_transport"] is None
                    ):
                        if {img[u] for u in c1.opens} != c2.opens:
                            results["homeomorphism_transport"] = fail(
                                c1, c2, t, "opens not transported"
                            )
                        else:
                            for m in range(N):
                                if (
                                    img[c1.cl[m]] != c2.cl[img[m]]
                                    or img[c1.it[m]] != c2.it[img[m]]
                                ):
                                    results["homeomorphism_transport"] = fail(
                                        c1, c2, t, f"operators not transported at {m:#x}"
                                    )
                                    break

                if e2["t1"] and results["hausdorff_limit_uniqueness"] is None:
                    for a in range(N):
                        for p in range(n):
                            pb = 1 << p
                            if not c1.cl[a & ~pb] >> p & 1:
                                continue  # p is not a limit point of A
                            count = 0
                            for y in range(n):
                                yb = 1 << y
                                ok = True
                                for w in c2.opens:
                                    if not w & yb:
                                        continue
                                    if not any(
                                        u & pb and img[u & a & ~pb] & ~w == 0
                                        for u in c1.opens
                                    ):
                                        ok = False
                                        break
                                if ok:
                                    count += 1
                                    if count > 1:
                                        break
                            if count > 1:
                                results["hausdorff_limit_uniqueness"] = fail(
                                    c1, c2, t, f"multiple limits along {a:#x} at p={p}"
                                )

                if results["t1_pullback_and_indiscrete_maps"] is None and e2["t1"]:
                    inj = len(set(t)) == n
                    if cont and inj and not e1["t1"]:
                        results["t1_pullback_and_indiscrete_maps"] = fail(
                            c1, c2, t, "injective continuous map into T1, domain not T1"
                        )
                    if cont and indiscrete1 and len(set(t)) > 1:
                        results["t1_pullback_and_indiscrete_maps"] = fail(
                            c1, c2, t, "non-constant continuous map from indiscrete to T1"
                        )

                if e2["t1"] and results["hausdorff_codomain_implications"] is None:
                    checks = compact_mod.hausdorff_compact_checks(
                        c1.s, c2.s, FiniteMap.of(n, n, t)
                    )
                    if not all(checks.values()):
                        results["hausdorff_codomain_implications"] = fail(
                            c1, c2, t, f"implications: {checks}"
                        )
    return results


#: Theorem ids forming the timed single-space regression core.
SWEEP_CORE = OPERATOR_IDENTITY_CHECKS + [
    "dense_laws",
    "nowhere_dense_laws",
    "dense_only_full_iff_discrete",
    "connectedness_equivalences",
    "indistinguishability_equivalences",
    "t0_closure_injective",
    "finite_t1_rigidity",
    "compactness_facts",
    "alexandroff_facts",
    "metric_topology_discrete",
]


def sweep_theorems(
    n: int,
    overrides: Optional[dict] = None,
    theorems: Optional[list] = None,
    include_maps: Optional[bool] = None,
) -> dict:
    """Run the theorem regression over every topology on n points.

    Returns {theorem id: {"ok": bool, "counterexample": Optional[str]}}.
    `overrides` may replace the "interior"/"closure" operators used to build
    the per-space tables, so a deliberately corrupted operator surfaces as a
    named theorem failure with a serialized counterexample.  The map-level
    sweep runs by default for n <= 3.
    """
    if n > 4:
        raise CarrierTooLarge("theorem sweep capped at n <= 4")
    ops = _default_ops(overrides)
    if include_maps is None:
        include_maps = n <= 3
    if theorems is None:
        names = (
            [name for name, _ in SINGLE_SPACE_CHECKS]
            if n <= 3
            else list(OPERATOR_IDENTITY_CHECKS)
        )
    else:
        names = list(theorems)
    ctxs = [_Ctx(s, ops) for s in all_spaces(n)]
    lookup = dict(SINGLE_SPACE_CHECKS)
    report = {}
    for name in names:
        cx = lookup[name](ctxs)
        report[name] = {"ok": cx is None, "counterexample": cx}
    if include_maps:
        for name, cx in _map_sweep(n, ctxs).items():
            report[name] = {"ok": cx is None, "counterexample": cx}
    return report
