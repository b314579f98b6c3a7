"""Cover-based compactness and its Hausdorff interactions.

On a finite carrier every space and every set is compact; the predicates
still evaluate the covering definition literally (scanning all subfamilies
of the opens) so the degenerate truth is an observed fact, not an
assumption baked into the code.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .carrier import Family, PointSet, same_carrier
from .errors import CodomainNotHausdorff
from .maps import FiniteMap, check_map
from .space import TopSpace

#: Cap for the literal all-subfamilies scan (2**|opens| subfamilies).
LITERAL_SCAN_MAX_OPENS = 20

#: Subfamilies sampled when the literal scan is out of reach.
SAMPLED_SUBFAMILIES = 4096


def _covering_has_finite_subcover(masks: list[int], sub: int, target: int) -> bool:
    """sub indexes a subfamily of `masks`; check the covering definition."""
    union = 0
    i = 0
    while sub:
        if sub & 1:
            union |= masks[i]
        sub >>= 1
        i += 1
    if target & ~union:
        return True  # not a covering of the target; nothing to require
    # A finite subcover must exist inside the subfamily; the subfamily is
    # itself finite, so it qualifies as soon as it covers.
    return target & ~union == 0


def _literal_compact(s: TopSpace, target: int, exhaustive: bool) -> bool:
    masks = list(s.opens.masks)
    if exhaustive:
        subs = range(1 << len(masks))
    else:
        rng = random.Random(0xC0FFEE ^ target)
        subs = (rng.getrandbits(len(masks)) for _ in range(SAMPLED_SUBFAMILIES))
    return all(_covering_has_finite_subcover(masks, sub, target) for sub in subs)


def is_compact(s: TopSpace) -> bool:
    """Every open covering of the carrier includes a finite subcover."""
    return is_compact_set(s, PointSet.full(s.n))


def is_compact_set(s: TopSpace, A: PointSet) -> bool:
    """Every relative open covering of A (by opens of the space) includes a
    finite subcover.  Falls back to a sampled scan past the opens cap."""
    same_carrier(s.n, A.n)
    exhaustive = len(s.opens) <= LITERAL_SCAN_MAX_OPENS
    return _literal_compact(s, A.bits, exhaustive)


@dataclass(frozen=True, slots=True)
class CompactnessReport:
    compact: bool
    locally_compact: bool
    exhaustive_scan: bool
    witness_cover_stats: dict = field(default_factory=dict, compare=False)


def compactness_report(s: TopSpace) -> CompactnessReport:
    """Flags plus minimal-subcover diagnostics for the full opens cover."""
    from .covers import minimal_subcover

    exhaustive = len(s.opens) <= LITERAL_SCAN_MAX_OPENS
    stats = {}
    if s.n > 0:
        all_opens = Family.of(s.n, s.opens.masks)
        stats["all_opens_minimal_subcover"] = len(minimal_subcover(s, all_opens))
    return CompactnessReport(is_compact(s), is_locally_compact(s), exhaustive, stats)


def is_locally_compact(s: TopSpace) -> bool:
    """Every point has a neighborhood contained in a compact set."""
    for p in range(s.n):
        pbit = 1 << p
        found = False
        for u in s.opens.masks:
            if not u & pbit:
                continue
            # Scan supersets of u for a compact one; the carrier usually
            # succeeds immediately.
            full = (1 << s.n) - 1
            rest = full & ~u
            k = rest
            while True:
                if is_compact_set(s, PointSet(u | k, s.n)):
                    found = True
                    break
                if k == 0:
                    break
                k = (k - 1) & rest
            if found:
                break
        if not found:
            return False
    return True


def hausdorff_compact_checks(s1: TopSpace, s2: TopSpace, f: FiniteMap) -> dict:
    """Evaluate the compact-domain / Hausdorff-codomain map implications.

    Returns the truth values of: continuous => closed map, continuous
    bijection => homeomorphism, continuous injection => embedding.
    """
    from .separation import separation_report

    if not separation_report(s2).t2:
        raise CodomainNotHausdorff("codomain must be Hausdorff")
    rep = check_map(f, s1, s2)
    return {
        "continuous_implies_closed": (not rep.continuous) or rep.closed_map,
        "continuous_bijection_implies_homeomorphism": (
            not (rep.continuous and rep.injective and rep.surjective)
        )
        or rep.homeomorphism,
        "continuous_injection_implies_embedding": (
            not (rep.continuous and rep.injective)
        )
        or rep.embedding,
    }
