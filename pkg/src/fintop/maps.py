"""Total maps between finite carriers and their topological analysis:
continuity, open/closed maps, homeomorphisms, embeddings, and limits."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .carrier import PointSet, same_carrier
from .errors import NotALimitPoint
from .space import TopSpace


@dataclass(frozen=True, slots=True)
class FiniteMap:
    """A total function table between two carriers."""

    dom_n: int
    cod_n: int
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.table) != self.dom_n:
            raise ValueError(
                f"table length {len(self.table)} != domain size {self.dom_n}"
            )
        for v in self.table:
            if not 0 <= v < self.cod_n:
                raise ValueError(f"table entry {v} outside codomain of size {self.cod_n}")

    @classmethod
    def of(cls, dom_n: int, cod_n: int, table) -> "FiniteMap":
        return cls(dom_n, cod_n, tuple(table))

    @classmethod
    def identity(cls, n: int) -> "FiniteMap":
        return cls(n, n, tuple(range(n)))

    @classmethod
    def constant(cls, dom_n: int, cod_n: int, value: int) -> "FiniteMap":
        return cls(dom_n, cod_n, (value,) * dom_n)

    def __call__(self, p: int) -> int:
        return self.table[p]

    def image(self, A: PointSet) -> PointSet:
        same_carrier(A.n, self.dom_n)
        bits = 0
        for p in range(self.dom_n):
            if A.bits >> p & 1:
                bits |= 1 << self.table[p]
        return PointSet(bits, self.cod_n)

    def preimage(self, B: PointSet) -> PointSet:
        same_carrier(B.n, self.cod_n)
        bits = 0
        for p in range(self.dom_n):
            if B.bits >> self.table[p] & 1:
                bits |= 1 << p
        return PointSet(bits, self.dom_n)

    def compose(self, inner: "FiniteMap") -> "FiniteMap":
        """self after inner."""
        same_carrier(inner.cod_n, self.dom_n)
        return FiniteMap(inner.dom_n, self.cod_n, tuple(self.table[v] for v in inner.table))

    def is_injective(self) -> bool:
        return len(set(self.table)) == self.dom_n

    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.cod_n

    def inverse(self) -> "FiniteMap":
        if not (self.is_injective() and self.is_surjective() and self.dom_n == self.cod_n):
            raise ValueError("only bijections have an inverse")
        inv = [0] * self.dom_n
        for p, v in enumerate(self.table):
            inv[v] = p
        return FiniteMap(self.cod_n, self.dom_n, tuple(inv))


@dataclass(frozen=True, slots=True)
class MapReport:
    continuous: bool
    open_map: bool
    closed_map: bool
    injective: bool
    surjective: bool
    homeomorphism: bool
    embedding: bool


def _check_compat(f: FiniteMap, s1: TopSpace, s2: TopSpace) -> None:
    same_carrier(f.dom_n, s1.n)
    same_carrier(f.cod_n, s2.n)


def _img(table, mask: int) -> int:
    bits = 0
    p = 0
    while mask:
        if mask & 1:
            bits |= 1 << table[p]
        mask >>= 1
        p += 1
    return bits


def _pre(table, mask: int) -> int:
    bits = 0
    for p, v in enumerate(table):
        if mask >> v & 1:
            bits |= 1 << p
    return bits


def check_map(f: FiniteMap, s1: TopSpace, s2: TopSpace) -> MapReport:
    """Classify f between two spaces.

    The embedding flag is decided by explicitly constructing the image
    subspace and checking the corestriction for homeomorphism.
    """
    _check_compat(f, s1, s2)
    opens1 = set(s1.opens.masks)
    opens2 = set(s2.opens.masks)
    closeds1 = set(s1.closeds.masks)
    closeds2 = set(s2.closeds.masks)
    continuous = all(_pre(f.table, w) in opens1 for w in opens2)
    open_map = all(_img(f.table, u) in opens2 for u in opens1)
    closed_map = all(_img(f.table, c) in closeds2 for c in closeds1)
    injective = f.is_injective()
    surjective = f.is_surjective()
    homeomorphism = injective and surjective and continuous and open_map
    embedding = _is_embedding(f, s1, s2, injective)
    return MapReport(
        continuous, open_map, closed_map, injective, surjective, homeomorphism, embedding
    )


def _is_embedding(f: FiniteMap, s1: TopSpace, s2: TopSpace, injective: bool) -> bool:
    if not injective:
        return False
    from .construct import subspace

    img = f.image(PointSet.full(s1.n))
    sub, inclusion = subspace(s2, img)
    reindex = {orig: i for i, orig in enumerate(inclusion.table)}
    corestricted = FiniteMap(s1.n, sub.n, tuple(reindex[v] for v in f.table))
    opens1 = set(s1.opens.masks)
    opens_sub = set(sub.opens.masks)
    continuous = all(_pre(corestricted.table, w) in opens1 for w in opens_sub)
    open_onto = all(_img(corestricted.table, u) in opens_sub for u in opens1)
    return continuous and open_onto


def is_continuous_at(f: FiniteMap, s1: TopSpace, s2: TopSpace, p: int) -> bool:
    """Local continuity: every neighborhood of f(p) pulls back inside the
    image of some neighborhood of p."""
    _check_compat(f, s1, s2)
    if not 0 <= p < s1.n:
        raise ValueError(f"point {p} outside carrier of size {s1.n}")
    fp = f.table[p]
    for w in s2.opens.masks:
        if not w >> fp & 1:
            continue
        if not any(
            u >> p & 1 and _img(f.table, u) & ~w == 0 for u in s1.opens.masks
        ):
            return False
    return True


def restrict(f: FiniteMap, s1: TopSpace, s2: TopSpace, A: PointSet) -> FiniteMap:
    """Domain restriction of f to A, through the subspace re-indexing."""
    _check_compat(f, s1, s2)
    same_carrier(A.n, s1.n)
    return FiniteMap(len(A), s2.n, tuple(f.table[p] for p in A.points()))


def limits_at(
    s1: TopSpace, A: PointSet, f: FiniteMap, s2: TopSpace, p: int
) -> PointSet:
    """All limits of f (defined on A, indexed in ascending order of A's
    points) at the limit point p of A.

    y is a limit iff every neighborhood of y contains the image of
    (U & A) - {p} for some neighborhood U of p.
    """
    same_carrier(A.n, s1.n)
    same_carrier(f.cod_n, s2.n)
    points = A.points()
    if f.dom_n != len(points):
        raise ValueError("map domain must match |A|")
    from .operators import point_roles

    if not point_roles(s1, A, p).limit:
        raise NotALimitPoint(f"{p} is not a limit point of the set")
    pbit = 1 << p
    # Image in s2 of (U & A) - {p}, per candidate neighborhood U of p.
    images = []
    for u in s1.opens.masks:
        if not u & pbit:
            continue
        bits = 0
        for i, q in enumerate(points):
            if u >> q & 1 and q != p:
                bits |= 1 << f.table[i]
        images.append(bits)
    out = 0
    for y in range(s2.n):
        ybit = 1 << y
        ok = True
        for w in s2.opens.masks:
            if not w & ybit:
                continue
            if not any(img & ~w == 0 for img in images):
                ok = False
                break
        if ok:
            out |= ybit
    return PointSet(out, s2.n)


def _point_signature(s: TopSpace, p: int) -> tuple[int, int]:
    member_count = sum(1 for m in s.opens.masks if m >> p & 1)
    return (len(s.min_open[p]), member_count)


def find_homeomorphism(s1: TopSpace, s2: TopSpace) -> Optional[FiniteMap]:
    """Search for a homeomorphism; returns the lexicographically least
    witness table, or None.

    Candidate bijections are pruned by cheap invariants first (open-set
    count, per-point minimal-open/membership signatures), then built by
    backtracking with partial minimal-open consistency.
    """
    if s1.n != s2.n or len(s1.opens) != len(s2.opens):
        return None
    n = s1.n
    sig1 = [_point_signature(s1, p) for p in range(n)]
    sig2 = [_point_signature(s2, p) for p in range(n)]
    if sorted(sig1) != sorted(sig2):
        return None
    opens2 = set(s2.opens.masks)
    assignment: list[int] = []
    used = [False] * n

    def consistent(p: int, q: int) -> bool:
        if sig1[p] != sig2[q]:
            return False
        mo1 = s1.min_open[p].bits
        mo2 = s2.min_open[q].bits
        for r, fr in enumerate(assignment):
            # specialization preorder must be carried both ways
            if bool(mo1 >> r & 1) != bool(mo2 >> fr & 1):
                return False
            if bool(s1.min_open[r].bits >> p & 1) != bool(s2.min_open[fr].bits >> q & 1):
                return False
        return True

    def transported_ok(table) -> bool:
        return {_img(table, u) for u in s1.opens.masks} == opens2

    def search(p: int) -> Optional[tuple[int, ...]]:
        if p == n:
            table = tuple(assignment)
            return table if transported_ok(table) else None
        for q in range(n):
            if used[q] or not consistent(p, q):
                continue
            used[q] = True
            assignment.append(q)
            found = search(p + 1)
            assignment.pop()
            used[q] = False
            if found is not None:
                return found
        return None

    table = search(0)
    if table is None:
        return None
    return FiniteMap(n, n, table)


def homeomorphic(s1: TopSpace, s2: TopSpace) -> bool:
    return find_homeomorphism(s1, s2) is not None


def embeddings_equivalent(
    s1: TopSpace, s2: TopSpace, e1: FiniteMap, e2: FiniteMap
) -> bool:
    """True iff self-homeomorphisms h1 of the domain and h2 of the codomain
    exist with e1 . h1 = h2 . e2."""
    import itertools

    _check_compat(e1, s1, s2)
    _check_compat(e2, s1, s2)
    opens1 = set(s1.opens.masks)
    opens2 = set(s2.opens.masks)
    autos1 = [
        perm
        for perm in itertools.permutations(range(s1.n))
        if {_img(perm, u) for u in opens1} == opens1
    ]
    autos2 = [
        perm
        for perm in itertools.permutations(range(s2.n))
        if {_img(perm, u) for u in opens2} == opens2
    ]
    for h1 in autos1:
        lhs = tuple(e1.table[h1[p]] for p in range(s1.n))
        for h2 in autos2:
            rhs = tuple(h2[e2.table[p]] for p in range(s1.n))
            if lhs == rhs:
                return True
    return False
