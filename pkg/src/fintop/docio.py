"""JSON-shaped interchange documents for spaces, maps, families, and metrics.

Serialization is canonical (sorted point lists, families ordered by bitmask,
compact separators, sorted keys) so emitting the same object twice is
byte-identical and round-trips are exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Union

from .carrier import Family, PointSet
from .errors import InvalidTopology
from .maps import FiniteMap
from .space import TopSpace, space, validate_topology


class DocumentError(ValueError):
    """Malformed document: bad JSON shape, types, or field values."""


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise DocumentError(message)


def _load(text: Union[str, dict]) -> dict:
    if isinstance(text, dict):
        return text
    obj = json.loads(text)  # json.JSONDecodeError carries line/column
    _require(isinstance(obj, dict), "document must be a JSON object")
    return obj


def _parse_point_list(n: int, raw, what: str) -> int:
    _require(isinstance(raw, list), f"{what} must be a list of point indices")
    bits = 0
    for p in raw:
        _require(isinstance(p, int) and not isinstance(p, bool), f"{what}: bad point {p!r}")
        _require(0 <= p < max(n, 1), f"{what}: point {p} outside carrier of size {n}")
        bits |= 1 << p
    return bits


def _parse_n(obj: dict) -> int:
    n = obj.get("n")
    _require(isinstance(n, int) and not isinstance(n, bool) and n >= 0, "field 'n' must be a non-negative integer")
    return n


@dataclass(frozen=True, slots=True)
class SpaceDocument:
    n: int
    opens: tuple[tuple[int, ...], ...]
    name: Optional[str] = None

    @classmethod
    def of(cls, s: TopSpace, name: Optional[str] = None) -> "SpaceDocument":
        return cls(
            s.n,
            tuple(tuple(PointSet(m, s.n).points()) for m in s.opens.masks),
            name,
        )

    def to_obj(self) -> dict:
        obj = {"n": self.n, "opens": [list(o) for o in self.opens]}
        if self.name is not None:
            obj["name"] = self.name
        return obj


def parse_space(text: Union[str, dict]) -> TopSpace:
    """Parse and validate a space document.

    Raises json.JSONDecodeError for bad JSON, DocumentError for bad shape,
    and InvalidTopology (with the violation list) for families that fail
    the axioms.
    """
    obj = _load(text)
    n = _parse_n(obj)
    raw_opens = obj.get("opens")
    _require(isinstance(raw_opens, list), "field 'opens' must be a list")
    masks = [
        _parse_point_list(n, member, f"opens[{i}]")
        for i, member in enumerate(raw_opens)
    ]
    result = validate_topology(n, masks)
    if not isinstance(result, TopSpace):
        raise InvalidTopology(result)
    return result


def emit_space(s: TopSpace, name: Optional[str] = None) -> str:
    return canonical_json(SpaceDocument.of(s, name).to_obj())


@dataclass(frozen=True, slots=True)
class MapDocument:
    dom: SpaceDocument
    cod: SpaceDocument
    table: tuple[int, ...]

    def to_obj(self) -> dict:
        return {
            "dom": self.dom.to_obj(),
            "cod": self.cod.to_obj(),
            "table": list(self.table),
        }


def parse_map(text: Union[str, dict]) -> tuple[TopSpace, TopSpace, FiniteMap]:
    obj = _load(text)
    _require("dom" in obj and "cod" in obj and "table" in obj, "map document needs 'dom', 'cod', 'table'")
    dom = parse_space(obj["dom"])
    cod = parse_space(obj["cod"])
    raw = obj["table"]
    _require(isinstance(raw, list), "field 'table' must be a list")
    _require(len(raw) == dom.n, f"table length {len(raw)} != domain size {dom.n}")
    for v in raw:
        _require(isinstance(v, int) and not isinstance(v, bool), f"bad table entry {v!r}")
        _require(0 <= v < cod.n, f"table entry {v} outside codomain of size {cod.n}")
    return dom, cod, FiniteMap(dom.n, cod.n, tuple(raw))


def emit_map(s1: TopSpace, s2: TopSpace, f: FiniteMap) -> str:
    doc = MapDocument(SpaceDocument.of(s1), SpaceDocument.of(s2), f.table)
    return canonical_json(doc.to_obj())


def parse_family(text: Union[str, dict]) -> tuple[int, Family]:
    """A family document: {"n": ..., "members": [[points], ...]}."""
    obj = _load(text)
    n = _parse_n(obj)
    raw = obj.get("members")
    _require(isinstance(raw, list), "field 'members' must be a list")
    masks = [
        _parse_point_list(n, member, f"members[{i}]") for i, member in enumerate(raw)
    ]
    return n, Family.of(n, masks)


def emit_family(fam: Family) -> str:
    return canonical_json(
        {
            "members": [list(PointSet(m, fam.n).points()) for m in fam.masks],
            "n": fam.n,
        }
    )


def parse_metric(text: Union[str, dict]) -> list[list[int]]:
    """A metric document: {"d": [[row], ...]} of non-negative integers."""
    obj = _load(text)
    rows = obj.get("d")
    _require(isinstance(rows, list), "field 'd' must be a list of rows")
    n = len(rows)
    out = []
    for i, row in enumerate(rows):
        _require(isinstance(row, list) and len(row) == n, f"row {i} must have {n} entries")
        for v in row:
            _require(
                isinstance(v, int) and not isinstance(v, bool) and v >= 0,
                f"row {i}: bad distance {v!r}",
            )
        out.append(list(row))
    return out


def point_list(A: PointSet) -> list[int]:
    return list(A.points())
