"""Striped atlases as data: strips, gluing pairs, validation and the
interchange document.

A strip is recorded only by the left-to-right order of the open intervals
on each of its two boundary lines; a gluing pair identifies two intervals
and remembers whether the identification preserves the real direction.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple


class Side(enum.Enum):
    LOWER = "lower"
    UPPER = "upper"

    @property
    def opposite(self) -> "Side":
        return Side.UPPER if self is Side.LOWER else Side.LOWER


@dataclass(frozen=True)
class Strip:
    id: str
    lower: tuple[str, ...] = ()
    upper: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "lower", tuple(self.lower))
        object.__setattr__(self, "upper", tuple(self.upper))

    def side(self, side: Side) -> tuple[str, ...]:
        return self.lower if side is Side.LOWER else self.upper


@dataclass(frozen=True)
class GluingPair:
    id: str
    x: str
    y: str
    sign: int = 1

    def other(self, interval: str) -> str:
        if interval == self.x:
            return self.y
        if interval == self.y:
            return self.x
        raise KeyError(interval)


class Location(NamedTuple):
    strip: str
    side: Side
    index: int


@dataclass(frozen=True)
class Violation:
    rule: str
    id: object

    def __str__(self):
        return f"{self.rule}: {self.id!r}"


@dataclass(frozen=True)
class StripedAtlas:
    strips: tuple[Strip, ...] = ()
    pairs: tuple[GluingPair, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "strips", tuple(self.strips))
        object.__setattr__(self, "pairs", tuple(self.pairs))

    # Lookup tables are built on first use.  On an invalid atlas the first
    # occurrence of a duplicated id wins; validate() reports the rest.

    @cached_property
    def _strip_index(self) -> dict[str, Strip]:
        out: dict[str, Strip] = {}
        for s in self.strips:
            out.setdefault(s.id, s)
        return out

    @cached_property
    def _locations(self) -> dict[str, Location]:
        out: dict[str, Location] = {}
        for s in self.strips:
            for side in Side:
                for k, i in enumerate(s.side(side)):
                    out.setdefault(i, Location(s.id, side, k))
        return out

    @cached_property
    def _pair_of_interval(self) -> dict[str, GluingPair]:
        out: dict[str, GluingPair] = {}
        for p in self.pairs:
            out.setdefault(p.x, p)
            out.setdefault(p.y, p)
        return out

    @cached_property
    def _pair_index(self) -> dict[str, GluingPair]:
        out: dict[str, GluingPair] = {}
        for p in self.pairs:
            out.setdefault(p.id, p)
        return out

    def strip(self, strip_id: str) -> Strip:
        try:
            return self._strip_index[strip_id]
        except KeyError:
            raise KeyError(f"unknown strip {strip_id!r}") from None

    def pair(self, pair_id: str) -> GluingPair:
        try:
            return self._pair_index[pair_id]
        except KeyError:
            raise KeyError(f"unknown pair {pair_id!r}") from None

    def has_strip(self, strip_id: str) -> bool:
        return strip_id in self._strip_index

    def has_interval(self, interval: str) -> bool:
        return interval in self._locations

    def locate(self, interval: str) -> Location:
        try:
            return self._locations[interval]
        except KeyError:
            raise KeyError(f"unknown interval {interval!r}") from None

    def side_of(self, interval: str) -> tuple[str, ...]:
        loc = self.locate(interval)
        return self.strip(loc.strip).side(loc.side)

    def pair_of(self, interval: str) -> GluingPair | None:
        return self._pair_of_interval.get(interval)

    def intervals(self) -> Iterator[str]:
        """All intervals, strip by strip, lower side before upper side."""
        for s in self.strips:
            yield from s.lower
            yield from s.upper

    def replace(self, strips: Iterable[Strip] | None = None,
                pairs: Iterable[GluingPair] | None = None) -> "StripedAtlas":
        return StripedAtlas(self.strips if strips is None else tuple(strips),
                            self.pairs if pairs is None else tuple(pairs))

    def __repr__(self):
        return f"StripedAtlas({serialize(self).strip()})"


# -- validation ------------------------------------------------------------

def _bad_id(value) -> bool:
    return not isinstance(value, str) or not value


def validate(atlas: StripedAtlas) -> list[Violation]:
    """Return every violated well-formedness rule; an empty list means valid.

    Never raises on data of the right container shapes, whatever the ids.
    """
    out: list[Violation] = []
    seen_strips: set = set()
    seen_intervals: set = set()
    for s in atlas.strips:
        if _bad_id(s.id):
            out.append(Violation("empty strip id", s.id))
        elif s.id in seen_strips:
            out.append(Violation("duplicate strip id", s.id))
        seen_strips.add(s.id)
        for i in (*s.lower, *s.upper):
            if _bad_id(i):
                out.append(Violation("empty interval id", s.id))
            elif i in seen_intervals:
                out.append(Violation("duplicate interval id", i))
            seen_intervals.add(i)

    seen_pairs: set = set()
    glued: set = set()
    for p in atlas.pairs:
        if _bad_id(p.id):
            out.append(Violation("empty pair id", p.id))
        elif p.id in seen_pairs:
            out.append(Violation("duplicate pair id", p.id))
        seen_pairs.add(p.id)
        if p.sign not in (1, -1) or isinstance(p.sign, bool):
            out.append(Violation("sign must be +1 or -1", p.id))
        if p.x == p.y:
            out.append(Violation("pair endpoints equal", p.id))
        for i in dict.fromkeys((p.x, p.y)):
            if i not in seen_intervals:
                out.append(Violation("unknown interval", (p.id, i)))
            if i in glued:
                out.append(Violation("interval glued twice", i))
            glued.add(i)
    return out


def is_valid(atlas: StripedAtlas) -> bool:
    return not validate(atlas)


class InvalidAtlas(ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(map(str, self.violations)))


def require_valid(atlas: StripedAtlas) -> StripedAtlas:
    violations = validate(atlas)
    if violations:
        raise InvalidAtlas(violations)
    return atlas


# -- interchange document --------------------------------------------------

class AtlasParseError(ValueError):
    """Malformed document.  ``line``/``column`` are set for JSON syntax
    errors, ``path`` for shape errors."""

    def __init__(self, message, line=None, column=None, path=None):
        self.line, self.column, self.path = line, column, path
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        elif path is not None:
            where = f" (at {path})"
        super().__init__(message + where)


_SIGNS = {"+": 1, "-": -1}


def _no_duplicate_keys(pairs):
    obj = {}
    for k, v in pairs:
        if k in obj:
            raise AtlasParseError(f"duplicate key {k!r}")
        obj[k] = v
    return obj


def load_json(text: str):
    try:
        return json.loads(text, object_pairs_hook=_no_duplicate_keys)
    except json.JSONDecodeError as exc:
        raise AtlasParseError(exc.msg, line=exc.lineno, column=exc.colno) from None


def _record(obj, path, keys):
    if not isinstance(obj, dict):
        raise AtlasParseError("expected an object", path=path)
    missing = [k for k in keys if k not in obj]
    if missing:
        raise AtlasParseError(f"missing key(s) {', '.join(missing)}", path=path)
    extra = sorted(set(obj) - set(keys))
    if extra:
        raise AtlasParseError(f"unknown field(s) {', '.join(extra)}", path=path)
    return obj


def _string(value, path):
    if not isinstance(value, str):
        raise AtlasParseError("expected a string", path=path)
    return value


def _strings(value, path):
    if not isinstance(value, list):
        raise AtlasParseError("expected a list", path=path)
    return tuple(_string(v, f"{path}[{k}]") for k, v in enumerate(value))


def atlas_from_obj(obj, path="$") -> StripedAtlas:
    _record(obj, path, ("strips", "glue"))
    if not isinstance(obj["strips"], list):
        raise AtlasParseError("expected a list", path=f"{path}.strips")
    if not isinstance(obj["glue"], list):
        raise AtlasParseError("expected a list", path=f"{path}.glue")
    strips = []
    for k, rec in enumerate(obj["strips"]):
        where = f"{path}.strips[{k}]"
        _record(rec, where, ("id", "lower", "upper"))
        strips.append(Strip(_string(rec["id"], f"{where}.id"),
                            _strings(rec["lower"], f"{where}.lower"),
                            _strings(rec["upper"], f"{where}.upper")))
    pairs = []
    for k, rec in enumerate(obj["glue"]):
        where = f"{path}.glue[{k}]"
        _record(rec, where, ("id", "x", "y", "sign"))
        sign = rec["sign"]
        if sign not in _SIGNS or not isinstance(sign, str):
            raise AtlasParseError('sign must be "+" or "-"', path=f"{where}.sign")
        pairs.append(GluingPair(_string(rec["id"], f"{where}.id"),
                                _string(rec["x"], f"{where}.x"),
                                _string(rec["y"], f"{where}.y"),
                                _SIGNS[sign]))
    return StripedAtlas(tuple(strips), tuple(pairs))


def atlas_to_obj(atlas: StripedAtlas) -> dict:
    return {
        "strips": [{"id": s.id, "lower": list(s.lower), "upper": list(s.upper)}
                   for s in atlas.strips],
        "glue": [{"id": p.id, "x": p.x, "y": p.y, "sign": "+" if p.sign > 0 else "-"}
                 for p in atlas.pairs],
    }


def dump_json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False) + "\n"


def parse(text: str) -> StripedAtlas:
    """Read an interchange document.  Semantic problems (duplicate ids,
    dangling references) are left for :func:`validate`."""
    return atlas_from_obj(load_json(text))


def serialize(atlas: StripedAtlas) -> str:
    """Compact, key-ordered JSON with a single trailing newline."""
    return dump_json(atlas_to_obj(atlas))


# -- connected components --------------------------------------------------

def components(atlas: StripedAtlas) -> list[StripedAtlas]:
    """Split into connected pieces; each piece keeps its strips and pairs in
    their original relative order.  Pieces are ordered by first strip."""
    parent = {s.id: s.id for s in atlas.strips}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for p in atlas.pairs:
        a, b = find(atlas.locate(p.x).strip), find(atlas.locate(p.y).strip)
        if a != b:
            parent[b] = a

    groups: dict[str, list[Strip]] = {}
    for s in atlas.strips:
        groups.setdefault(find(s.id), []).append(s)
    glue: dict[str, list[GluingPair]] = {root: [] for root in groups}
    for p in atlas.pairs:
        glue[find(atlas.locate(p.x).strip)].append(p)
    return [StripedAtlas(tuple(strips), tuple(glue[root]))
            for root, strips in groups.items()]
