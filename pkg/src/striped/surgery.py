"""Moves on atlases: strip symmetries, merging along c2 leaves, reduction,
and cutting along glued leaves.

Sign convention.  A pair's sign says whether the gluing preserves the real
direction in the two charts involved.  Reversing the real line of strip S
changes that for every pair joining S to another strip; for a pair with
both intervals on S both charts reverse and the sign is unchanged.
Exchanging the two sides of S keeps the real direction, so no sign moves.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Iterable

from .atlas import (AtlasParseError, GluingPair, Side, Strip, StripedAtlas, components,
                    dump_json, load_json, serialize)
from .canonical import canonical_form
from .leaves import BoundaryLeaf, LeafType, classify, leaf_of_pair

__all__ = [
    "SurgeryError", "flip_strip", "swap_sides", "merge_c2", "c2_pairs", "reduce",
    "reduction_outcomes", "closed_components", "ComponentKind", "Extraction",
    "CutRecord", "CutMap", "cut", "reglue", "cutmap_to_json", "cutmap_from_json",
    "canonical_form",
]


class SurgeryError(ValueError):
    pass


def _strip_or_raise(atlas: StripedAtlas, strip_id: str) -> Strip:
    if not atlas.has_strip(strip_id):
        raise SurgeryError(f"unknown strip {strip_id!r}")
    return atlas.strip(strip_id)


def _replace_strip(atlas: StripedAtlas, new: Strip) -> tuple[Strip, ...]:
    return tuple(new if s.id == new.id else s for s in atlas.strips)


def flip_strip(atlas: StripedAtlas, strip_id: str) -> StripedAtlas:
    """Reverse the real direction of one strip."""
    s = _strip_or_raise(atlas, strip_id)
    flipped = Strip(s.id, s.lower[::-1], s.upper[::-1])
    pairs = []
    for p in atlas.pairs:
        hosts = {atlas.locate(p.x).strip, atlas.locate(p.y).strip}
        if strip_id in hosts and len(hosts) == 2:
            p = replace(p, sign=-p.sign)
        pairs.append(p)
    return StripedAtlas(_replace_strip(atlas, flipped), tuple(pairs))


def swap_sides(atlas: StripedAtlas, strip_id: str) -> StripedAtlas:
    """Exchange the lower and upper side of one strip."""
    s = _strip_or_raise(atlas, strip_id)
    return atlas.replace(strips=_replace_strip(atlas, Strip(s.id, s.upper, s.lower)))


# -- reduction -------------------------------------------------------------

def merge_c2(atlas: StripedAtlas, pair_id: str) -> StripedAtlas:
    """Glue the two strips joined by a c2 pair into one strip.

    The strip hosting ``x`` keeps its id, position and chart; the strip
    hosting ``y`` is swapped and/or flipped so that the pair joins opposite
    sides with sign +1, then stacked onto it.
    """
    try:
        pair = atlas.pair(pair_id)
    except KeyError as exc:
        raise SurgeryError(str(exc)) from None
    if classify(atlas, leaf_of_pair(pair)) is not LeafType.C2:
        raise SurgeryError(f"pair {pair_id!r} is not of type c2")

    lx, ly = atlas.locate(pair.x), atlas.locate(pair.y)
    work = atlas
    if ly.side is lx.side:
        work = swap_sides(work, ly.strip)
    if work.pair(pair_id).sign < 0:
        work = flip_strip(work, ly.strip)
    bottom, top = work.strip(lx.strip), work.strip(ly.strip)
    if lx.side is Side.LOWER:
        bottom, top = top, bottom
    merged = Strip(lx.strip, bottom.lower, top.upper)
    strips = tuple(merged if s.id == lx.strip else s
                   for s in work.strips if s.id != ly.strip)
    return StripedAtlas(strips, tuple(p for p in work.pairs if p.id != pair_id))


def c2_pairs(atlas: StripedAtlas) -> list[str]:
    return [p.id for p in atlas.pairs
            if classify(atlas, leaf_of_pair(p)) is LeafType.C2]


class ComponentKind(enum.Enum):
    CYLINDER = "cylinder"
    MOEBIUS = "moebius"


@dataclass(frozen=True)
class Extraction:
    strip: str
    kind: ComponentKind


ExtractionReport = tuple[Extraction, ...]


def closed_components(atlas: StripedAtlas) -> ExtractionReport:
    """Single-strip components closed up by one c1 pair."""
    out = []
    for comp in components(atlas):
        if len(comp.strips) == 1 and len(comp.pairs) == 1:
            p = comp.pairs[0]
            if classify(comp, leaf_of_pair(p)) is LeafType.C1:
                kind = ComponentKind.CYLINDER if p.sign > 0 else ComponentKind.MOEBIUS
                out.append(Extraction(comp.strips[0].id, kind))
    return tuple(out)


def reduce(atlas: StripedAtlas) -> tuple[StripedAtlas, ExtractionReport]:
    """Merge c2 pairs (smallest pair id first) until none is left, then
    report the cylinders and Moebius bands, which stay in the atlas."""
    budget = len(atlas.strips)
    while True:
        todo = c2_pairs(atlas)
        if not todo:
            break
        budget -= 1
        assert budget >= 0, "reduction did not shrink the atlas"
        atlas = merge_c2(atlas, min(todo))
    return atlas, closed_components(atlas)


def reduction_outcomes(atlas: StripedAtlas) -> set[str]:
    """Canonical forms reachable by reducing in every possible merge order."""
    seen: dict = {}

    def walk(a):
        key = serialize(a)
        if key in seen:
            return seen[key]
        todo = c2_pairs(a)
        if not todo:
            out = {canonical_form(a)}
        else:
            out = set()
            for pid in todo:
                out |= walk(merge_c2(a, pid))
        seen[key] = out
        return out

    return walk(atlas)


def report_to_obj(report: Iterable[Extraction]) -> list:
    return [{"strip": e.strip, "kind": e.kind.value} for e in report]


# -- cutting ---------------------------------------------------------------

@dataclass(frozen=True)
class CutRecord:
    pair: GluingPair
    index: int  # position of the pair in the source atlas

    @property
    def leaf(self) -> BoundaryLeaf:
        return leaf_of_pair(self.pair)

    @property
    def doubled(self) -> tuple[BoundaryLeaf, BoundaryLeaf]:
        return BoundaryLeaf.of(self.pair.x), BoundaryLeaf.of(self.pair.y)


@dataclass(frozen=True)
class CutMap:
    removed: tuple[CutRecord, ...] = ()


def cut(atlas: StripedAtlas, pairs: Iterable[str]) -> tuple[StripedAtlas, CutMap]:
    """Unglue the given pairs.  Each glued leaf becomes two boundary leaves."""
    wanted = set(pairs)
    known = {p.id for p in atlas.pairs}
    unknown = sorted(wanted - known)
    if unknown:
        raise SurgeryError(f"unknown pair(s) {', '.join(map(repr, unknown))}")
    removed = tuple(CutRecord(p, k) for k, p in enumerate(atlas.pairs) if p.id in wanted)
    kept = tuple(p for p in atlas.pairs if p.id not in wanted)
    return atlas.replace(pairs=kept), CutMap(removed)


def reglue(atlas: StripedAtlas, cm: CutMap) -> StripedAtlas:
    """Undo :func:`cut`: put every removed pair back at its old position."""
    glued = {i for p in atlas.pairs for i in (p.x, p.y)}
    for rec in cm.removed:
        for i in (rec.pair.x, rec.pair.y):
            if not atlas.has_interval(i):
                raise SurgeryError(f"interval {i!r} does not exist")
            if i in glued:
                raise SurgeryError(f"interval {i!r} is already glued")
            glued.add(i)
    pairs = list(atlas.pairs)
    for rec in sorted(cm.removed, key=lambda r: r.index):
        pairs.insert(min(rec.index, len(pairs)), rec.pair)
    return atlas.replace(pairs=pairs)


def cutmap_to_obj(cm: CutMap) -> list:
    return [{"id": r.pair.id, "x": r.pair.x, "y": r.pair.y,
             "sign": "+" if r.pair.sign > 0 else "-", "index": r.index}
            for r in cm.removed]


def cutmap_to_json(cm: CutMap) -> str:
    return dump_json(cutmap_to_obj(cm))


def cutmap_from_json(text: str) -> CutMap:
    obj = load_json(text)
    if not isinstance(obj, list):
        raise AtlasParseError("expected a list", path="$")
    out = []
    for k, rec in enumerate(obj):
        where = f"$[{k}]"
        if not isinstance(rec, dict) or set(rec) != {"id", "x", "y", "sign", "index"}:
            raise AtlasParseError("expected {id, x, y, sign, index}", path=where)
        if rec["sign"] not in ("+", "-"):
            raise AtlasParseError('sign must be "+" or "-"', path=f"{where}.sign")
        if not all(isinstance(rec[f], str) for f in ("id", "x", "y")):
            raise AtlasParseError("ids must be strings", path=where)
        if not isinstance(rec["index"], int) or isinstance(rec["index"], bool) or rec["index"] < 0:
            raise AtlasParseError("index must be a non-negative integer", path=f"{where}.index")
        pair = GluingPair(rec["id"], rec["x"], rec["y"], 1 if rec["sign"] == "+" else -1)
        out.append(CutRecord(pair, rec["index"]))
    return CutMap(tuple(out))
