"""Leaves of the canonical foliation and their eight-way classification.

Every strip interior contributes one family of parallel leaves; every
boundary interval contributes one leaf, except that the two intervals of a
gluing pair contribute the same leaf.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .atlas import GluingPair, StripedAtlas


@dataclass(frozen=True)
class InteriorFamily:
    strip: str

    @property
    def label(self) -> str:
        return self.strip


@dataclass(frozen=True)
class BoundaryLeaf:
    rep: frozenset

    def __post_init__(self):
        object.__setattr__(self, "rep", frozenset(self.rep))
        if len(self.rep) not in (1, 2):
            raise ValueError("a boundary leaf is one interval or a glued pair")

    @classmethod
    def of(cls, *intervals: str) -> "BoundaryLeaf":
        return cls(frozenset(intervals))

    @property
    def glued(self) -> bool:
        return len(self.rep) == 2

    @property
    def intervals(self) -> tuple[str, ...]:
        return tuple(sorted(self.rep))

    @property
    def label(self) -> str:
        return "{" + ",".join(self.intervals) + "}"

    def __lt__(self, other):
        return self.intervals < other.intervals


LeafClass = Union[InteriorFamily, BoundaryLeaf]


class LeafType(enum.Enum):
    A = "a"
    B1 = "b1"
    B2 = "b2"
    C1 = "c1"
    C2 = "c2"
    C31 = "c31"
    C32 = "c32"
    C33 = "c33"


SPECIAL_TYPES = frozenset({LeafType.B2, LeafType.C32, LeafType.C33})
SINGULAR_TYPES = frozenset({LeafType.B2, LeafType.C31, LeafType.C32, LeafType.C33})
REGULAR_TYPES = frozenset({LeafType.A, LeafType.B1, LeafType.C1, LeafType.C2})
NO_CROSS_SECTION_TYPES = frozenset({LeafType.C31, LeafType.C32})


class UnknownLeaf(KeyError):
    pass


def leaf_of_interval(atlas: StripedAtlas, interval: str) -> BoundaryLeaf:
    pair = atlas.pair_of(interval)
    if pair is None:
        return BoundaryLeaf.of(interval)
    return BoundaryLeaf.of(pair.x, pair.y)


def leaf_of_pair(pair: GluingPair) -> BoundaryLeaf:
    return BoundaryLeaf.of(pair.x, pair.y)


def enumerate_leaves(atlas: StripedAtlas) -> list[LeafClass]:
    """Interior families in strip order, then boundary leaves in order of
    their first interval (strip order, lower side before upper)."""
    out: list[LeafClass] = [InteriorFamily(s.id) for s in atlas.strips]
    seen = set()
    for i in atlas.intervals():
        leaf = leaf_of_interval(atlas, i)
        if leaf not in seen:
            seen.add(leaf)
            out.append(leaf)
    return out


def boundary_leaves_D(atlas: StripedAtlas) -> frozenset[BoundaryLeaf]:
    """Images of all strip boundaries."""
    return frozenset(leaf_of_interval(atlas, i) for i in atlas.intervals())


def boundary_of_Z(atlas: StripedAtlas) -> frozenset[BoundaryLeaf]:
    """Leaves lying on the boundary of the glued surface: the unglued intervals."""
    return frozenset(BoundaryLeaf.of(i) for i in atlas.intervals()
                     if atlas.pair_of(i) is None)


def _check_member(atlas: StripedAtlas, leaf: LeafClass) -> None:
    if isinstance(leaf, InteriorFamily):
        if atlas.has_strip(leaf.strip):
            return
    elif isinstance(leaf, BoundaryLeaf):
        if all(atlas.has_interval(i) for i in leaf.rep):
            if leaf_of_interval(atlas, next(iter(leaf.rep))) == leaf:
                return
    raise UnknownLeaf(f"{leaf!r} is not a leaf of this atlas")


def classify(atlas: StripedAtlas, leaf: LeafClass) -> LeafType:
    _check_member(atlas, leaf)
    if isinstance(leaf, InteriorFamily):
        return LeafType.A
    if not leaf.glued:
        (i,) = leaf.rep
        return LeafType.B1 if len(atlas.side_of(i)) == 1 else LeafType.B2

    x, y = leaf.intervals
    lx, ly = atlas.locate(x), atlas.locate(y)
    nx, ny = len(atlas.side_of(x)), len(atlas.side_of(y))
    if lx.strip == ly.strip and lx.side == ly.side:
        # nx == ny: it is the same side
        return LeafType.C31 if nx == 2 else LeafType.C32
    if nx == 1 and ny == 1:
        return LeafType.C1 if lx.strip == ly.strip else LeafType.C2
    return LeafType.C33


def classify_all(atlas: StripedAtlas) -> dict[LeafClass, LeafType]:
    return {leaf: classify(atlas, leaf) for leaf in enumerate_leaves(atlas)}


def is_special(atlas: StripedAtlas, leaf: LeafClass) -> bool:
    return classify(atlas, leaf) in SPECIAL_TYPES


def is_singular(atlas: StripedAtlas, leaf: LeafClass) -> bool:
    return classify(atlas, leaf) in SINGULAR_TYPES


def is_regular(atlas: StripedAtlas, leaf: LeafClass) -> bool:
    return classify(atlas, leaf) in REGULAR_TYPES


def admits_cross_section(atlas: StripedAtlas, leaf: LeafClass) -> bool:
    return classify(atlas, leaf) not in NO_CROSS_SECTION_TYPES


def is_reduced(atlas: StripedAtlas) -> bool:
    """No leaf of type c1 or c2.

    The equivalent set identity D = dZ u Sing is asserted on the way out.
    """
    types = classify_all(atlas)
    reduced = not any(t in (LeafType.C1, LeafType.C2) for t in types.values())
    singular = {leaf for leaf, t in types.items() if t in SINGULAR_TYPES}
    assert reduced == (boundary_leaves_D(atlas) == boundary_of_Z(atlas) | singular)
    return reduced


def leaf_kind(leaf: LeafClass) -> str:
    if isinstance(leaf, InteriorFamily):
        return "interior"
    return "glued" if leaf.glued else "boundary"


def leaf_record(atlas: StripedAtlas, leaf: LeafClass) -> dict:
    t = classify(atlas, leaf)
    return {
        "leaf": leaf.label,
        "kind": leaf_kind(leaf),
        "type": t.name,
        "special": t in SPECIAL_TYPES,
        "singular": t in SINGULAR_TYPES,
        "regular": t in REGULAR_TYPES,
        "cross_section": t not in NO_CROSS_SECTION_TYPES,
    }
