"""Brute-force Hausdorff closures in a finite model of the leaf space.

Each strip interior is sampled at ``m`` leaves ``t_0 < ... < t_{m-1}`` and
every boundary leaf is one more point.  The topology is generated by

* windows ``{t_a, ..., t_b}`` of consecutive samples of one strip (images of
  saturated open bands ``R x (s, s')`` inside the strip), and
* collars ``{w} u {first k samples near each interval of w}``, ``k = 1..m``
  (images of the saturation of an open set meeting the leaf ``w``; such a
  set must contain interior points of every strip containing an interval
  of ``w``, and saturating spreads them over whole horizontal lines).

Closures are computed from the definition, as the complement of the union
of all basic open sets missing the given set, and the Hausdorff closure is
the intersection of the closures of all basic neighbourhoods.  Nothing here
looks at leaf types or at the leaf-space graph.
"""
from __future__ import annotations

from .atlas import Side, StripedAtlas
from .leaves import BoundaryLeaf, leaf_of_interval


class FiniteModel:
    def __init__(self, atlas: StripedAtlas, m: int):
        if m < 3:
            raise ValueError("need at least three samples per strip")
        self.m = m
        self.points: list = []
        self.bit: dict = {}
        for s in atlas.strips:
            for k in range(m):
                self._add(("interior", s.id, k))
        self.leaves: list[BoundaryLeaf] = []
        for i in atlas.intervals():
            leaf = leaf_of_interval(atlas, i)
            if ("leaf", leaf) not in self.bit:
                self.leaves.append(leaf)
                self._add(("leaf", leaf))

        basis = []
        for s in atlas.strips:
            for a in range(m):
                for b in range(a, m):
                    basis.append(self._mask(("interior", s.id, k) for k in range(a, b + 1)))
        self.neighbourhoods: dict[BoundaryLeaf, list[int]] = {}
        for leaf in self.leaves:
            nbhds = []
            for depth in range(1, m + 1):
                pts = [("leaf", leaf)]
                for i in leaf.rep:
                    loc = atlas.locate(i)
                    ks = range(depth) if loc.side is Side.LOWER else range(m - depth, m)
                    pts.extend(("interior", loc.strip, k) for k in ks)
                nbhds.append(self._mask(pts))
            self.neighbourhoods[leaf] = nbhds
            basis.extend(nbhds)
        self.basis = basis
        self.full = (1 << len(self.points)) - 1

    def _add(self, point):
        self.bit[point] = 1 << len(self.points)
        self.points.append(point)

    def _mask(self, points) -> int:
        out = 0
        for p in points:
            out |= self.bit[p]
        return out

    def closure(self, mask: int) -> int:
        outside = 0
        for b in self.basis:
            if not b & mask:
                outside |= b
        return self.full & ~outside

    def basic_neighbourhoods(self, point) -> list[int]:
        bit = self.bit[point]
        return [b for b in self.basis if b & bit]

    def hausdorff_closure(self, point) -> int:
        out = self.full
        for b in self.basic_neighbourhoods(point):
            out &= self.closure(b)
        return out

    def leaves_in(self, mask: int) -> frozenset[BoundaryLeaf]:
        return frozenset(leaf for leaf in self.leaves if mask & self.bit[("leaf", leaf)])

    def points_in(self, mask: int) -> list:
        return [p for p in self.points if mask & self.bit[p]]


def model_hcl(atlas: StripedAtlas, m: int) -> dict[BoundaryLeaf, frozenset[BoundaryLeaf]]:
    """Boundary-leaf part of the Hausdorff closure of every boundary leaf."""
    fm = FiniteModel(atlas, m)
    return {leaf: fm.leaves_in(fm.hausdorff_closure(("leaf", leaf))) for leaf in fm.leaves}


def model_interior_is_hausdorff(atlas: StripedAtlas, m: int) -> bool:
    """Samples away from both ends of a strip have trivial Hausdorff closure."""
    fm = FiniteModel(atlas, m)
    for s in atlas.strips:
        for k in range(1, m - 1):
            p = ("interior", s.id, k)
            if fm.points_in(fm.hausdorff_closure(p)) != [p]:
                return False
    return True


def stable_model_hcl(atlas: StripedAtlas, ms=(3, 4, 5)):
    """The closures for every ``m`` in ``ms``, or ``None`` if they disagree."""
    results = [model_hcl(atlas, m) for m in ms]
    if any(r != results[0] for r in results[1:]):
        return None
    return results[0]
