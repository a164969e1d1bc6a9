"""Seeded random atlases and exhaustive enumeration of small ones.

Random atlases are drawn with numpy's PCG64 bit generator seeded directly
with ``seed``:

1. the number of strips is uniform in ``1..max_strips``;
2. each side of each strip gets a uniform number of intervals in
   ``0..max_intervals_per_side``;
3. the intervals are shuffled and taken two at a time; each such couple is
   glued with probability ``gluing_density``, with a uniform sign.

Ids are ``S<k>`` for strips, ``S<k>l<j>`` / ``S<k>u<j>`` for intervals and
``g<k>`` for pairs.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .atlas import GluingPair, Strip, StripedAtlas
from .canonical import canonical_atlas, canonical_form


@dataclass(frozen=True)
class GenParams:
    seed: int
    max_strips: int = 4
    max_intervals_per_side: int = 2
    gluing_density: Fraction | float = Fraction(1, 2)

    def __post_init__(self):
        if self.max_strips < 0 or self.max_intervals_per_side < 0:
            raise ValueError("counts must be non-negative")
        if not 0 <= self.gluing_density <= 1:
            raise ValueError("gluing density must lie in [0, 1]")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def _strips(shapes) -> list[Strip]:
    return [Strip(f"S{k}",
                  tuple(f"S{k}l{j}" for j in range(lo)),
                  tuple(f"S{k}u{j}" for j in range(up)))
            for k, (lo, up) in enumerate(shapes)]


def random_atlas(p: GenParams) -> StripedAtlas:
    if p.max_strips == 0:
        return StripedAtlas()
    rng = np.random.Generator(np.random.PCG64(p.seed))
    n = int(rng.integers(1, p.max_strips + 1))
    shapes = [tuple(int(c) for c in rng.integers(0, p.max_intervals_per_side + 1, size=2))
              for _ in range(n)]
    strips = _strips(shapes)
    intervals = [i for s in strips for i in (*s.lower, *s.upper)]
    order = rng.permutation(len(intervals))
    density = float(p.gluing_density)
    pairs = []
    for k in range(0, len(order) - 1, 2):
        glue, sign = rng.random() < density, rng.random() < 0.5
        if glue:
            x, y = intervals[order[k]], intervals[order[k + 1]]
            pairs.append(GluingPair(f"g{len(pairs)}", x, y, 1 if sign else -1))
    return StripedAtlas(tuple(strips), tuple(pairs))


def _matchings(items: list) -> Iterator[list[tuple]]:
    """All partial matchings of ``items`` as lists of couples."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    yield from _matchings(rest)
    for k, other in enumerate(rest):
        for m in _matchings(rest[:k] + rest[k + 1:]):
            yield [(first, other)] + m


def _raw_atlases(max_strips: int, max_ivals: int) -> Iterator[StripedAtlas]:
    sides = range(max_ivals + 1)
    for n in range(1, max_strips + 1):
        for shapes in itertools.product(itertools.product(sides, sides), repeat=n):
            strips = _strips(shapes)
            intervals = [i for s in strips for i in (*s.lower, *s.upper)]
            for matching in _matchings(intervals):
                for signs in itertools.product((1, -1), repeat=len(matching)):
                    pairs = tuple(GluingPair(f"g{k}", x, y, sg)
                                  for k, ((x, y), sg) in enumerate(zip(matching, signs)))
                    yield StripedAtlas(tuple(strips), pairs)


def enumerate_small(max_strips: int, max_intervals_per_side: int) -> Iterator[StripedAtlas]:
    """Every atlas with 1..max_strips strips and at most
    ``max_intervals_per_side`` intervals per side, one per canonical class,
    each given in canonical form.  (2, 2) is about the practical limit."""
    seen = set()
    for a in _raw_atlases(max_strips, max_intervals_per_side):
        key = canonical_form(a)
        if key not in seen:
            seen.add(key)
            yield canonical_atlas(a)
