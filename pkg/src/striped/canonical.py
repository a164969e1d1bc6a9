"""Canonical form of an atlas up to relabeling, reordering and strip
symmetries (reversing the real line, exchanging the two sides).

Per connected component we try every strip as root in each of its four
orientations and walk the component breadth first.  A strip reached for
the first time through a pair is oriented so that the pair arrives on its
lower side with sign +1; exactly one of the four orientations does that,
so the walk is determined by the root alone.  Intervals are numbered in
scan order, which makes the strip shapes plus the sorted pair list a
complete description.  The smallest description over all roots is the
component's form; components are then sorted.
"""
from __future__ import annotations

from .atlas import GluingPair, Side, Strip, StripedAtlas, components, serialize

Encoding = tuple  # (shapes, pairs): ((n_lower, n_upper), ...), ((a, b, sign), ...)


def _oriented(strip: Strip, flip: bool, swap: bool) -> tuple[tuple, tuple]:
    lower, upper = (strip.upper, strip.lower) if swap else (strip.lower, strip.upper)
    if flip:
        lower, upper = lower[::-1], upper[::-1]
    return lower, upper


def encode(atlas: StripedAtlas, order: list[str], orientation: dict) -> Encoding:
    """Describe ``atlas`` with strips in ``order``, each transformed by
    ``orientation[strip] = (flip, swap)``; intervals numbered by appearance."""
    label = {}
    shapes = []
    for sid in order:
        lower, upper = _oriented(atlas.strip(sid), *orientation[sid])
        shapes.append((len(lower), len(upper)))
        for i in (*lower, *upper):
            label[i] = len(label)
    pairs = []
    for p in atlas.pairs:
        a, b = sorted((label[p.x], label[p.y]))
        fx = orientation[atlas.locate(p.x).strip][0]
        fy = orientation[atlas.locate(p.y).strip][0]
        sign = -p.sign if fx != fy else p.sign
        pairs.append((a, b, sign))
    return tuple(shapes), tuple(sorted(pairs))


def _walk(comp: StripedAtlas, root: str, flip: bool, swap: bool) -> Encoding:
    orientation = {root: (flip, swap)}
    order = [root]
    k = 0
    while k < len(order):
        sid = order[k]
        k += 1
        s_flip = orientation[sid][0]
        lower, upper = _oriented(comp.strip(sid), *orientation[sid])
        for i in (*lower, *upper):
            p = comp.pair_of(i)
            if p is None:
                continue
            j = p.other(i)
            loc = comp.locate(j)
            if loc.strip in orientation:
                continue
            # sign seen in the new charts is sign * (-1)^(flips of both hosts)
            t_flip = (p.sign < 0) != s_flip
            orientation[loc.strip] = (t_flip, loc.side is Side.UPPER)
            order.append(loc.strip)
    return encode(comp, order, orientation)


def component_encoding(comp: StripedAtlas) -> Encoding:
    return min(_walk(comp, s.id, flip, swap)
               for s in comp.strips for flip in (False, True) for swap in (False, True))


def decode(encodings) -> StripedAtlas:
    """Build the atlas with ids ``s<k>``, ``i<k>``, ``g<k>`` described by a
    sequence of component encodings."""
    strips, pairs = [], []
    n_int = 0
    for shapes, comp_pairs in encodings:
        base = n_int
        for lo, up in shapes:
            ids = [f"i{n_int + k}" for k in range(lo + up)]
            strips.append(Strip(f"s{len(strips)}", tuple(ids[:lo]), tuple(ids[lo:])))
            n_int += lo + up
        for a, b, sign in comp_pairs:
            pairs.append(GluingPair(f"g{len(pairs)}", f"i{base + a}", f"i{base + b}", sign))
    return StripedAtlas(tuple(strips), tuple(pairs))


def canonical_atlas(atlas: StripedAtlas) -> StripedAtlas:
    return decode(sorted(component_encoding(c) for c in components(atlas)))


def canonical_form(atlas: StripedAtlas) -> str:
    """Serialization of :func:`canonical_atlas`.  Two valid atlases have
    the same form exactly when one is obtained from the other by renaming
    ids, reordering strips or pairs, exchanging the two ends of a pair, and
    applying strip flips and side swaps."""
    return serialize(canonical_atlas(atlas))
