"""Small named atlases used throughout the tests and the documentation."""
from __future__ import annotations

from .atlas import GluingPair, Strip, StripedAtlas


def _atlas(strips, glue=()):
    return StripedAtlas(
        tuple(Strip(sid, tuple(lo), tuple(up)) for sid, lo, up in strips),
        tuple(GluingPair(pid, x, y, s) for pid, x, y, s in glue),
    )


#: a bare open strip
OPEN = _atlas([("A", [], [])])
#: one closed side with a single interval
HALF = _atlas([("A", ["x"], [])])
#: two unglued intervals on one side
FORK = _atlas([("A", ["x1", "x2"], [])])
#: standard cylinder and Moebius band
CYL = _atlas([("A", ["x"], ["y"])], [("g", "x", "y", +1)])
MOB = _atlas([("A", ["x"], ["y"])], [("g", "x", "y", -1)])
#: a side folded onto itself, covering the whole side
FOLD1 = _atlas([("A", ["x1", "x2"], [])], [("g", "x1", "x2", +1)])
#: a side folded onto itself, leaving a third interval free
FOLD2 = _atlas([("A", ["x1", "x2", "x3"], [])], [("g", "x1", "x2", +1)])
#: two strips glued side to side along full, single-interval sides
CHAIN = _atlas([("A", [], ["a"]), ("B", ["b"], [])], [("g", "a", "b", +1)])
#: two strips glued along two intervals of each side
LADDER = _atlas([("A", [], ["a1", "a2"]), ("B", ["b1", "b2"], [])],
                [("g1", "a1", "b1", +1), ("g2", "a2", "b2", +1)])
#: two strips glued head to tail into a cylinder
DOUBLE_CHAIN = _atlas([("A", ["a1"], ["a2"]), ("B", ["b1"], ["b2"])],
                      [("g1", "a2", "b1", +1), ("g2", "b2", "a1", +1)])

FIXTURES = {
    "OPEN": OPEN, "HALF": HALF, "FORK": FORK, "CYL": CYL, "MOB": MOB,
    "FOLD1": FOLD1, "FOLD2": FOLD2, "CHAIN": CHAIN, "LADDER": LADDER,
    "DOUBLE_CHAIN": DOUBLE_CHAIN,
}
