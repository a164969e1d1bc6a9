"""The space of leaves as a non-Hausdorff graph.

Each strip interior becomes an open edge whose two ends point towards the
strip's lower and upper boundary lines.  Each boundary leaf becomes a node
sitting at one or two *slots*: one slot per boundary interval, listed in
side order at the edge end of the interval's side.  All the closure
structure lives at the ends: nodes sharing an end cannot be separated.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, NamedTuple

import networkx as nx

from .atlas import Side, StripedAtlas
from .leaves import BoundaryLeaf, enumerate_leaves, leaf_of_interval


class EdgeEnd(NamedTuple):
    edge: str
    end: Side


@dataclass(frozen=True)
class LeafSpace:
    edges: tuple[str, ...]
    nodes: tuple[BoundaryLeaf, ...]
    attach: dict  # EdgeEnd -> tuple[BoundaryLeaf, ...]; no entries for loops
    loops: frozenset = frozenset()

    def ends(self) -> Iterator[EdgeEnd]:
        for e in self.edges:
            if e not in self.loops:
                yield EdgeEnd(e, Side.LOWER)
                yield EdgeEnd(e, Side.UPPER)

    def slots_of(self, node: BoundaryLeaf) -> list[EdgeEnd]:
        """Ends at which ``node`` sits, once per slot it occupies."""
        if node not in self.nodes:
            raise KeyError(f"unknown node {node.label}")
        return [end for end in self.ends() for n in self.attach[end] if n == node]


def build_leaf_space(atlas: StripedAtlas) -> LeafSpace:
    attach = {}
    for s in atlas.strips:
        for side in Side:
            attach[EdgeEnd(s.id, side)] = tuple(leaf_of_interval(atlas, i)
                                                for i in s.side(side))
    nodes = tuple(leaf for leaf in enumerate_leaves(atlas)
                  if isinstance(leaf, BoundaryLeaf))
    return LeafSpace(tuple(s.id for s in atlas.strips), nodes, attach)


def hcl(ls: LeafSpace, node: BoundaryLeaf) -> frozenset[BoundaryLeaf]:
    """Hausdorff closure of a node: itself plus everything sharing an end."""
    out = {node}
    for end in set(ls.slots_of(node)):
        out.update(ls.attach[end])
    return frozenset(out)


def special_points(ls: LeafSpace) -> frozenset[BoundaryLeaf]:
    return frozenset(n for n in ls.nodes if hcl(ls, n) != {n})


def regular_oracle(ls: LeafSpace, node: BoundaryLeaf) -> bool:
    """A node is regular when each of its ends carries one slot only and a
    glued node reaches two different ends."""
    ends = ls.slots_of(node)
    if len(set(ends)) != len(ends):
        return False
    return all(len(ls.attach[end]) == 1 for end in ends)


def cross_section_oracle(ls: LeafSpace, node: BoundaryLeaf) -> bool:
    """A transversal arc through the node exists unless the node is
    approached twice from the same end (both its intervals on one side)."""
    ends = ls.slots_of(node)
    return len(set(ends)) == len(ends)


def smooth(ls: LeafSpace) -> LeafSpace:
    """Erase every regular glued node, splicing its two ends together.

    Splicing the two ends of one edge closes it into a loop.  Splicing never
    changes the slot count of any other end, so the result is independent
    of the order in which nodes are erased.
    """
    edges = list(ls.edges)
    loops = set(ls.loops)
    attach = {end: tuple(slots) for end, slots in ls.attach.items()}
    nodes = list(ls.nodes)
    changed = True
    while changed:
        changed = False
        current = LeafSpace(tuple(edges), tuple(nodes), attach, frozenset(loops))
        for node in nodes:
            ends = current.slots_of(node)
            if len(ends) != 2 or not regular_oracle(current, node):
                continue
            (e1, s1), (e2, s2) = ends
            nodes.remove(node)
            if e1 == e2:
                del attach[(e1, Side.LOWER)], attach[(e1, Side.UPPER)]
                loops.add(e1)
            else:
                keep_lo = attach.pop(EdgeEnd(e1, s1.opposite))
                keep_up = attach.pop(EdgeEnd(e2, s2.opposite))
                del attach[EdgeEnd(e1, s1)], attach[EdgeEnd(e2, s2)]
                name = f"{e1}+{e2}"
                while name in edges:
                    name += "'"
                edges[edges.index(e1)] = name
                edges.remove(e2)
                attach[EdgeEnd(name, Side.LOWER)] = keep_lo
                attach[EdgeEnd(name, Side.UPPER)] = keep_up
            changed = True
            break
    out = LeafSpace(tuple(edges), tuple(nodes), {}, frozenset(loops))
    return LeafSpace(out.edges, out.nodes, {end: attach[end] for end in out.ends()}, out.loops)


def incidence_graph(ls: LeafSpace) -> nx.Graph:
    """Colored graph whose isomorphisms are exactly the leaf-space
    isomorphisms: edge vertices, end vertices, node vertices, with end-node
    links weighted by slot multiplicity."""
    g = nx.Graph()
    for e in ls.edges:
        g.add_node(("edge", e), kind="loop" if e in ls.loops else "edge")
    for n in ls.nodes:
        g.add_node(("node", n), kind="node")
    for end in ls.ends():
        g.add_node(("end", end), kind="end")
        g.add_edge(("edge", end.edge), ("end", end), mult=0)
        for n in ls.attach[end]:
            key = (("end", end), ("node", n))
            if g.has_edge(*key):
                g.edges[key]["mult"] += 1
            else:
                g.add_edge(*key, mult=1)
    return g


def leafspace_isomorphic(a: LeafSpace, b: LeafSpace) -> bool:
    """Search for a bijection of edges and nodes preserving slot incidence,
    ignoring slot order within an end and which end of an edge is which."""
    if (len(a.edges), len(a.nodes), len(a.loops)) != (len(b.edges), len(b.nodes), len(b.loops)):
        return False
    return nx.is_isomorphic(
        incidence_graph(a), incidence_graph(b),
        node_match=lambda u, v: u["kind"] == v["kind"],
        edge_match=lambda u, v: u["mult"] == v["mult"],
    )


# -- export ----------------------------------------------------------------

def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(ls: LeafSpace) -> str:
    """Each edge is drawn as a chain between its two end points; the nodes
    attached at an end fan out from it."""
    node_ids = {n: f"n{k}" for k, n in enumerate(ls.nodes)}
    out = ["graph leafspace {"]
    for n, nid in node_ids.items():
        out.append(f"  {nid} [shape=box, label={_quote(n.label)}];")
    for k, e in enumerate(ls.edges):
        if e in ls.loops:
            out.append(f"  e{k} [shape=point];")
            out.append(f"  e{k} -- e{k} [label={_quote(e)}];")
            continue
        lo, up = f"e{k}_lower", f"e{k}_upper"
        out.append(f"  {lo} [shape=point];")
        out.append(f"  {up} [shape=point];")
        out.append(f"  {lo} -- {up} [label={_quote(e)}, penwidth=2];")
        for side, pid in ((Side.LOWER, lo), (Side.UPPER, up)):
            for n in ls.attach[EdgeEnd(e, side)]:
                out.append(f"  {pid} -- {node_ids[n]} [style=dashed];")
    out.append("}")
    return "\n".join(out) + "\n"


def leafspace_to_obj(ls: LeafSpace) -> dict:
    return {
        "edges": list(ls.edges),
        "loops": [e for e in ls.edges if e in ls.loops],
        "nodes": [list(n.intervals) for n in ls.nodes],
        "attach": [{"edge": end.edge, "end": end.end.value,
                    "slots": [list(n.intervals) for n in ls.attach[end]]}
                   for end in ls.ends()],
    }


def export_json(ls: LeafSpace) -> str:
    return json.dumps(leafspace_to_obj(ls), separators=(",", ":")) + "\n"
