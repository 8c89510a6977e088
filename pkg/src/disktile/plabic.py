"""Stellar replacement: the plabic graph of a tiling.

Every tiling vertex becomes a white vertex, every white face becomes a
black vertex placed inside it, and every angle becomes an edge between
the two. Boundary positions get degree-one marker vertices joined to the
white vertex at the same position. Matchings of the tiling turn into
almost perfect matchings of the graph and those into perfect
orientations.
"""

from __future__ import annotations

import json

from .errors import InvalidMatching
from . import positroid


class PlabicGraph:
    """Bipartite graph in a disk. Nodes are keyed by kind:
    ("w", vertex label) for white images of tiling vertices,
    ("f", face number) for black images of white faces,
    ("b", i) for the degree-one boundary marker at position i.
    Edges are keyed by angle id for internal edges and by "bd:i" for
    boundary edges; each maps to its endpoint pair."""

    def __init__(self, n, white, black, edges, rotations):
        self.n = n
        self.white = white
        self.black = black
        self.edges = edges
        self.rotations = rotations

    @property
    def internal_edges(self):
        return {k: e for k, e in self.edges.items() if not k.startswith("bd:")}

    def vertex_count(self):
        return len(self.white) + len(self.black) + self.n

    def edge_count(self):
        return len(self.edges)

    def internal_faces(self):
        """Number of regions the drawing cuts the disk into, boundary
        circle included, outer region excluded. By Euler's formula this is
        edges minus vertices plus connected components, and it equals the
        tile count of the source tiling."""
        nodes = (
            [("w", v) for v in self.white]
            + [("f", f) for f in self.black]
            + [("b", i) for i in range(1, self.n + 1)]
        )
        index = {node: i for i, node in enumerate(nodes)}
        parent = list(range(len(nodes)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        def union(i, j):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj

        nedges = len(self.edges)
        for a, b in self.edges.values():
            union(index[a], index[b])
        for i in range(1, self.n + 1):
            union(index[("b", i)], index[("b", i % self.n + 1)])
            nedges += 1
        comps = len({find(i) for i in range(len(nodes))})
        return nedges - len(nodes) + comps

    def to_json(self):
        def node(x):
            return [x[0], str(x[1])]

        return json.dumps(
            {
                "n": self.n,
                "white": [str(v) for v in self.white],
                "black": self.black,
                "edges": {k: [node(a), node(b)] for k, (a, b) in
                          sorted(self.edges.items())},
                "rotations": {
                    f"{kind}:{label}": [k for k in rot]
                    for (kind, label), rot in sorted(
                        self.rotations.items(), key=lambda kv: str(kv[0]))
                },
            },
            indent=2,
        )

    def to_dot(self, orientation=None):
        def nid(x):
            kind, label = x
            return f"{kind}_{label}"

        lines = []
        directed = orientation is not None
        lines.append("digraph plabic {" if directed else "graph plabic {")
        for v in self.white:
            lines.append(
                f'  {nid(("w", v))} [shape=circle, style=filled, '
                f'fillcolor=white, label="{v}"];')
        for f in self.black:
            lines.append(
                f'  {nid(("f", f))} [shape=circle, style=filled, '
                f'fillcolor=black, fontcolor=white, label="f{f}"];')
        for i in range(1, self.n + 1):
            lines.append(
                f'  {nid(("b", i))} [shape=none, label="{i}\'"];')
        sep = " -> " if directed else " -- "
        for k, (a, b) in sorted(self.edges.items()):
            if directed:
                a, b = orientation.direction[k]
            lines.append(f'  {nid(a)}{sep}{nid(b)} [label="{k}"];')
        lines.append("}")
        return "\n".join(lines)


class PerfectOrientation:
    """Direction per edge key, as (source node, target node). Invariant:
    every black vertex has exactly one outgoing edge and every white
    vertex exactly one incoming edge."""

    def __init__(self, graph, direction):
        self.graph = graph
        self.direction = direction

    def check(self):
        into_white = {v: 0 for v in self.graph.white}
        out_of_black = {f: 0 for f in self.graph.black}
        for src, dst in self.direction.values():
            if dst[0] == "w":
                into_white[dst[1]] += 1
            if src[0] == "f":
                out_of_black[src[1]] += 1
        bad_w = [v for v, c in into_white.items() if c != 1]
        bad_b = [f for f, c in out_of_black.items() if c != 1]
        return not bad_w and not bad_b


def stellar(t):
    """The plabic graph of the tiling, with the edge-to-angle bijection
    kept in the edge keys."""
    white = t.vertices()
    black = list(range(1, t.face_count + 1))
    edges = {}
    for a in t.angles:
        edges[a.id] = (("w", a.vertex), ("f", a.face_no))
    for i in range(1, t.n + 1):
        edges[f"bd:{i}"] = (("b", i), ("w", i))

    rotations = {}
    for f in black:
        rotations[("f", f)] = []
    for a in t.angles:
        rotations[("f", a.face_no)].append(a.id)
    for v in white:
        rot = []
        for d in t.map.vertex_darts[v]:
            a = t.angle_of_dart.get(d)
            if a is not None:
                rot.append(a.id)
        if t.is_boundary_vertex(v):
            rot.append(f"bd:{v}")
        rotations[("w", v)] = rot
    for i in range(1, t.n + 1):
        rotations[("b", i)] = [f"bd:{i}"]
    return PlabicGraph(t.n, white, black, edges, rotations)


def matching_to_apm(t, g, m):
    """Edge set of the almost perfect matching induced by a tiling
    matching: the edges of the matched angles plus the boundary edges of
    the unmatched boundary vertices."""
    free = positroid.boundary(t, m)
    apm = {a.id if hasattr(a, "id") else str(a) for a in m}
    for k in apm:
        if k not in g.edges:
            raise InvalidMatching(f"angle {k} has no edge in the graph")
    apm |= {f"bd:{i}" for i in free}
    used = {}
    for k in apm:
        a, b = g.edges[k]
        w = b if b[0] == "w" else a
        used[w] = used.get(w, 0) + 1
    bad = [v for v, c in used.items() if c != 1]
    if bad or len(used) != len(g.white):
        raise InvalidMatching("edge set is not almost perfect")
    return frozenset(apm)


def apm_to_orientation(g, apm):
    """Perfect orientation of an almost perfect matching: matched edges
    point into their white endpoint, all other edges point out of it."""
    direction = {}
    for k, (a, b) in g.edges.items():
        if b[0] == "w":
            a, b = b, a
        # a is now the white endpoint
        direction[k] = (b, a) if k in apm else (a, b)
    po = PerfectOrientation(g, direction)
    if not po.check():
        raise AssertionError("matching produced a non-perfect orientation")
    return po
