"""Clockwise combinatorial maps on the disk.

Darts are integers 0..D-1. Each curve contributes two darts exchanged by
`twin`; `nxt` is the next dart CLOCKWISE around the origin vertex. The
corner of a dart d is the angular sector swept clockwise from d to nxt[d]
at origin(d); it belongs to face(d), the face to the right of d. With
clockwise rotations the face permutation is phi(d) = twin[nxt[d]], and a
clockwise walk along a face border steps through phi^{-1}.

Boundary vertices are the integers 1..n placed clockwise; internal
vertices are strings. The outer face orbit consists of one dart w_i per
boundary vertex (the dart hugging the boundary toward i-1), and
phi(w_i) = w_{i+1}.
"""

from __future__ import annotations

from .errors import (
    BoundaryOrderViolation,
    EulerViolation,
    NotInvolution,
    NotPermutation,
)

BLACK = "black"
WHITE = "white"
OUTER = "outer"


def vertex_sort_key(v):
    """Deterministic order over mixed int/str vertex labels."""
    return (0, v, "") if isinstance(v, int) else (1, 0, v)


class DiskMap:
    def __init__(self, n, twin, nxt, origin, vertices, outer_dart, black_darts):
        self.n = n
        self.twin = list(twin)
        self.nxt = list(nxt)
        self.origin = list(origin)
        self.vertices = list(vertices)
        self._validate_perms()
        self.prv = [0] * len(self.nxt)
        for d, e in enumerate(self.nxt):
            self.prv[e] = d
        self._build_faces()
        self._color_faces(outer_dart, black_darts)
        self._check_boundary(outer_dart)
        self._check_euler()
        self._index_vertices()

    # -- construction helpers ------------------------------------------------

    def _validate_perms(self):
        D = len(self.twin)
        if len(self.nxt) != D or len(self.origin) != D:
            raise NotPermutation("dart tables have mismatched lengths")
        for d in range(D):
            t = self.twin[d]
            if not (0 <= t < D) or t == d or self.twin[t] != d:
                raise NotInvolution(f"twin is not a fixed-point-free involution at dart {d}")
        if sorted(self.nxt) != list(range(D)):
            raise NotPermutation("next_at_vertex is not a permutation of the darts")
        # sigma orbits must be exactly the stars of the vertices
        seen = [False] * D
        star_of = {}
        for d in range(D):
            if seen[d]:
                continue
            orbit = []
            x = d
            while not seen[x]:
                seen[x] = True
                orbit.append(x)
                x = self.nxt[x]
            v = self.origin[orbit[0]]
            for y in orbit:
                if self.origin[y] != v:
                    raise NotPermutation(
                        f"rotation orbit at {v!r} contains dart {y} with origin {self.origin[y]!r}"
                    )
            if v in star_of:
                raise NotPermutation(f"vertex {v!r} splits into several rotation orbits")
            star_of[v] = orbit
        self._star_of = star_of

    def _build_faces(self):
        D = len(self.twin)
        self.face_of = [-1] * D
        self.faces = []
        for d in range(D):
            if self.face_of[d] != -1:
                continue
            orbit = []
            x = d
            while self.face_of[x] == -1:
                self.face_of[x] = len(self.faces)
                orbit.append(x)
                x = self.twin[self.nxt[x]]
            self.faces.append(orbit)

    def _color_faces(self, outer_dart, black_darts):
        self.face_color = [WHITE] * len(self.faces)
        self.outer_face = self.face_of[outer_dart]
        self.face_color[self.outer_face] = OUTER
        for d in black_darts:
            f = self.face_of[d]
            if f == self.outer_face:
                raise BoundaryOrderViolation(
                    "a tile interior coincides with the outer face; rotations are inconsistent"
                )
            self.face_color[f] = BLACK
        # white faces numbered 1..F by minimal dart id
        self.white_faces = [
            f for f in range(len(self.faces)) if self.face_color[f] == WHITE
        ]
        self.white_faces.sort(key=lambda f: self.faces[f][0])
        self._white_no = {f: i + 1 for i, f in enumerate(self.white_faces)}

    def _check_boundary(self, outer_dart):
        if self.origin[outer_dart] != 1:
            raise BoundaryOrderViolation("outer face marker dart must sit at boundary vertex 1")
        orbit = self.faces[self.outer_face]
        start = orbit.index(outer_dart)
        walk = orbit[start:] + orbit[:start]
        if [self.origin[d] for d in walk] != list(range(1, self.n + 1)):
            raise BoundaryOrderViolation(
                "boundary vertices are not 1..n clockwise along the outer face"
            )
        self.w_dart = {i + 1: d for i, d in enumerate(walk)}
        self.u_dart = {i: self.nxt[d] for i, d in enumerate(walk, start=1)}

    def _check_euler(self):
        V = len(self.vertices)
        if len(self._star_of) > V or any(v not in self._star_of for v in self.vertices):
            # declared vertices missing from the map, or darts at undeclared ones
            raise EulerViolation("vertex set does not match the darts")
        E = len(self.twin) // 2
        F = len(self.faces)
        if V - E + F != 2:
            raise EulerViolation(f"V-E+F = {V}-{E}+{F} = {V - E + F}, expected 2")

    def _index_vertices(self):
        # darts around each vertex in clockwise order from the canonical start:
        # boundary i starts at u_i (just after the outer gap), internal vertices
        # at their minimal dart id.
        self.vertex_darts = {}
        for v, orbit in self._star_of.items():
            if isinstance(v, int):
                start = self.u_dart[v]
            else:
                start = min(orbit)
            ordered = []
            x = start
            for _ in orbit:
                ordered.append(x)
                x = self.nxt[x]
            self.vertex_darts[v] = ordered

    # -- queries -------------------------------------------------------------

    def phi(self, d):
        return self.twin[self.nxt[d]]

    def phi_inv(self, d):
        return self.prv[self.twin[d]]

    def face(self, d):
        return self.face_of[d]

    def color(self, d):
        return self.face_color[self.face_of[d]]

    def white_number(self, face_idx):
        return self._white_no.get(face_idx)

    def target(self, d):
        return self.origin[self.twin[d]]

    def is_boundary(self, v):
        return isinstance(v, int)

    @property
    def dart_count(self):
        return len(self.twin)

    @property
    def curve_count(self):
        return len(self.twin) // 2

    def counts(self):
        """(V, E, F) with F counting white faces only."""
        return len(self.vertices), self.curve_count, len(self.white_faces)


def build_map(n, twin, nxt, origin, vertices, outer_dart, black_darts):
    """Validate dart tables and assemble a DiskMap.

    `vertices` is the full declared vertex collection (so stray isolated
    vertices fail the Euler check); `outer_dart` is w_1; `black_darts`
    holds one representative dart per black face.
    """
    return DiskMap(n, twin, nxt, origin, vertices, outer_dart, black_darts)


def face_orbits(m):
    """Face orbits in canonical order: sorted by minimal dart, each orbit
    listed from its minimal dart following the face permutation."""
    out = []
    for orbit in sorted(m.faces, key=lambda o: min(o)):
        i = orbit.index(min(orbit))
        out.append(orbit[i:] + orbit[:i])
    return out
