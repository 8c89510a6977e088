"""Bicolored tilings of the disk.

A tiling is a collection of black tiles in a disk with n boundary vertices
labeled 1..n clockwise. Each tile is a cyclic vertex sequence listed
clockwise:

- 1 vertex: a 1-gon (loop) whose disk is black,
- 2 distinct vertices: a simple edge, canonically drawn as a thin arc,
- 2 equal vertices: a boundary pocket (two loop curves with black between),
- r >= 3 vertices: a black r-gon.

Vertices may repeat inside a tile only when a boundary vertex appears
exactly twice in consecutive positions. Tiles meet only at shared
vertices, every boundary segment is covered by exactly one tile, and the
complement of the tiles is a union of white faces.

The embedding is a clockwise rotation system. Each vertex carries a list
of "items" (tile corners, arc ends, loops) in clockwise order; boundary
lists are linear, starting with the corner hugging the next boundary
vertex and ending with the corner hugging the previous one. Rotations can
be given explicitly or inferred when unambiguous.

Dart ids follow input order: tiles in listed order, curves within a tile
in listed cyclic order, forward dart before backward dart.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .diskmap import BLACK, OUTER, WHITE, build_map, vertex_sort_key
from .errors import (
    AmbiguousEmbedding,
    BothBoundary,
    BoundaryOrderViolation,
    BoundarySegmentDoubleCovered,
    BoundarySegmentUncovered,
    DiskTileError,
    EssentialAngle,
    InvalidRotations,
    NeighborNotWhite,
    NotASubdiskCycle,
    NotFlippable,
    NotLastCrossing,
    NotOneGon,
    RepeatedVertexInTile,
    SameStrand,
    SiteNotApplicable,
)

_LABEL_RE = re.compile(r"^[A-Za-z0-9_]+$")

LOOP, ARC, POCKET, POLY = "loop", "arc", "pocket", "poly"


@dataclass(frozen=True)
class Angle:
    """A white corner: the sector swept clockwise from `dart` to the next
    dart at the same vertex. Identified as vertex:face:occurrence."""

    dart: int
    vertex: object
    face_no: int
    occ: int

    @property
    def id(self):
        return f"{self.vertex}:{self.face_no}:{self.occ}"


def _tile_kind(seq):
    if len(seq) == 1:
        return LOOP
    if len(seq) == 2:
        return POCKET if seq[0] == seq[1] else ARC
    return POLY


class _Sketch:
    """Dart/curve/item expansion of a tile list, before any embedding."""

    def __init__(self, n, tiles, internal):
        self.n = n
        self.tiles = [tuple(t) for t in tiles]
        self.internal = list(internal)
        self.kinds = []
        self.tile_base = []
        self.curves = []          # (fwd, bwd, a, b, tile)
        self.item_darts = {}      # (t, c) -> tuple of darts
        self.dart_item = {}
        self.origin = []
        self.twin = []
        self.pools = {}           # vertex -> [(t, c), ...]
        self.cover_candidates = {i: [] for i in range(1, n + 1)}
        self._expand()

    def _next_boundary(self, i):
        return i % self.n + 1

    def _expand(self):
        for v in range(1, self.n + 1):
            self.pools[v] = []
        for x in self.internal:
            self.pools[x] = []
        for t, seq in enumerate(self.tiles):
            if not seq:
                raise DiskTileError(f"tile {t} is empty")
            for v in seq:
                if v not in self.pools:
                    raise DiskTileError(f"tile {t} references undeclared vertex {v!r}")
            self._check_repeats(t, seq)
            kind = _tile_kind(seq)
            self.kinds.append(kind)
            base = len(self.origin)
            self.tile_base.append(base)
            r = len(seq)
            if kind == LOOP:
                v = seq[0]
                self._add_curve(v, v, t)
                self._add_item(t, 0, v, (base, base + 1))
            elif kind == ARC:
                a, b = seq
                self._add_curve(a, b, t)
                self._add_item(t, 0, a, (base,))
                self._add_item(t, 1, b, (base + 1,))
            elif kind == POCKET:
                w = seq[0]
                self._add_curve(w, w, t)
                self._add_curve(w, w, t)
                self._add_item(t, 0, w, (base, base + 3))
                self._add_item(t, 1, w, (base + 2, base + 1))
            else:
                for j in range(r):
                    self._add_curve(seq[j], seq[(j + 1) % r], t)
                for c in range(r):
                    out = base + 2 * c
                    inn = base + 2 * ((c - 1) % r) + 1
                    self._add_item(t, c, seq[c], (out, inn))
            self._scan_cover(t, seq, kind, base)

    def _check_repeats(self, t, seq):
        counts = {}
        for v in seq:
            counts[v] = counts.get(v, 0) + 1
        for v, c in counts.items():
            if c == 1:
                continue
            if not isinstance(v, int):
                raise RepeatedVertexInTile(
                    f"internal vertex {v!r} repeats in tile {t}"
                )
            if c > 2:
                raise RepeatedVertexInTile(
                    f"boundary vertex {v} appears {c} times in tile {t}"
                )
            a, b = [j for j, u in enumerate(seq) if u == v]
            if not (b - a == 1 or (a == 0 and b == len(seq) - 1)):
                raise RepeatedVertexInTile(
                    f"boundary vertex {v} repeats non-consecutively in tile {t}"
                )

    def _add_curve(self, a, b, t):
        fwd = len(self.origin)
        self.origin += [a, b]
        self.twin += [fwd + 1, fwd]
        self.curves.append((fwd, fwd + 1, a, b, t))

    def _add_item(self, t, c, v, darts):
        self.item_darts[(t, c)] = darts
        for d in darts:
            self.dart_item[d] = (t, c)
        self.pools[v].append((t, c))

    def _scan_cover(self, t, seq, kind, base):
        r = len(seq)
        if kind == ARC:
            pairs = [(seq[0], seq[1], base), (seq[1], seq[0], base + 1)]
        elif kind == LOOP:
            pairs = [(seq[0], seq[0], base)]
        elif kind == POCKET:
            pairs = [(seq[0], seq[0], base), (seq[0], seq[0], base + 2)]
        else:
            pairs = [(seq[j], seq[(j + 1) % r], base + 2 * j) for j in range(r)]
        for a, b, d in pairs:
            if isinstance(a, int) and b == self._next_boundary(a):
                self.cover_candidates[a].append(d)


class Tiling:
    """An embedded bicolored disk tiling.

    Construct through build_tiling; the constructor wires pre-validated
    tables together.
    """

    def __init__(self, sk, item_lists, dm):
        self.n = sk.n
        self.tiles = tuple(sk.tiles)
        self.internal = tuple(sk.internal)
        self.kinds = tuple(sk.kinds)
        self.tile_base = tuple(sk.tile_base)
        self.curves = tuple(sk.curves)
        self.item_darts = dict(sk.item_darts)
        self.dart_item = dict(sk.dart_item)
        self.items = {v: list(lst) for v, lst in item_lists.items()}
        self.map = dm
        self.dart_curve = [0] * dm.dart_count
        for ci, (f, b, _, _, _) in enumerate(self.curves):
            self.dart_curve[f] = ci
            self.dart_curve[b] = ci
        self._build_angles()
        self.provenance = None

    # ---- basic counts and queries -----------------------------------------

    @property
    def vertex_count(self):
        return self.n + len(self.internal)

    @property
    def edge_count(self):
        """Number of tiles (the edges of the tiling, not curve segments)."""
        return len(self.tiles)

    @property
    def face_count(self):
        return len(self.map.white_faces)

    @property
    def angle_count(self):
        return len(self.angles)

    def vertices(self):
        return list(range(1, self.n + 1)) + list(self.internal)

    def is_boundary_vertex(self, v):
        return isinstance(v, int)

    def tile_of_curve(self, ci):
        return self.curves[ci][4]

    def tile_of_dart(self, d):
        return self.curves[self.dart_curve[d]][4]

    def _build_angles(self):
        dm = self.map
        occ = {}
        per_dart = {}
        for v in dm.vertex_darts:
            for d in dm.vertex_darts[v]:
                if dm.color(d) != WHITE:
                    continue
                fno = dm.white_number(dm.face(d))
                k = occ.get((v, fno), 0)
                occ[(v, fno)] = k + 1
                per_dart[d] = Angle(dart=d, vertex=v, face_no=fno, occ=k)
        ordered = []
        for f in dm.white_faces:
            orbit = dm.faces[f]
            walk = [orbit[0]] + orbit[:0:-1]  # clockwise border walk
            for d in walk:
                ordered.append(per_dart[d])
        self.angles = ordered
        self.angle_by_id = {a.id: a for a in ordered}
        self.angle_of_dart = per_dart

    def face_angles(self):
        """Angle lists per white face, clockwise, indexed by face number - 1."""
        out = [[] for _ in self.map.white_faces]
        for a in self.angles:
            out[a.face_no - 1].append(a)
        return out

    # ---- serialization -----------------------------------------------------

    def to_data(self):
        rot = {}
        for v, lst in self.items.items():
            key = str(v)
            if self.is_boundary_vertex(v):
                rot[key] = [[t, c] for t, c in lst]
            else:
                anchor = min(
                    range(len(lst)), key=lambda i: self.item_darts[lst[i]][0]
                )
                rot[key] = [[t, c] for t, c in lst[anchor:] + lst[:anchor]]
        return {
            "n": self.n,
            "internal_vertices": [str(x) for x in self.internal],
            "tiles": [[str(v) for v in seq] for seq in self.tiles],
            "rotations": rot,
        }

    # ---- isomorphism -------------------------------------------------------

    def canonical_key(self):
        """Boundary-anchored canonical form: relabel darts by BFS from the
        dart hugging vertex 1 toward vertex n, walking next_at_vertex and
        twin. Internal vertex names and tile order do not matter."""
        dm = self.map
        start = dm.w_dart[1]
        new = {start: 0}
        order = [start]
        qi = 0
        while qi < len(order):
            d = order[qi]
            qi += 1
            for e in (dm.nxt[d], dm.twin[d]):
                if e not in new:
                    new[e] = len(order)
                    order.append(e)
        nxt2 = tuple(new[dm.nxt[d]] for d in order)
        twin2 = tuple(new[dm.twin[d]] for d in order)
        blacks = []
        for f in range(len(dm.faces)):
            if dm.face_color[f] == BLACK:
                blacks.append(min(new[d] for d in dm.faces[f]))
        return (self.n, nxt2, twin2, tuple(sorted(blacks)))

    def isomorphic_to(self, other):
        return self.canonical_key() == other.canonical_key()

    # ---- moves -------------------------------------------------------------

    def reduce(self, edge):
        return reduce(self, edge)

    def flip(self, edge):
        return flip(self, edge)

    def hourglass(self, site):
        return hourglass(self, site)

    def digon(self, site):
        return digon(self, site)

    def degenerate(self, angle_id, allow_non_last=False):
        return degenerate(self, angle_id, allow_non_last=allow_non_last)

    def split_subtiling(self, cycle):
        return split_subtiling(self, cycle)


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def _parse_data(data):
    if not isinstance(data, dict):
        raise DiskTileError("tiling data must be a mapping")
    try:
        n = int(data["n"])
    except (KeyError, TypeError, ValueError):
        raise DiskTileError("tiling data needs an integer field 'n'")
    if n < 1:
        raise DiskTileError("n must be at least 1")
    internal = [str(x) for x in data.get("internal_vertices", [])]
    boundary_names = {str(i) for i in range(1, n + 1)}
    for x in internal:
        if not _LABEL_RE.match(x):
            raise DiskTileError(f"bad internal vertex label {x!r}")
        if x in boundary_names:
            raise DiskTileError(f"internal label {x!r} collides with a boundary vertex")
    if len(set(internal)) != len(internal):
        raise DiskTileError("duplicate internal vertex labels")

    def conv(label):
        s = str(label)
        if s in boundary_names:
            return int(s)
        return s

    tiles = [[conv(v) for v in seq] for seq in data.get("tiles", [])]
    if not tiles:
        raise DiskTileError("tiling data needs a nonempty 'tiles' list")
    rotations = None
    if "rotations" in data and data["rotations"] is not None:
        rotations = {}
        for key, lst in data["rotations"].items():
            rotations[conv(key)] = [(int(t), int(c)) for t, c in lst]
    return n, tiles, internal, rotations


def build_tiling(data=None, *, n=None, tiles=None, internal_vertices=None,
                 rotations=None, embed_cap=20000):
    """Build and validate a tiling.

    Either pass a file-format mapping as `data`, or the native pieces:
    `n`, `tiles` (cyclic clockwise vertex sequences; boundary vertices as
    ints, internal as strings), optional `internal_vertices`, optional
    `rotations` (vertex -> clockwise item list of (tile, corner) pairs).
    Without rotations the embedding is inferred when unambiguous.
    """
    if data is not None:
        n, tiles, internal_vertices, rotations = _parse_data(data)
    if n is None or tiles is None:
        raise DiskTileError("build_tiling needs data or n and tiles")
    tiles = [tuple(t) for t in tiles]
    if internal_vertices is None:
        seen = []
        for seq in tiles:
            for v in seq:
                if not isinstance(v, int) and v not in seen:
                    seen.append(v)
        internal_vertices = seen
    sk = _Sketch(n, tiles, internal_vertices)

    for i in range(1, n + 1):
        cands = sk.cover_candidates[i]
        if not cands:
            raise BoundarySegmentUncovered(
                f"no tile covers the boundary segment ({i},{i % n + 1})"
            )
        if rotations is None and len(cands) > 1:
            raise BoundarySegmentDoubleCovered(
                f"segment ({i},{i % n + 1}) has {len(cands)} candidate covering "
                "curves; rotation data is required"
            )

    if rotations is not None:
        item_lists = _check_rotations(sk, rotations)
        return _assemble(sk, item_lists)
    return _infer(sk, embed_cap)


def _check_rotations(sk, rotations):
    item_lists = {}
    for v, pool in sk.pools.items():
        if not pool:
            continue
        if v not in rotations:
            raise InvalidRotations(f"rotation list missing for vertex {v!r}")
        lst = [tuple(it) for it in rotations[v]]
        if sorted(lst) != sorted(pool):
            raise InvalidRotations(
                f"rotation list at {v!r} does not match the items of the tiles"
            )
        item_lists[v] = lst
    for v in rotations:
        if v not in sk.pools or not sk.pools[v]:
            raise InvalidRotations(f"rotation list for unknown vertex {v!r}")
    return item_lists


def _assemble(sk, item_lists):
    D = len(sk.origin)
    nxt = [None] * D
    for v, lst in item_lists.items():
        darts = [d for it in lst for d in sk.item_darts[it]]
        for a, b in zip(darts, darts[1:] + darts[:1]):
            nxt[a] = b

    # boundary ring checks before the full map validation, for clear errors
    u = {}
    w = {}
    for i in range(1, sk.n + 1):
        lst = item_lists.get(i)
        if not lst:
            raise BoundarySegmentUncovered(f"boundary vertex {i} has no items")
        first = sk.item_darts[lst[0]][0]
        last = sk.item_darts[lst[-1]][-1]
        if first not in sk.cover_candidates[i]:
            raise BoundaryOrderViolation(
                f"rotation at boundary vertex {i} does not start on the "
                "covering curve of its outgoing segment"
            )
        u[i] = first
        w[i] = last
    for i in range(1, sk.n + 1):
        j = i % sk.n + 1
        if sk.twin[u[i]] != w[j]:
            raise BoundaryOrderViolation(
                f"covering curves of segment ({i},{j}) do not close up"
            )

    vertices = list(range(1, sk.n + 1)) + list(sk.internal)
    black = []
    for t, kind in enumerate(sk.kinds):
        if kind != ARC:
            black.append(sk.tile_base[t])
    dm = build_map(sk.n, sk.twin, nxt, sk.origin, vertices, w[1], black)

    for t, kind in enumerate(sk.kinds):
        if kind == ARC:
            continue
        base = sk.tile_base[t]
        if kind == LOOP:
            expected = {base}
        elif kind == POCKET:
            expected = {base, base + 2}
        else:
            expected = {base + 2 * j for j in range(len(sk.tiles[t]))}
        got = set(dm.faces[dm.face(base)])
        if got != expected:
            raise InvalidRotations(
                f"rotation data does not bound the interior of tile {t}"
            )
    return Tiling(sk, item_lists, dm)


def _infer(sk, cap):
    # pin the covering items at each boundary vertex, then enumerate the
    # remaining orders; accept when exactly one embedding class validates.
    pinned = {}
    total = 1
    for i in range(1, sk.n + 1):
        cand = sk.cover_candidates[i][0]
        u_item = sk.dart_item[cand]
        prev = (i - 2) % sk.n + 1
        w_dart = sk.twin[sk.cover_candidates[prev][0]]
        w_item = sk.dart_item[w_dart]
        mids = [it for it in sk.pools[i] if it not in (u_item, w_item)]
        if u_item == w_item and mids:
            raise BoundaryOrderViolation(
                f"boundary vertex {i} is wrapped by its covering tile but "
                "carries further items"
            )
        pinned[i] = (u_item, w_item, mids)
        total *= max(1, _factorial(len(mids)))
    anchors = {}
    for x in sk.internal:
        pool = sorted(sk.pools[x])
        if not pool:
            anchors[x] = (None, [])
            continue
        anchors[x] = (pool[0], pool[1:])
        total *= max(1, _factorial(len(pool) - 1))
    if total > cap:
        raise AmbiguousEmbedding(
            f"{total} candidate embeddings exceed the enumeration cap {cap}"
        )

    choices = []
    keys = []
    for i in range(1, sk.n + 1):
        u_item, w_item, mids = pinned[i]
        opts = []
        for perm in itertools.permutations(mids):
            if u_item == w_item:
                opts.append([u_item])
            else:
                opts.append([u_item] + list(perm) + [w_item])
        keys.append(i)
        choices.append(opts)
    for x in sk.internal:
        anchor, rest = anchors[x]
        if anchor is None:
            keys.append(x)
            choices.append([[]])
            continue
        opts = [[anchor] + list(p) for p in itertools.permutations(rest)]
        keys.append(x)
        choices.append(opts)

    found = {}
    first_error = None
    for combo in itertools.product(*choices):
        item_lists = {v: lst for v, lst in zip(keys, combo) if lst}
        try:
            t = _assemble(sk, item_lists)
        except DiskTileError as e:
            if first_error is None:
                first_error = e
            continue
        key = t.canonical_key()
        if key not in found:
            found[key] = t
        if len(found) > 1:
            raise AmbiguousEmbedding(
                "tile data admits more than one embedding; provide rotations"
            )
    if not found:
        if first_error is not None:
            raise first_error
        raise DiskTileError("no embedding found")
    return next(iter(found.values()))


def _factorial(k):
    out = 1
    for j in range(2, k + 1):
        out *= j
    return out


# ---------------------------------------------------------------------------
# dart-table surgery shared by the moves
# ---------------------------------------------------------------------------


class _Surgeon:
    """Mutable copy of a tiling's dart tables plus bookkeeping for the
    rebuild: surviving black markers, tracked outer dart, fresh darts."""

    def __init__(self, t):
        dm = t.map
        self.t = t
        self.n = t.n
        self.nxt = {d: dm.nxt[d] for d in range(dm.dart_count)}
        self.prv = {d: dm.prv[d] for d in range(dm.dart_count)}
        self.twin = {d: dm.twin[d] for d in range(dm.dart_count)}
        self.origin = {d: dm.origin[d] for d in range(dm.dart_count)}
        self.live = set(range(dm.dart_count))
        self._fresh = dm.dart_count
        self.black_marks = set()
        for ti, kind in enumerate(t.kinds):
            if kind != ARC:
                self.black_marks.add(t.tile_base[ti])
        self.w1 = dm.w_dart[1]
        self.internal = set(t.internal)

    def fresh_label(self, base="v"):
        used = {str(x) for x in self.internal}
        used |= {str(i) for i in range(1, self.n + 1)}
        k = 1
        while f"{base}{k}" in used:
            k += 1
        lab = f"{base}{k}"
        self.internal.add(lab)
        return lab

    def new_dart(self, origin):
        d = self._fresh
        self._fresh += 1
        self.live.add(d)
        self.origin[d] = origin
        self.nxt[d] = d
        self.prv[d] = d
        self.twin[d] = d
        return d

    def set_twin(self, a, b):
        self.twin[a] = b
        self.twin[b] = a

    def set_nxt(self, a, b):
        self.nxt[a] = b
        self.prv[b] = a

    def insert_after(self, d, new):
        nx = self.nxt[d]
        self.set_nxt(d, new)
        self.set_nxt(new, nx)

    def insert_before(self, d, new):
        self.insert_after(self.prv[d], new)

    def remove_dart(self, d):
        p, nx = self.prv[d], self.nxt[d]
        if p != d:
            self.set_nxt(p, nx)
        self.live.discard(d)
        self.black_marks.discard(d)

    def move_origin(self, d, v):
        self.origin[d] = v

    def rebuild(self):
        return _rebuild_from_tables(
            self.n, self.live, self.nxt, self.twin, self.origin,
            self.black_marks, self.w1,
        )


def _rebuild_from_tables(n, live, nxt, twin, origin, black_marks, w1):
    """Derive a tile/rotation description from raw dart tables, rebuild a
    validated Tiling, and return (tiling, dart_map old->new)."""
    live = set(live)
    nxt = dict(nxt)
    twin = dict(twin)
    origin = dict(origin)
    marks = {d for d in black_marks if d in live}

    def orbits():
        seen = set()
        out = []
        for d in sorted(live):
            if d in seen:
                continue
            orb = []
            x = d
            while x not in seen:
                seen.add(x)
                orb.append(x)
                x = twin[nxt[x]]
            out.append(orb)
        return out

    # collapse a simple edge left in two-curve (black digon) form to an arc
    while True:
        changed = False
        for orb in orbits():
            if len(orb) != 2 or not (set(orb) & marks):
                continue
            d1, d2 = orb
            if origin[d1] == origin[d2]:
                continue  # genuine boundary pocket
            o1, o2 = twin[d1], twin[d2]
            pred = {}
            for d in live:
                pred[nxt[d]] = d
            for d in (d1, d2):
                p = pred[d]
                if p != d:
                    nxt[p] = nxt[d]
                    pred[nxt[d]] = p
                live.discard(d)
                marks.discard(d)
            twin[o1] = o2
            twin[o2] = o1
            changed = True
            break
        if not changed:
            break

    face_of = {}
    faces = []
    for d in sorted(live):
        if d in face_of:
            continue
        orb = []
        x = d
        while x not in face_of:
            face_of[x] = len(faces)
            orb.append(x)
            x = twin[nxt[x]]
        faces.append(orb)

    black_faces = sorted({face_of[d] for d in marks})
    outer_face = face_of[w1]
    if outer_face in black_faces:
        raise DiskTileError("surgery produced a black outer face")

    inv = {}
    for orb in faces:
        for a, b in zip(orb, orb[1:] + orb[:1]):
            inv[b] = a

    tiles = []
    for f in black_faces:
        orb = faces[f]
        start = min(orb)
        walk = [start]
        x = inv[start]
        while x != start:
            walk.append(x)
            x = inv[x]
        seq = [origin[d] for d in walk]
        r = len(seq)
        if r == 1:
            tiles.append(((seq[0],), LOOP, [(walk[0], twin[walk[0]])]))
            continue
        if r == 2 and seq[0] != seq[1]:
            raise DiskTileError("unexpected two-sided simple edge after surgery")
        best = min(
            range(r),
            key=lambda s: tuple(vertex_sort_key(seq[(s + j) % r]) for j in range(r)),
        )
        seq2 = [seq[(best + j) % r] for j in range(r)]
        walk2 = [walk[(best + j) % r] for j in range(r)]
        kind = POCKET if r == 2 else POLY
        curves = [(walk2[j], twin[walk2[j]]) for j in range(r)]
        tiles.append((tuple(seq2), kind, curves))

    curve_seen = set()
    for _, _, curves in tiles:
        for fwd, bwd in curves:
            curve_seen.add(fwd)
            curve_seen.add(bwd)
    for d in sorted(live):
        if d in curve_seen:
            continue
        e = twin[d]
        curve_seen.add(d)
        curve_seen.add(e)
        a, b = origin[d], origin[e]
        if a == b:
            raise DiskTileError("loose loop curve without a black side")
        if vertex_sort_key(a) <= vertex_sort_key(b):
            tiles.append(((a, b), ARC, [(d, e)]))
        else:
            tiles.append(((b, a), ARC, [(e, d)]))

    tiles.sort(key=lambda rec: min(min(f, b) for f, b in rec[2]))

    dart_role = {}
    for ti, (seq, kind, curves) in enumerate(tiles):
        for j, (fwd, bwd) in enumerate(curves):
            dart_role[fwd] = (ti, j, True)
            dart_role[bwd] = (ti, j, False)

    def item_of(d):
        ti, j, is_fwd = dart_role[d]
        seq, kind, curves = tiles[ti]
        r = len(seq)
        if kind == LOOP:
            return (ti, 0)
        if kind == ARC:
            return (ti, 0 if is_fwd else 1)
        if is_fwd:
            return (ti, j)
        return (ti, (j + 1) % r)

    outer_orbit = faces[outer_face]
    if len(outer_orbit) != n:
        raise BoundaryOrderViolation(
            "outer face does not visit each boundary vertex once"
        )
    w_of = {origin[d]: d for d in outer_orbit}
    if sorted(w_of) != list(range(1, n + 1)):
        raise BoundaryOrderViolation("outer face misses some boundary vertex")

    vertex_darts = {}
    for d in sorted(live):
        vertex_darts.setdefault(origin[d], None)
    for v in vertex_darts:
        if isinstance(v, int):
            start = nxt[w_of[v]]
        else:
            start = min(d for d in live if origin[d] == v)
        walk = [start]
        x = nxt[start]
        while x != start:
            walk.append(x)
            x = nxt[x]
        vertex_darts[v] = walk

    item_lists = {}
    for v, walk in vertex_darts.items():
        lst = []
        for d in walk:
            it = item_of(d)
            if not lst or lst[-1] != it:
                lst.append(it)
        if len(lst) > 1 and lst[0] == lst[-1]:
            lst.pop(0)
        item_lists[v] = lst

    present_internal = sorted(
        (v for v in vertex_darts if not isinstance(v, int)), key=vertex_sort_key
    )
    t2 = build_tiling(
        n=n,
        tiles=[list(seq) for seq, _, _ in tiles],
        internal_vertices=present_internal,
        rotations=item_lists,
    )

    dart_map = {}
    for d in live:
        ti, j, is_fwd = dart_role[d]
        base = t2.tile_base[ti]
        kind = t2.kinds[ti]
        if kind in (LOOP, ARC):
            dart_map[d] = base if is_fwd else base + 1
        else:
            dart_map[d] = base + 2 * j + (0 if is_fwd else 1)
    return t2, dart_map


def _finish_move(t, surgeon, op, site):
    t2, dart_map = surgeon.rebuild()
    angle_map = {}
    claimed = set()
    pending = []
    for a in t.angles:
        nd = dart_map.get(a.dart)
        na = t2.angle_of_dart.get(nd) if nd is not None else None
        if na is not None:
            angle_map[a.id] = na.id
            claimed.add(na.id)
        else:
            pending.append(a)
    # a corner whose opening dart was replaced during surgery is recovered
    # through its surviving closing flank (the corner of d is the sector
    # from d to nxt[d], so the new corner is the one closed by the image)
    for a in pending:
        ne = dart_map.get(t.map.nxt[a.dart])
        if ne is None:
            continue
        na = t2.angle_of_dart.get(t2.map.prv[ne])
        if na is not None and na.id not in claimed:
            angle_map[a.id] = na.id
            claimed.add(na.id)
    t2.provenance = {"op": op, "site": site, "angle_map": angle_map,
                     "dart_map": dart_map}
    return t2


# ---------------------------------------------------------------------------
# moves
# ---------------------------------------------------------------------------


def angles(t):
    """The angles of the tiling in canonical order."""
    return list(t.angles)


def reduce(t, edge):
    """Remove a black 1-gon whose surrounding face is white."""
    if not isinstance(edge, int) or not (0 <= edge < len(t.tiles)):
        raise NotOneGon(f"no tile with index {edge!r}")
    if t.kinds[edge] != LOOP:
        raise NotOneGon(f"tile {edge} is {t.kinds[edge]}, not a 1-gon")
    base = t.tile_base[edge]
    l_f, l_b = base, base + 1
    if t.map.color(l_b) == OUTER:
        raise NeighborNotWhite("the 1-gon is bordered by the outer face")
    s = _Surgeon(t)
    s.remove_dart(l_f)
    s.remove_dart(l_b)
    return _finish_move(t, s, "reduce", edge)


def flip(t, edge):
    """Flip an arc between two distinct triangular white faces."""
    if not isinstance(edge, int) or not (0 <= edge < len(t.tiles)):
        raise NotFlippable(f"no tile with index {edge!r}")
    if t.kinds[edge] != ARC:
        raise NotFlippable(f"tile {edge} is not an arc")
    base = t.tile_base[edge]
    dm = t.map
    f1, f2 = dm.face(base), dm.face(base + 1)
    if dm.face_color[f1] != WHITE or dm.face_color[f2] != WHITE or f1 == f2:
        raise NotFlippable("the arc does not separate two distinct white faces")
    if len(dm.faces[f1]) != 3 or len(dm.faces[f2]) != 3:
        raise NotFlippable("both flanking faces must have exactly three corners")
    a, c = t.tiles[edge]
    zb = [d for d in dm.faces[f1] if dm.origin[d] not in (a, c)]
    zd = [d for d in dm.faces[f2] if dm.origin[d] not in (a, c)]
    if len(zb) != 1 or len(zd) != 1:
        raise NotFlippable("flanking faces do not span a quadrilateral")
    zb, zd = zb[0], zd[0]
    b, dv = dm.origin[zb], dm.origin[zd]
    if b == dv:
        raise NotFlippable("the two opposite corners coincide")
    s = _Surgeon(t)
    s.remove_dart(base)
    s.remove_dart(base + 1)
    nb = s.new_dart(b)
    nd = s.new_dart(dv)
    s.set_twin(nb, nd)
    s.insert_after(zb, nb)
    s.insert_after(zd, nd)
    return _finish_move(t, s, "flip", edge)


def _hourglass_unpinch(t, v):
    if v not in t.items or t.is_boundary_vertex(v):
        raise SiteNotApplicable(f"{v!r} is not an internal vertex")
    lst = t.items[v]
    if len(lst) != 2:
        raise SiteNotApplicable(f"vertex {v!r} does not carry exactly two items")
    kinds = [t.kinds[it[0]] for it in lst]
    if LOOP in kinds:
        raise SiteNotApplicable("cannot unpinch through a 1-gon")
    dm = t.map
    last0 = t.item_darts[lst[0]][-1]
    last1 = t.item_darts[lst[1]][-1]
    if dm.face(last0) == dm.face(last1):
        raise SiteNotApplicable("both flanks of the vertex lie on one white face")
    s = _Surgeon(t)
    for it in lst:
        kind = t.kinds[it[0]]
        darts = t.item_darts[it]
        if kind == ARC:
            d_vu = darts[0]
            d_uv = s.twin[d_vu]
            u = s.origin[d_uv]
            p, nx = s.prv[d_vu], s.nxt[d_vu]
            if p != d_vu:
                s.set_nxt(p, nx)
            s.move_origin(d_vu, u)
            s.insert_after(d_uv, d_vu)
            s.black_marks.add(d_uv)
        else:
            out_a, in_a = darts
            t_out = s.twin[out_a]
            t_in = s.twin[in_a]
            s.remove_dart(out_a)
            s.remove_dart(in_a)
            s.set_twin(t_in, t_out)
            s.black_marks.add(t_in)
    s.internal.discard(v)
    return _finish_move(t, s, "hourglass", v)


def _hourglass_pinch(t, d1, d2):
    dm = t.map
    for d in (d1, d2):
        if not (0 <= d < dm.dart_count):
            raise SiteNotApplicable(f"no dart {d}")
    if dm.face(d1) != dm.face(d2) or dm.face_color[dm.face(d1)] != WHITE:
        raise SiteNotApplicable("the two darts must border one white face")
    c1, c2 = t.dart_curve[d1], t.dart_curve[d2]
    if c1 == c2:
        raise SiteNotApplicable("the two darts lie on the same curve")
    t1, t2 = t.tile_of_curve(c1), t.tile_of_curve(c2)
    if t1 == t2:
        raise SiteNotApplicable("the two curves belong to the same tile")
    s = _Surgeon(t)
    x = s.fresh_label()
    new_items = []
    for d, ti in ((d1, t1), (d2, t2)):
        kind = t.kinds[ti]
        if kind == POCKET:
            raise SiteNotApplicable("cannot pinch a pocket tile")
        if kind == LOOP:
            l_b = d
            l_f = s.twin[d]
            s.set_nxt(s.prv[l_b], s.nxt[l_b])
            s.move_origin(l_b, x)
            s.black_marks.discard(l_f)
            new_items.append([l_b])
        elif kind == ARC:
            o, tt = s.origin[d], s.origin[s.twin[d]]
            d1t = s.twin[d]
            m1 = s.new_dart(x)
            m2 = s.new_dart(x)
            m5 = s.new_dart(tt)
            m6 = s.new_dart(o)
            s.set_twin(d, m1)
            s.set_twin(m2, m5)
            s.set_twin(d1t, m6)
            s.insert_before(d, m6)
            s.insert_before(d1t, m5)
            s.black_marks.add(m6)
            new_items.append([m1, m2])
        else:
            d1t = s.twin[d]
            m1 = s.new_dart(x)
            m2 = s.new_dart(x)
            s.set_twin(d, m1)
            s.set_twin(d1t, m2)
            new_items.append([m1, m2])
    seq = new_items[0] + new_items[1]
    for a, b in zip(seq, seq[1:] + seq[:1]):
        s.set_nxt(a, b)
    return _finish_move(t, s, "hourglass", (d1, d2))


def hourglass(t, site):
    """Hourglass equivalence. A vertex label unpinches a two-item internal
    vertex; a pair of dart ids (on one white face, distinct curves of
    distinct tiles) pinches them together at a new internal vertex."""
    if isinstance(site, (tuple, list)) and len(site) == 2 \
            and all(isinstance(x, int) for x in site):
        return _hourglass_pinch(t, site[0], site[1])
    return _hourglass_unpinch(t, site)


def _digon_contract(t, face_no):
    dm = t.map
    whites = dm.white_faces
    if not (1 <= face_no <= len(whites)):
        raise SiteNotApplicable(f"no white face {face_no}")
    orbit = dm.faces[whites[face_no - 1]]
    if len(orbit) != 2:
        raise SiteNotApplicable(f"white face {face_no} is not a digon")
    p, q = orbit
    x1, x2 = dm.origin[p], dm.origin[q]
    if x1 == x2:
        raise SiteNotApplicable("digon corners sit at one vertex")
    if t.is_boundary_vertex(x1) and t.is_boundary_vertex(x2):
        raise BothBoundary(f"both digon vertices {x1}, {x2} are boundary")
    c1, c2 = t.dart_curve[p], t.dart_curve[q]
    if c1 == c2:
        raise SiteNotApplicable("digon face is bounded by a single curve")
    t1, t2 = t.tile_of_curve(c1), t.tile_of_curve(c2)
    if t1 == t2:
        raise SiteNotApplicable("digon curves belong to one tile")
    # keep the boundary vertex, otherwise the smaller label
    if t.is_boundary_vertex(x2) or (
        not t.is_boundary_vertex(x1)
        and vertex_sort_key(x2) < vertex_sort_key(x1)
    ):
        p, q = q, p
        x1, x2 = x2, x1
        t1, t2 = t2, t1
    for tile in (t1, t2):
        if t.kinds[tile] in (LOOP, POCKET):
            raise SiteNotApplicable("digon curve belongs to a loop or pocket tile")
    s = _Surgeon(t)
    # stitch darts: the dart at x1 whose successor is rewired once the two
    # digon sides have merged (last dart of the tile's corner for an arc,
    # preceding out-dart for a polygon)
    rec = []
    for dart, tile in ((p, t1), (q, t2)):
        kind = t.kinds[tile]
        a = s.prv[dart] if kind == POLY else dart
        rec.append((dart, kind, a))
    for d in list(s.live):
        if s.origin[d] == x2:
            s.move_origin(d, x1)
    for dart, kind, a in rec:
        if kind == POLY:
            s.remove_dart(s.twin[dart])
            s.remove_dart(dart)
    (_, _, a1), (_, _, a2) = rec
    sa, sb = s.nxt[a1], s.nxt[a2]
    s.set_nxt(a1, sb)
    s.set_nxt(a2, sa)
    s.black_marks.add(a1)
    s.black_marks.add(a2)
    s.internal.discard(x2)
    return _finish_move(t, s, "digon", ("contract", face_no))


def _split_role1(t, s, item, x, x2):
    """Split helper for the tile whose corner opens the decontraction site:
    its inward half moves to the new vertex. Returns the clockwise dart
    lists of the tile's corner at x and at x2."""
    ti = item[0]
    kind = t.kinds[ti]
    darts = t.item_darts[item]
    if kind in (POLY, POCKET):
        out1, in1 = darts
        r1 = s.new_dart(x)
        r1b = s.new_dart(x2)
        s.set_twin(r1, r1b)
        s.move_origin(in1, x2)
        return [out1, r1], [r1b, in1]
    if kind == ARC:
        d_xu = darts[0]
        d_ux = s.twin[d_xu]
        u = s.origin[d_ux]
        r1 = s.new_dart(x)
        r1b = s.new_dart(x2)
        s.set_twin(r1, r1b)
        n_u = s.new_dart(u)
        n_ub = s.new_dart(x2)
        s.set_twin(n_u, n_ub)
        s.insert_before(d_ux, n_u)
        s.black_marks.add(d_xu)
        return [d_xu, r1], [r1b, n_ub]
    l_f, l_b = darts
    s.move_origin(l_b, x2)
    s.black_marks.discard(l_f)
    return [l_f], [l_b]


def _split_role2(t, s, item, x, x2):
    """Split helper for the tile whose corner closes the site: its outward
    half moves to the new vertex."""
    ti = item[0]
    kind = t.kinds[ti]
    darts = t.item_darts[item]
    if kind in (POLY, POCKET):
        out2, in2 = darts
        r2 = s.new_dart(x)
        r2b = s.new_dart(x2)
        s.set_twin(r2, r2b)
        s.move_origin(out2, x2)
        return [r2, in2], [out2, r2b]
    if kind == ARC:
        d_xu = darts[0]
        d_ux = s.twin[d_xu]
        u = s.origin[d_ux]
        r2 = s.new_dart(x)
        r2b = s.new_dart(x2)
        s.set_twin(r2, r2b)
        n_u = s.new_dart(u)
        n_ub = s.new_dart(x2)
        s.set_twin(n_u, n_ub)
        s.insert_after(d_ux, n_u)
        s.black_marks.add(d_ux)
        return [r2, d_xu], [n_ub, r2b]
    l_f, l_b = darts
    s.move_origin(l_b, x2)
    s.black_marks.discard(l_f)
    return [l_f], [l_b]


def _digon_decontract(t, v, dart_a=None, dart_b=None):
    lst = t.items.get(v)
    if lst is None:
        raise SiteNotApplicable(f"no vertex {v!r}")
    if t.is_boundary_vertex(v):
        if dart_a is not None or dart_b is not None:
            raise SiteNotApplicable("boundary decontraction takes just the vertex")
        if len(lst) < 2 or lst[0][0] == lst[-1][0]:
            raise SiteNotApplicable(
                f"boundary vertex {v} has no two distinct covering tiles"
            )
        item_a, item_b = lst[0], lst[-1]
        s1 = lst[1:-1]
        s2 = []
        site = (v,)
    else:
        if dart_a is None or dart_b is None:
            raise SiteNotApplicable(
                "internal decontraction needs two darts naming the items"
            )
        item_a = t.dart_item.get(dart_a)
        item_b = t.dart_item.get(dart_b)
        if item_a is None or item_b is None:
            raise SiteNotApplicable("unknown dart in decontraction site")
        if item_a not in lst or item_b not in lst or item_a == item_b:
            raise SiteNotApplicable(
                "decontraction darts must name two distinct items at the vertex"
            )
        if item_a[0] == item_b[0]:
            raise SiteNotApplicable("decontraction items belong to one tile")
        ia = lst.index(item_a)
        ring = lst[ia:] + lst[:ia]
        jb = ring.index(item_b)
        s1 = ring[1:jb]
        s2 = ring[jb + 1:]
        site = (v, dart_a, dart_b)
    s = _Surgeon(t)
    x2 = s.fresh_label()
    at_x_a, at_x2_a = _split_role1(t, s, item_a, v, x2)
    at_x_b, at_x2_b = _split_role2(t, s, item_b, v, x2)

    for it in s1:
        for d in t.item_darts[it]:
            s.move_origin(d, x2)

    # rotation at the original vertex: [A', B', S2]; a boundary vertex
    # keeps its outer gap after B' (the incoming covering corner)
    if len(at_x_a) == 2:
        s.set_nxt(at_x_a[0], at_x_a[1])
    if len(at_x_b) == 2:
        s.set_nxt(at_x_b[0], at_x_b[1])
    s.set_nxt(at_x_a[-1], at_x_b[0])
    if s2:
        first_s2 = t.item_darts[s2[0]][0]
        last_s2 = t.item_darts[s2[-1]][-1]
        s.set_nxt(at_x_b[-1], first_s2)
        s.set_nxt(last_s2, at_x_a[0])
    else:
        s.set_nxt(at_x_b[-1], at_x_a[0])

    # rotation at the new vertex: [B@x2, A@x2, S1]
    if len(at_x2_b) == 2:
        s.set_nxt(at_x2_b[0], at_x2_b[1])
    if len(at_x2_a) == 2:
        s.set_nxt(at_x2_a[0], at_x2_a[1])
    s.set_nxt(at_x2_b[-1], at_x2_a[0])
    if s1:
        first_s1 = t.item_darts[s1[0]][0]
        last_s1 = t.item_darts[s1[-1]][-1]
        s.set_nxt(at_x2_a[-1], first_s1)
        s.set_nxt(last_s1, at_x2_b[0])
    else:
        s.set_nxt(at_x2_a[-1], at_x2_b[0])
    t2 = _finish_move(t, s, "digon", ("decontract",) + site)

    # The corners that slide from v onto the new vertex are carried by
    # all-new darts, so the dart-based map in _finish_move cannot see them.
    # Recover them positionally: both vertex rings keep the cyclic order of
    # the old ring, anchored at the fresh digon corners.
    dart_map = t2.provenance["dart_map"]
    amap = t2.provenance["angle_map"]
    g_v = t2.angle_of_dart[dart_map[at_x_a[-1]]]
    g_x2 = t2.angle_of_dart[dart_map[at_x2_b[-1]]]

    def ring_from(tt, w, aid, drop_first):
        ring = [tt.angle_of_dart[d] for d in tt.map.vertex_darts[w]
                if d in tt.angle_of_dart]
        i = next(j for j, b in enumerate(ring) if b.id == aid)
        ring = ring[i:] + ring[:i]
        return ring[1:] if drop_first else ring

    anchor = t.angle_of_dart[t.item_darts[item_a][-1]]
    old_ring = ring_from(t, v, anchor.id, False)
    moved, stayed = old_ring[:len(s1) + 1], old_ring[len(s1) + 1:]
    new_x2 = ring_from(t2, x2, g_x2.id, True)
    new_v = ring_from(t2, v, g_v.id, True)
    assert len(new_x2) == len(moved) and len(new_v) == len(stayed)
    taken = set(amap.values())
    for a, b in zip(moved + stayed, new_x2 + new_v):
        cur = amap.get(a.id)
        assert cur is None or cur == b.id
        if cur is None and b.id not in taken:
            amap[a.id] = b.id
            taken.add(b.id)
    return t2


def digon(t, site):
    """Digon equivalence. site = ("contract", face_no) shrinks a white
    digon face; ("decontract", i) splits boundary vertex i through its two
    covering tiles; ("decontract", v, dart_a, dart_b) splits internal
    vertex v through the two items holding those darts."""
    if not isinstance(site, (tuple, list)) or not site:
        raise SiteNotApplicable("digon site must be a tagged tuple")
    tag = site[0]
    if tag == "contract" and len(site) == 2:
        return _digon_contract(t, int(site[1]))
    if tag == "decontract" and len(site) == 2:
        return _digon_decontract(t, site[1])
    if tag == "decontract" and len(site) == 4:
        return _digon_decontract(t, site[1], int(site[2]), int(site[3]))
    raise SiteNotApplicable(f"bad digon site {site!r}")


def degenerate(t, angle_id, allow_non_last=False):
    """Degenerate a non-essential angle: fill its corner with a black
    triangle, merging the two flanking tiles into one."""
    ang = t.angle_by_id.get(angle_id)
    if ang is None:
        raise SiteNotApplicable(f"no angle {angle_id!r}")
    from . import positroid, strands

    if positroid.is_essential(t, angle_id):
        raise EssentialAngle(f"angle {angle_id} appears in every matching")

    trips = strands.scott(t)
    crossers = []
    for tr in trips:
        for d, _outb in tr.steps:
            if d == ang.dart:
                crossers.append(tr)
    if len(crossers) != 2:
        raise SameStrand(f"angle {angle_id} is not crossed by two strand passes")
    tr1, tr2 = crossers
    if tr1.source is None or tr2.source is None:
        raise SameStrand(f"angle {angle_id} lies on a closed cycle")
    if tr1 is tr2:
        raise SameStrand(
            f"angle {angle_id} is crossed twice by the strand from {tr1.source}"
        )
    if not allow_non_last:
        shared = {d for d, _ in tr1.steps} & {d for d, _ in tr2.steps}
        last1 = [d for d, _ in tr1.steps if d in shared][-1]
        last2 = [d for d, _ in tr2.steps if d in shared][-1]
        if ang.dart not in (last1, last2):
            raise NotLastCrossing(
                f"angle {angle_id} is not the last crossing of strands "
                f"{tr1.source} and {tr2.source}"
            )

    dm = t.map
    d0 = ang.dart
    sig_d0 = dm.nxt[d0]
    v = ang.vertex
    v1 = dm.target(d0)
    v2 = dm.target(sig_d0)
    if v1 == v or v2 == v:
        raise SiteNotApplicable("angle is flanked by a loop curve")
    if v1 == v2:
        raise SiteNotApplicable("flanking curves end at one vertex")
    t1 = t.tile_of_dart(d0)
    t2 = t.tile_of_dart(sig_d0)
    if t1 == t2:
        raise SiteNotApplicable("flanking curves belong to one tile")

    s = _Surgeon(t)
    q = s.twin[sig_d0]
    n1 = s.new_dart(v1)
    n2 = s.new_dart(v2)
    s.set_twin(n1, n2)
    s.insert_before(s.twin[d0], n1)
    s.insert_after(q, n2)
    s.black_marks.add(d0)
    s.black_marks.add(n1)
    if t.kinds[t1] != ARC:
        s.remove_dart(s.twin[d0])
        s.remove_dart(d0)
    if t.kinds[t2] != ARC:
        s.remove_dart(q)
        s.remove_dart(sig_d0)
    return _finish_move(t, s, "degenerate", angle_id)


# ---------------------------------------------------------------------------
# subtiling split
# ---------------------------------------------------------------------------


@dataclass
class RemainderTiling:
    """The complement of a subdisk: white faces outside the cut with their
    angles (ids taken from the ambient tiling), plus the vertex rules for
    its matchings."""

    face_angles: list
    required_vertices: frozenset
    cut_vertices: frozenset
    outer_boundary: frozenset
    vertex_of_angle: dict


@dataclass
class SubtilingSplit:
    inner: Tiling
    remainder: RemainderTiling
    cycle: tuple
    vertex_map: dict
    inner_angle_map: dict


def split_subtiling(t, cycle):
    """Cut the tiling along a closed vertex cycle running on existing
    curves; return the inner tiling (relabeled as its own disk) and the
    remainder."""
    cyc = list(cycle)
    if len(cyc) < 2 or len(set(cyc)) != len(cyc):
        raise NotASubdiskCycle("cycle must list at least two distinct vertices")
    for v in cyc:
        if v not in t.items:
            raise NotASubdiskCycle(f"unknown vertex {v!r} in cycle")
    m = len(cyc)
    dm = t.map

    by_ends = {}
    for ci, (f, b, a, bb, _) in enumerate(t.curves):
        by_ends.setdefault(frozenset((a, bb)), []).append(ci)
    cyc_curves = []
    for j in range(m):
        a, b = cyc[j], cyc[(j + 1) % m]
        cands = by_ends.get(frozenset((a, b)), [])
        if len(cands) == 0:
            raise NotASubdiskCycle(f"no curve joins {a!r} and {b!r}")
        if len(cands) > 1:
            raise NotASubdiskCycle(f"several parallel curves join {a!r} and {b!r}")
        cyc_curves.append(cands[0])
    if len(set(cyc_curves)) != m:
        raise NotASubdiskCycle("cycle reuses a curve")

    cut = set(cyc_curves)
    parent = list(range(len(dm.faces)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for ci, (f, b, _, _, _) in enumerate(t.curves):
        if ci in cut:
            continue
        fa, fb = find(dm.face(f)), find(dm.face(b))
        if fa != fb:
            parent[fa] = fb
    comps = {find(f) for f in range(len(dm.faces))}
    if len(comps) != 2:
        raise NotASubdiskCycle(
            f"cycle splits the faces into {len(comps)} components, not 2"
        )
    outside = find(dm.outer_face)
    for ci in cut:
        f, b = t.curves[ci][0], t.curves[ci][1]
        if {find(dm.face(f)), find(dm.face(b))} != comps:
            raise NotASubdiskCycle("a cycle curve does not separate the two sides")

    # orient the cycle clockwise around the inner disk
    f0, b0 = t.curves[cyc_curves[0]][0], t.curves[cyc_curves[0]][1]
    d01 = f0 if dm.origin[f0] == cyc[0] else b0
    if find(dm.face(d01)) == outside:
        cyc = [cyc[0]] + cyc[:0:-1]
        cyc_curves = cyc_curves[::-1]

    relabel = {v: j + 1 for j, v in enumerate(cyc)}
    live = set()
    for ci, (f, b, _, _, _) in enumerate(t.curves):
        if ci in cut:
            live.update((f, b))
        elif find(dm.face(f)) != outside and find(dm.face(b)) != outside:
            live.update((f, b))

    taken = {str(j) for j in range(1, m + 1)}
    rename = {}
    counter = 1
    for d in sorted(live):
        v = dm.origin[d]
        if v in relabel or isinstance(v, int) or v in rename:
            continue
        if str(v) in taken:
            while f"v{counter}" in taken:
                counter += 1
            rename[v] = f"v{counter}"
            taken.add(f"v{counter}")
        else:
            rename[v] = v
            taken.add(str(v))

    nxt = {}
    twin = {d: dm.twin[d] for d in live}
    origin = {}
    for d in live:
        v = dm.origin[d]
        origin[d] = relabel.get(v, rename.get(v, v))
        e = dm.nxt[d]
        while e not in live:
            e = dm.nxt[e]
        nxt[d] = e

    last_curve = cyc_curves[-1]
    f, b = t.curves[last_curve][0], t.curves[last_curve][1]
    cand = [d for d in (f, b) if dm.origin[d] == cyc[0]]
    if len(cand) != 1 or find(dm.face(cand[0])) != outside:
        raise NotASubdiskCycle("cycle orientation could not be fixed")
    w1 = cand[0]

    marks = set()
    for ti, kind in enumerate(t.kinds):
        if kind == ARC:
            continue
        base = t.tile_base[ti]
        if base in live and find(dm.face(base)) != outside:
            marks.add(base)
    inner, dart_map = _rebuild_from_tables(m, live, nxt, twin, origin, marks, w1)

    inner_angle_map = {}
    for a in t.angles:
        nd = dart_map.get(a.dart)
        if nd is None:
            continue
        na = inner.angle_of_dart.get(nd)
        if na is not None:
            inner_angle_map[na.id] = a.id

    out_face_angles = []
    for idx, fno in enumerate(dm.white_faces):
        if find(fno) == outside:
            out_face_angles.append([a for a in t.angles if a.face_no == idx + 1])
    cut_vs = frozenset(cyc)
    required = frozenset(
        v for v in t.internal
        if v not in cut_vs
        and any(find(dm.face(d)) == outside for d in dm.vertex_darts[v])
    )
    rem = RemainderTiling(
        face_angles=out_face_angles,
        required_vertices=required,
        cut_vertices=cut_vs,
        outer_boundary=frozenset(range(1, t.n + 1)),
        vertex_of_angle={a.id: a.vertex for row in out_face_angles for a in row},
    )
    return SubtilingSplit(
        inner=inner,
        remainder=rem,
        cycle=tuple(cyc),
        vertex_map=relabel,
        inner_angle_map=inner_angle_map,
    )
