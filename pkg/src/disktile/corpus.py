"""Deterministic corpus of small tilings for test sweeps.

The base family is every dissection of the polygon by pairwise
noncrossing chords (shared endpoints allowed). Decorated variants add a
single internal vertex joined by spokes to corners of one face, a fan of
black triangles over the boundary, or a black 1-gon hanging at a vertex.
Candidates that fail validation (including ambiguous embeddings) are
skipped; duplicates are removed by canonical form. Order of output is
deterministic for fixed arguments; the seed only drives subset sampling
inside large faces.
"""

from __future__ import annotations

import random
from itertools import combinations

from .errors import DiskTileError
from .tiling import build_tiling

MAX_N = 8
MAX_TILES = 8


def chords(n):
    out = []
    for a in range(1, n + 1):
        for b in range(a + 2, n + 1):
            if a == 1 and b == n:
                continue
            out.append((a, b))
    return out


def _crosses(c1, c2):
    (a, b), (c, d) = c1, c2
    return (a < c < b < d) or (c < a < d < b)


def dissections(n, max_chords):
    """All pairwise noncrossing chord sets of the n-gon with at most
    max_chords chords, in lexicographic order."""
    cs = chords(n)
    out = []

    def rec(start, chosen):
        out.append(list(chosen))
        if len(chosen) == max_chords:
            return
        for i in range(start, len(cs)):
            if all(not _crosses(cs[i], c) for c in chosen):
                chosen.append(cs[i])
                rec(i + 1, chosen)
                chosen.pop()

    rec(0, [])
    return out


def _boundary_arcs(n):
    if n == 1:
        return []
    if n == 2:
        return [[1, 2], [2, 1]]
    return [[i, i % n + 1] for i in range(1, n + 1)]


def _try(n, tiles):
    try:
        return build_tiling(n=n, tiles=tiles)
    except DiskTileError:
        return None


def generate(n, max_tiles=MAX_TILES, seed=0, limit=None):
    """Valid tilings with boundary size n and at most max_tiles tiles,
    deduplicated up to relabeling of internal vertices."""
    if not (1 <= n <= MAX_N):
        raise ValueError(f"n must be between 1 and {MAX_N}")
    max_tiles = min(max_tiles, MAX_TILES)
    rng = random.Random(seed)
    seen = set()
    out = []

    def keep(t):
        if t is None or len(t.tiles) > max_tiles:
            return
        key = t.canonical_key()
        if key not in seen:
            seen.add(key)
            out.append(t)

    arcs = _boundary_arcs(n)
    base_tilings = []
    if n == 1:
        keep(_try(1, [[1]]))
        if out:
            base_tilings.append(out[0])
    elif n == 2:
        # the empty 2-gon needs rotations to tell its two arcs apart
        try:
            t = build_tiling(n=2, tiles=[[1, 2], [2, 1]],
                             rotations={1: [[0, 0], [1, 1]],
                                        2: [[1, 0], [0, 1]]})
            base_tilings.append(t)
            keep(t)
        except DiskTileError:
            pass
        for tiles in ([[1, 2, 2]], [[2, 1, 1]]):
            keep(_try(2, tiles))
    else:
        for ch in dissections(n, max_chords=max(0, max_tiles - len(arcs))):
            t = _try(n, arcs + [list(c) for c in ch])
            if t is not None:
                base_tilings.append(t)
                keep(t)

    # spokes from one internal vertex into corners of one face
    for t in base_tilings:
        room = max_tiles - len(t.tiles)
        if room < 1:
            continue
        for face in t.face_angles():
            verts = []
            for a in face:
                if a.vertex not in verts:
                    verts.append(a.vertex)
            subsets = []
            for size in range(1, min(len(verts), room) + 1):
                subsets.extend(combinations(verts, size))
            if len(subsets) > 24:
                subsets = rng.sample(subsets, 24)
                subsets.sort()
            for sub in subsets:
                keep(_try(n, [list(s) for s in t.tiles]
                          + [[v, "x"] for v in sub]))

    # fans of black triangles over the boundary, one apex
    if n >= 2:
        segs = list(range(1, n + 1)) if n > 2 else [1]
        for r in range(1, len(segs) + 1):
            for marked in combinations(segs, r):
                tiles = []
                for i in range(1, n + 1):
                    if n == 2 and i == 2:
                        a, b = 2, 1
                    else:
                        a, b = i, i % n + 1
                    if i in marked:
                        tiles.append([a, b, "x"])
                    else:
                        tiles.append([a, b])
                if len(tiles) <= max_tiles:
                    keep(_try(n, tiles))

    # a pocket (black ring pinched at one vertex) hanging at a vertex
    for t in base_tilings:
        if len(t.tiles) + 1 > max_tiles:
            continue
        for v in t.vertices():
            keep(_try(n, [list(s) for s in t.tiles] + [[v, v]]))

    # a single black 1-gon hanging at a vertex
    for t in list(out):
        if len(t.tiles) + 1 > max_tiles:
            continue
        for v in t.vertices():
            keep(_try(n, [list(s) for s in t.tiles] + [[v]]))

    if limit is not None:
        out = out[:limit]
    return out
