"""Shared tiling builders for the test suite."""

from disktile import build_tiling


def rim(n):
    return [[i, i % n + 1] for i in range(1, n + 1)]


def hexagon():
    return build_tiling(n=6, tiles=rim(6))


def spoked_hexagon():
    """Hexagon with three spokes into a central internal vertex."""
    return build_tiling(n=6, tiles=rim(6) + [[1, "x"], [3, "x"], [5, "x"]])


def quad13():
    return build_tiling(n=4, tiles=rim(4) + [[1, 3]])


def quad24():
    return build_tiling(n=4, tiles=rim(4) + [[2, 4]])


def hex_one_gon():
    """Hexagon rim plus a black 1-gon hanging at boundary vertex 2."""
    return build_tiling(n=6, tiles=rim(6) + [[2]])


def hex_pinched():
    """Same tiling as hex_one_gon up to equivalence, drawn with the 1-gon
    pulled open into an arc plus a triangle through an internal vertex."""
    return build_tiling(n=6, tiles=[[1, 2], [3, 4], [4, 5], [5, 6], [6, 1],
                                    [2, "x"], [2, 3, "x"]])


def pocket_pair():
    """A pocket: one black tile visiting boundary vertex 2 twice."""
    return build_tiling(n=2, tiles=[[1, 2, 2]])


def bare_loop():
    return build_tiling(n=1, tiles=[[1]])


def square_with_loop():
    """Square rim plus a stray black 1-gon at vertex 1; the two strands
    hugging the 1-gon cross twice in the same order."""
    return build_tiling(n=4, tiles=rim(4) + [[1]])


def parallel_arcs():
    """Two parallel arcs between the same boundary vertices, bounding a
    white digon whose corners both sit on the boundary."""
    return build_tiling(n=2, tiles=[[1, 2], [1, 2]],
                        rotations={1: [[0, 0], [1, 0]], 2: [[1, 1], [0, 1]]})


def hex_triangle():
    return build_tiling(n=6, tiles=rim(6) + [[1, 3, 5]])


def chord_pair_hexagon():
    """Hexagon with chords (1,5) and (2,5); the degeneration walk-through
    starts here."""
    return build_tiling(n=6, tiles=rim(6) + [[1, 5], [2, 5]])


def fan_hexagon():
    """Hexagon fanned into four triangles through one internal vertex,
    with two plain rim arcs; the reduced endpoint of the degeneration
    walk-through."""
    return build_tiling(n=6, tiles=[[1, 2, "x"], [2, 3, "x"], [3, 4],
                                    [4, 5, "x"], [5, 6, "x"], [6, 1]])


def hub_triangle():
    """Triangle rim with three spokes into a hub. The spoke ring closes
    into a roundtrip strand, so the strand rank overshoots |V| - |F|."""
    return build_tiling(n=3, tiles=rim(3) + [[1, "h"], [2, "h"], [3, "h"]])


def pendant_triangle():
    """Triangle rim with one pendant spoke. Strand 1 lassoes the pendant
    tip and crosses itself, so the strand rank overshoots |V| - |F|."""
    return build_tiling(n=3, tiles=rim(3) + [[1, "x"]])


def lens_thirteen():
    """A 13-gon whose middle is a lens between boundary vertices 1 and 7,
    triangulated into four white faces, with three connector spokes to the
    rim. Big enough to exercise splitting along a mixed cycle."""
    tiles = rim(13)                                     # tiles 0..12
    tiles += [[1, "p"], ["p", "q"], ["q", 7]]           # 13..15
    tiles += [[7, "r"], ["r", "s"], ["s", 1]]           # 16..18
    tiles += [["p", "s"], ["p", "r"], ["q", "r"]]       # 19..21
    tiles += [[3, "p"], [5, "q"], [10, "r"]]            # 22..24
    rot = {
        "p": [(13, 1), (22, 1), (14, 0), (20, 0), (19, 0)],
        "q": [(14, 1), (23, 1), (15, 0), (21, 0)],
        "r": [(24, 1), (17, 0), (20, 1), (21, 1), (16, 1)],
        "s": [(18, 0), (19, 1), (17, 1)],
        1: [(0, 0), (13, 0), (18, 1), (12, 1)],
        7: [(6, 0), (16, 0), (15, 1), (5, 1)],
        3: [(2, 0), (22, 0), (1, 1)],
        5: [(4, 0), (23, 0), (3, 1)],
        10: [(9, 0), (24, 0), (8, 1)],
    }
    for i in (2, 4, 6, 8, 9, 11, 12, 13):
        rot[i] = [(i - 1, 0), (i - 2, 1)]
    return build_tiling(n=13, tiles=tiles, rotations=rot)


LENS_CYCLE = (1, "p", "q", 7, "r", "s")


def white_face_sizes(t):
    return sorted(len(t.map.faces[f]) for f in t.map.white_faces)


def digon_faces(t):
    """1-based indices of the white digon faces, as the digon move wants."""
    return [i + 1 for i, f in enumerate(t.map.white_faces)
            if len(t.map.faces[f]) == 2]
