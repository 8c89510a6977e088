"""Construction, validation, moves, and splits."""

import pytest

from disktile import build_tiling, degenerate, digon, flip, hourglass, reduce
from disktile.diskmap import WHITE
from disktile.errors import (
    AmbiguousEmbedding,
    BothBoundary,
    BoundaryOrderViolation,
    BoundarySegmentDoubleCovered,
    BoundarySegmentUncovered,
    InvalidRotations,
    NeighborNotWhite,
    NotASubdiskCycle,
    NotFlippable,
    NotOneGon,
    RepeatedVertexInTile,
)
from helpers import (
    bare_loop,
    digon_faces,
    hex_one_gon,
    hex_pinched,
    hex_triangle,
    hexagon,
    parallel_arcs,
    pocket_pair,
    quad13,
    quad24,
    rim,
    spoked_hexagon,
    white_face_sizes,
)


def test_empty_hexagon_counts():
    t = hexagon()
    assert (t.vertex_count, t.edge_count, t.face_count) == (6, 6, 1)
    assert t.angle_count == 6
    assert [a.id for a in t.angles] == [f"{v}:1:0" for v in range(1, 7)]


def test_spoked_hexagon_counts():
    t = spoked_hexagon()
    assert (t.vertex_count, t.edge_count, t.face_count) == (7, 9, 3)
    assert white_face_sizes(t) == [4, 4, 4]
    assert sum(1 for a in t.angles if a.vertex == "x") == 3


def test_square_chord_counts():
    t = quad13()
    assert (t.vertex_count, t.edge_count, t.face_count) == (4, 5, 2)
    assert white_face_sizes(t) == [3, 3]


def test_bare_loop_counts():
    t = bare_loop()
    assert (t.vertex_count, t.edge_count, t.face_count) == (1, 1, 0)
    assert t.angle_count == 0


def test_data_round_trip():
    for t in (hexagon(), spoked_hexagon(), hex_one_gon(), hex_pinched(),
              bare_loop(), pocket_pair(), parallel_arcs()):
        again = build_tiling(t.to_data())
        assert t.isomorphic_to(again)


def test_distinct_diagonals_not_isomorphic():
    assert not quad13().isomorphic_to(quad24())


def test_edge_count_is_tile_count(corpus4):
    for t in corpus4:
        assert t.edge_count == len(t.tiles)


def test_repeated_vertex_rejected():
    with pytest.raises(RepeatedVertexInTile):
        build_tiling(n=4, tiles=[[1, 2, 1, 3]])


def test_boundary_coverage_errors():
    with pytest.raises(BoundarySegmentUncovered):
        build_tiling(n=6, tiles=[])
    with pytest.raises(BoundarySegmentUncovered):
        build_tiling(n=6, tiles=rim(6)[:-1])
    with pytest.raises(BoundarySegmentDoubleCovered):
        build_tiling(n=6, tiles=rim(6) + [[1, 2]])


def test_rotation_errors():
    good = {i: [[i - 1, 0], [(i - 2) % 6, 1]] for i in range(1, 7)}
    with pytest.raises(BoundaryOrderViolation):
        build_tiling(n=6, tiles=rim(6),
                     rotations={**good, 1: [[5, 1], [0, 0]]})
    with pytest.raises(InvalidRotations):
        build_tiling(n=6, tiles=rim(6),
                     rotations={**good, 1: [[0, 0], [0, 0]]})


def test_ambiguous_embedding_needs_rotations():
    tiles = rim(13)
    tiles += [[1, "p"], ["p", "q"], ["q", 7]]
    tiles += [[7, "r"], ["r", "s"], ["s", 1]]
    tiles += [["p", "s"], ["p", "r"], ["q", "r"]]
    tiles += [[3, "p"], [5, "q"], [10, "r"]]
    with pytest.raises(AmbiguousEmbedding):
        build_tiling(n=13, tiles=tiles)


# ---- moves -----------------------------------------------------------------


def test_reduce_one_gon():
    tb = hex_one_gon()
    r = reduce(tb, 6)
    assert r.isomorphic_to(hexagon())
    assert r.edge_count == tb.edge_count - 1
    assert r.provenance["op"] == "reduce"


def test_reduce_rejects_outer_loop():
    with pytest.raises(NeighborNotWhite):
        reduce(bare_loop(), 0)


def test_reduce_rejects_non_one_gon():
    with pytest.raises(NotOneGon):
        reduce(hex_one_gon(), 0)


def test_digon_contract():
    ta = hex_pinched()
    faces = digon_faces(ta)
    assert len(faces) == 1
    c = digon(ta, ("contract", faces[0]))
    assert c.isomorphic_to(hex_one_gon())
    assert c.provenance["op"] == "digon"


def test_hourglass_unpinch():
    u = hourglass(hex_pinched(), "x")
    assert u.isomorphic_to(hex_one_gon())
    assert u.provenance["op"] == "hourglass"


def test_boundary_decontract_contract_round_trip():
    tb = hex_one_gon()
    d = digon(tb, ("decontract", 2))
    assert (d.vertex_count, d.edge_count, d.face_count) == (7, 7, 2)
    faces = digon_faces(d)
    assert len(faces) == 1
    back = digon(d, ("contract", faces[0]))
    assert back.isomorphic_to(tb)


def test_internal_decontract_contract_round_trip():
    tt = spoked_hexagon()
    items = tt.items["x"]
    da = tt.item_darts[items[0]][0]
    db = tt.item_darts[items[1]][0]
    d = digon(tt, ("decontract", "x", da, db))
    assert (d.vertex_count, d.edge_count, d.face_count) == (8, 9, 4)
    faces = digon_faces(d)
    assert len(faces) == 1
    back = digon(d, ("contract", faces[0]))
    assert back.isomorphic_to(tt)


def test_contract_rejects_boundary_boundary_digon():
    t = parallel_arcs()
    faces = digon_faces(t)
    assert len(faces) == 1
    with pytest.raises(BothBoundary):
        digon(t, ("contract", faces[0]))


def test_pinch_unpinch_round_trip():
    hexa = hexagon()
    whites = [d for d in range(hexa.map.dart_count)
              if hexa.map.color(d) == WHITE]
    pd1 = [d for d in whites if hexa.tile_of_dart(d) == 0][0]
    pd2 = [d for d in whites if hexa.tile_of_dart(d) == 3][0]
    p = hourglass(hexa, (pd1, pd2))
    assert (p.vertex_count, p.edge_count, p.face_count) == (7, 6, 2)
    assert sorted(p.kinds) == ["arc"] * 4 + ["poly"] * 2
    xv = list(p.internal)[0]
    assert hourglass(p, xv).isomorphic_to(hexa)


def test_pinch_loop_round_trip():
    tb = hex_one_gon()
    whites = [d for d in range(tb.map.dart_count) if tb.map.color(d) == WHITE]
    ld = [d for d in whites if tb.tile_of_dart(d) == 6][0]
    ad = [d for d in whites if tb.tile_of_dart(d) == 4][0]
    p = hourglass(tb, (ld, ad))
    assert (p.vertex_count, p.edge_count, p.face_count) == (7, 7, 2)
    xv = list(p.internal)[0]
    assert hourglass(p, xv).isomorphic_to(tb)


def test_flip_round_trip():
    q = quad13()
    f = flip(q, 4)
    assert f.isomorphic_to(quad24())
    assert f.provenance["op"] == "flip"
    assert flip(f, 4).isomorphic_to(q)


def test_flip_rejects_covering_arc():
    with pytest.raises(NotFlippable):
        flip(quad13(), 0)


def test_move_outputs_revalidate():
    # every move result round-trips through its own serialized form
    for t in (reduce(hex_one_gon(), 6),
              digon(hex_one_gon(), ("decontract", 2)),
              hourglass(hex_pinched(), "x"),
              flip(quad13(), 4),
              degenerate(spoked_hexagon(), "3:1:0")):
        assert t.isomorphic_to(build_tiling(t.to_data()))


# ---- degeneration bookkeeping ----------------------------------------------


def test_degenerate_bookkeeping():
    # the fill merges the two flanking tiles into one black region
    t = spoked_hexagon()
    t2 = degenerate(t, "3:1:0")
    assert t2.edge_count == t.edge_count - 1
    assert t2.provenance["op"] == "degenerate"
    assert t2.provenance["site"] == "3:1:0"
    amap = t2.provenance["angle_map"]
    old_ids = {a.id for a in t.angles}
    new_ids = {a.id for a in t2.angles}
    assert set(amap) == old_ids - {"3:1:0"}
    assert set(amap.values()) == new_ids
    assert len(amap) == len(new_ids)


def test_degenerate_matchings_avoid_the_angle():
    from disktile import enumerate_matchings

    t = spoked_hexagon()
    aid = "3:1:0"
    t2 = degenerate(t, aid)
    amap = t2.provenance["angle_map"]
    kept = {frozenset(amap[a.id] for a in m)
            for m in enumerate_matchings(t)
            if aid not in {a.id for a in m}}
    got = {frozenset(a.id for a in m) for m in enumerate_matchings(t2)}
    assert kept == got


# ---- angles ----------------------------------------------------------------


def test_angle_partition(corpus4):
    for t in corpus4:
        sizes = sum(len(t.map.faces[f]) for f in t.map.white_faces)
        assert t.angle_count == sizes
        seen = {(a.vertex, a.id) for a in t.angles}
        assert len(seen) == t.angle_count


# ---- splits ----------------------------------------------------------------


def test_split_triangle():
    tri = hex_triangle()
    sp = tri.split_subtiling([1, 3, 5])
    inner = sp.inner
    assert (inner.vertex_count, inner.edge_count, inner.face_count) == (3, 1, 0)
    assert inner.tiles == ((1, 2, 3),)
    assert len(sp.remainder.face_angles) == 3


def test_split_orientation_normalizes():
    tri = hex_triangle()
    a = tri.split_subtiling([1, 3, 5])
    b = tri.split_subtiling([1, 5, 3])
    assert a.inner.isomorphic_to(b.inner)


def test_split_rejects_non_cycle():
    with pytest.raises(NotASubdiskCycle):
        hex_triangle().split_subtiling([1, 3, 4])


def test_split_full_boundary():
    t = spoked_hexagon()
    sp = t.split_subtiling([1, 2, 3, 4, 5, 6])
    assert sp.inner.isomorphic_to(t)
    assert not sp.remainder.face_angles
