"""Stellar replacement and the matching/orientation correspondences."""

import json

import pytest

from disktile import build_tiling, stellar
from disktile.errors import InvalidMatching
from disktile.plabic import apm_to_orientation, matching_to_apm
from disktile.positroid import enumerate_matchings
from helpers import hexagon, rim, spoked_hexagon


def test_stellar_spoked_hexagon():
    t = spoked_hexagon()
    g = stellar(t)
    assert len(g.white) == 7
    assert len(g.black) == 3
    assert len(g.internal_edges) == 12
    assert g.internal_faces() == t.edge_count == 9
    assert g.vertex_count() == 7 + 3 + 6
    assert g.edge_count() == 12 + 6


def test_stellar_empty_triangle():
    t = build_tiling(n=3, tiles=rim(3))
    g = stellar(t)
    assert len(g.white) == 3
    assert len(g.black) == 1
    assert len(g.internal_edges) == 3
    assert g.internal_faces() == 3


def test_edges_are_angles_and_bipartite():
    t = spoked_hexagon()
    g = stellar(t)
    assert set(g.internal_edges) == {a.id for a in t.angles}
    for ends in g.internal_edges.values():
        kinds = sorted(tag for tag, _ in ends)
        assert kinds == ["f", "w"]


def test_internal_faces_equal_edge_count(corpus4):
    for t in corpus4[:150]:
        assert stellar(t).internal_faces() == t.edge_count


def test_matching_maps_to_almost_perfect_matching():
    t = spoked_hexagon()
    g = stellar(t)
    target = {"2:1:0", "4:2:0", "x:3:0"}
    (m,) = [m for m in enumerate_matchings(t) if {a.id for a in m} == target]
    apm = matching_to_apm(t, g, m)
    assert apm == frozenset(target | {"bd:1", "bd:3", "bd:5", "bd:6"})

    # each internal plabic vertex meets exactly one chosen edge
    hits = {}
    for e in apm:
        if e.startswith("bd:"):
            ends = [("w", e.split(":", 1)[1])]
        else:
            ends = g.internal_edges[e]
        for tag, label in ends:
            key = (tag, str(label))
            hits[key] = hits.get(key, 0) + 1
    for w in g.white:
        assert hits.get(("w", str(w)), 0) == 1
    for b in g.black:
        assert hits.get(("f", str(b)), 0) == 1


def test_non_matching_rejected():
    t = spoked_hexagon()
    g = stellar(t)
    with pytest.raises(InvalidMatching):
        matching_to_apm(t, g, [a for a in t.angles if a.id in ("1:1:0", "2:1:0")])


def test_apm_injective_and_recovers_matching():
    t = spoked_hexagon()
    g = stellar(t)
    ms = enumerate_matchings(t)
    images = {}
    for m in ms:
        apm = matching_to_apm(t, g, m)
        recovered = {e for e in apm if e in g.internal_edges}
        assert recovered == {a.id for a in m}
        images[apm] = m
    assert len(images) == len(ms) == 24


def test_orientations_satisfy_degree_conditions():
    t = spoked_hexagon()
    g = stellar(t)
    for m in enumerate_matchings(t):
        o = apm_to_orientation(g, matching_to_apm(t, g, m))
        assert o.check()


def test_triangle_single_angle_matchings():
    t = build_tiling(n=3, tiles=rim(3))
    g = stellar(t)
    ms = enumerate_matchings(t)
    assert len(ms) == 3
    for m in ms:
        assert len(m) == 1
        apm = matching_to_apm(t, g, m)
        o = apm_to_orientation(g, apm)
        assert o.check()


def test_exports():
    g = stellar(hexagon())
    d = json.loads(g.to_json()) if isinstance(g.to_json(), str) else g.to_json()
    assert set(d) >= {"n", "white", "black", "edges"}
    dot = g.to_dot()
    assert "graph" in dot
    t = spoked_hexagon()
    g2 = stellar(t)
    (m,) = [m for m in enumerate_matchings(t)
            if {a.id for a in m} == {"2:1:0", "4:2:0", "x:3:0"}]
    o = apm_to_orientation(g2, matching_to_apm(t, g2, m))
    dot2 = g2.to_dot(orientation=o)
    assert "->" in dot2
