import pytest

from disktile import corpus, build_tiling


def test_counts_small_n():
    expected = {1: 1, 2: 5, 3: 63, 4: 193, 5: 493}
    for n, want in expected.items():
        got = len(corpus.generate(n))
        assert got == want, (n, got, want)


def test_deterministic():
    a = corpus.generate(4)
    b = corpus.generate(4)
    assert [t.tiles for t in a] == [t.tiles for t in b]


def test_limit_truncates():
    full = corpus.generate(3)
    cut = corpus.generate(3, limit=10)
    assert len(cut) == 10
    assert [t.tiles for t in cut] == [t.tiles for t in full[:10]]


def test_max_tiles_filters():
    small = corpus.generate(3, max_tiles=4)
    assert len(small) == 41
    assert all(len(t.tiles) <= 4 for t in small)
    full = {t.tiles for t in corpus.generate(3)}
    assert {t.tiles for t in small} <= full


def test_tile_kinds_present():
    kinds = set()
    for t in corpus.generate(3):
        for tile in t.tiles:
            if len(tile) == 1:
                kinds.add("loop")
            elif len(tile) == 2 and tile[0] == tile[1]:
                kinds.add("pocket")
            elif len(tile) == 2:
                kinds.add("arc")
            else:
                kinds.add("poly")
    assert kinds == {"loop", "pocket", "arc", "poly"}


def test_generated_tilings_rebuild(corpus4):
    # each generated tiling revalidates from its own serialized form
    for t in corpus4[:80]:
        t2 = build_tiling(t.to_data())
        assert t2.edge_count() == len(t.tiles)
        assert t2.isomorphic_to(t)
