import pytest

from knotmosaic.tiles import FLIP_TILE, ROTATE_TILE, SWAP_TILE, Edge, Tile, tile_connections

N, E, S, W = Edge


def test_eleven_tiles():
    assert len(Tile) == 11
    assert [int(t) for t in Tile] == list(range(11))


@pytest.mark.parametrize(
    "tile, edges",
    [
        (Tile.BLANK, set()),
        (Tile.ARC_SW, {S, W}),
        (Tile.ARC_SE, {S, E}),
        (Tile.ARC_NE, {N, E}),
        (Tile.ARC_NW, {N, W}),
        (Tile.LINE_H, {E, W}),
        (Tile.LINE_V, {N, S}),
        (Tile.DOUBLE_NWSE, {N, E, S, W}),
        (Tile.DOUBLE_NESW, {N, E, S, W}),
        (Tile.CROSS_V, {N, E, S, W}),
        (Tile.CROSS_H, {N, E, S, W}),
    ],
)
def test_connections(tile, edges):
    assert tile_connections(tile) == edges
    assert tile_connections(int(tile)) == edges


@pytest.mark.parametrize("tile", list(Tile))
def test_pairing_is_perfect_matching(tile):
    seen = [e for pair in tile.pairs for e in pair]
    assert len(seen) == len(set(seen))
    assert set(seen) == tile.connections
    for a in tile.connections:
        assert tile.exit(tile.exit(a)) == a


def test_crossings_pair_opposites():
    for t in (Tile.CROSS_V, Tile.CROSS_H):
        assert {frozenset(p) for p in t.pairs} == {frozenset({N, S}), frozenset({E, W})}
    assert set(Tile.CROSS_V.over_edges) == {N, S}
    assert set(Tile.CROSS_H.over_edges) == {E, W}
    assert Tile.DOUBLE_NWSE.over_edges is None


def test_double_arcs_follow_diagonal():
    assert {frozenset(p) for p in Tile.DOUBLE_NWSE.pairs} == {frozenset({N, W}), frozenset({S, E})}
    assert {frozenset(p) for p in Tile.DOUBLE_NESW.pairs} == {frozenset({N, E}), frozenset({S, W})}


def test_rotation_examples():
    assert ROTATE_TILE[Tile.ARC_SW] is Tile.ARC_NW
    assert ROTATE_TILE[Tile.CROSS_V] is Tile.CROSS_H
    assert ROTATE_TILE[Tile.LINE_H] is Tile.LINE_V


@pytest.mark.parametrize("table, order", [(ROTATE_TILE, 4), (FLIP_TILE, 2), (SWAP_TILE, 2)])
def test_tile_maps_are_permutations(table, order):
    assert sorted(table) == list(Tile)
    for t in Tile:
        x = t
        for _ in range(order):
            x = table[x]
        assert x is t


def test_swap_only_touches_crossings():
    for t in Tile:
        assert (SWAP_TILE[t] is t) != t.is_crossing
