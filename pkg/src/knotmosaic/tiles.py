"""The eleven mosaic tiles and their connection geometry.

Tile codes follow a fixed canonical order (used by the ``.mosaic`` format)::

    0  blank
    1  arc S-W      2  arc S-E      3  arc N-E      4  arc N-W
    5  line E-W     6  line N-S
    7  double arc N-W + S-E         8  double arc N-E + S-W
    9  crossing, vertical strand over
    10 crossing, horizontal strand over
"""

from __future__ import annotations

from enum import IntEnum


class Edge(IntEnum):
    N = 0
    E = 1
    S = 2
    W = 3

    @property
    def opposite(self) -> "Edge":
        return Edge((self + 2) % 4)

    @property
    def bit(self) -> int:
        return 1 << self

    @property
    def delta(self) -> tuple[int, int]:
        """(row, col) offset of the neighbouring cell across this edge."""
        return _DELTA[self]


_DELTA = {Edge.N: (-1, 0), Edge.E: (0, 1), Edge.S: (1, 0), Edge.W: (0, -1)}

N, E, S, W = Edge.N, Edge.E, Edge.S, Edge.W


class Tile(IntEnum):
    BLANK = 0
    ARC_SW = 1
    ARC_SE = 2
    ARC_NE = 3
    ARC_NW = 4
    LINE_H = 5
    LINE_V = 6
    DOUBLE_NWSE = 7
    DOUBLE_NESW = 8
    CROSS_V = 9
    CROSS_H = 10

    @property
    def pairs(self) -> tuple[tuple[Edge, Edge], ...]:
        """Internal strand pairing: a perfect matching on the connection points."""
        return _PAIRS[self]

    @property
    def connections(self) -> frozenset[Edge]:
        return frozenset(e for p in _PAIRS[self] for e in p)

    @property
    def mask(self) -> int:
        return _MASK[self]

    @property
    def is_crossing(self) -> bool:
        return self >= Tile.CROSS_V

    @property
    def over_edges(self) -> tuple[Edge, Edge] | None:
        """Edges of the over-strand for crossing tiles, else ``None``."""
        if self is Tile.CROSS_V:
            return (N, S)
        if self is Tile.CROSS_H:
            return (E, W)
        return None

    def exit(self, entry: Edge) -> Edge:
        """Edge through which a strand entering at ``entry`` leaves the tile."""
        return Edge(_EXIT[self][entry])


_PAIRS: dict[Tile, tuple[tuple[Edge, Edge], ...]] = {
    Tile.BLANK: (),
    Tile.ARC_SW: ((S, W),),
    Tile.ARC_SE: ((S, E),),
    Tile.ARC_NE: ((N, E),),
    Tile.ARC_NW: ((N, W),),
    Tile.LINE_H: ((E, W),),
    Tile.LINE_V: ((N, S),),
    Tile.DOUBLE_NWSE: ((N, W), (S, E)),
    Tile.DOUBLE_NESW: ((N, E), (S, W)),
    Tile.CROSS_V: ((N, S), (E, W)),
    Tile.CROSS_H: ((N, S), (E, W)),
}

_MASK = {t: sum(e.bit for p in ps for e in p) for t, ps in _PAIRS.items()}

# _EXIT[tile][entry] -> exit edge, -1 where there is no connection point
_EXIT: dict[Tile, list[int]] = {}
for _t, _ps in _PAIRS.items():
    _row = [-1, -1, -1, -1]
    for _a, _b in _ps:
        _row[_a] = int(_b)
        _row[_b] = int(_a)
    _EXIT[_t] = _row
del _t, _ps, _row, _a, _b

# tiles indexed by their connection mask; crossings and double arcs share mask 15
TILES_BY_MASK: dict[int, tuple[Tile, ...]] = {}
for _t in Tile:
    TILES_BY_MASK.setdefault(_t.mask, ())
    TILES_BY_MASK[_t.mask] += (_t,)
del _t


def _tile_with(pairs: set[frozenset[Edge]], crossing_over: frozenset[Edge] | None) -> Tile:
    for t in Tile:
        if {frozenset(p) for p in t.pairs} == pairs:
            if crossing_over is None and not t.is_crossing:
                return t
            if crossing_over is not None and t.is_crossing and frozenset(t.over_edges) == crossing_over:
                return t
    raise ValueError(f"no tile with pairs {pairs}")


def _map_tile(t: Tile, edge_map: dict[Edge, Edge], swap: bool) -> Tile:
    pairs = {frozenset(edge_map[e] for e in p) for p in t.pairs}
    over = None
    if t.is_crossing:
        over = frozenset(edge_map[e] for e in t.over_edges)
        if swap:
            over = frozenset({N, S}) if over == frozenset({E, W}) else frozenset({E, W})
    return _tile_with(pairs, over)


# quarter turn clockwise: N->E->S->W->N
ROT90_EDGES = {N: E, E: S, S: W, W: N}
# left-right flip of the picture
FLIP_EDGES = {N: N, S: S, E: W, W: E}
IDENT_EDGES = {e: e for e in Edge}

ROTATE_TILE = tuple(_map_tile(t, ROT90_EDGES, False) for t in Tile)
# flipping the board face down mirrors the picture and exchanges over/under,
# which is an isotopy of the underlying knot
FLIP_TILE = tuple(_map_tile(t, FLIP_EDGES, True) for t in Tile)
SWAP_TILE = tuple(_map_tile(t, IDENT_EDGES, True) for t in Tile)


def tile_connections(t: Tile | int) -> frozenset[Edge]:
    return Tile(t).connections
