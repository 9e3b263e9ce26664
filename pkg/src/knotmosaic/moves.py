"""Mosaic Reidemeister moves, corner reduction and boundary completion.

Moves are 2x2 tile stencils.  The canonical reducing patterns (codes, rows top
to bottom; ``X`` is either crossing tile)::

    R1   2 1    ->   0 0        a kink: the crossing's two outward edges
         X 4         1 0        are joined by the curl through the other cells

    R2   2 1    ->   2 1        a cap passing over (or under) both crossings
         X X         7 8

Every image of these under the eight board symmetries is a site pattern.
Cells outside the stencil are never touched.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from knotmosaic.enumerate import DEFAULT_FILTER, EnumFilter, _walk, codes_to_mosaic
from knotmosaic.mosaic import (
    DIHEDRAL,
    InnerBoard,
    InvalidMosaicError,
    Mosaic,
    Symmetry,
    inner_board,
    is_suitably_connected,
    transform,
)
from knotmosaic.tiles import Tile

Patch = tuple[tuple[int, int], tuple[int, int]]


class MoveKind(str, Enum):
    R1 = "R1"
    R2 = "R2"
    CORNER_R1 = "CornerR1"


@dataclass(frozen=True)
class MoveSite:
    kind: MoveKind
    anchor: tuple[int, int]  # top-left cell of the 2x2 stencil
    orientation: int  # index into the stencil variants of this kind
    inverse: bool = False  # False: reduce (before -> after)

    def inverted(self) -> "MoveSite":
        return MoveSite(self.kind, self.anchor, self.orientation, not self.inverse)


def _patch_variants(before: Patch, after: Patch) -> list[tuple[Patch, Patch]]:
    out = []
    for s in DIHEDRAL:
        b = transform(Mosaic.from_codes(before), s).codes
        a = transform(Mosaic.from_codes(after), s).codes
        if (b, a) not in out:
            out.append((b, a))
    return out


def _stencils(kind: MoveKind) -> list[tuple[Patch, Patch]]:
    out = []
    for x in (Tile.CROSS_V, Tile.CROSS_H):
        if kind is MoveKind.R2:
            before, after = ((2, 1), (x, x)), ((2, 1), (7, 8))
        else:
            before, after = ((2, 1), (x, 4)), ((0, 0), (1, 0))
        for pair in _patch_variants(before, after):
            if pair not in out:
                out.append(pair)
    return out


STENCILS = {MoveKind.R1: _stencils(MoveKind.R1), MoveKind.R2: _stencils(MoveKind.R2)}
STENCILS[MoveKind.CORNER_R1] = STENCILS[MoveKind.R1]


def _window(m: Mosaic, r: int, c: int) -> Patch:
    return ((int(m.cells[r][c]), int(m.cells[r][c + 1])), (int(m.cells[r + 1][c]), int(m.cells[r + 1][c + 1])))


def find_moves(m: Mosaic) -> list[MoveSite]:
    """All reducing R1/R2 sites, row-major by anchor then R1 before R2."""
    if not is_suitably_connected(m):
        raise InvalidMosaicError("board is not suitably connected")
    sites = []
    for r in range(m.rows - 1):
        for c in range(m.cols - 1):
            w = _window(m, r, c)
            for kind in (MoveKind.R1, MoveKind.R2):
                for i, (before, _) in enumerate(STENCILS[kind]):
                    if w == before:
                        sites.append(MoveSite(kind, (r, c), i))
    return sites


def apply_move(m: Mosaic, site: MoveSite) -> Mosaic:
    before, after = STENCILS[site.kind][site.orientation]
    if site.inverse:
        before, after = after, before
    r, c = site.anchor
    if not (0 <= r < m.rows - 1 and 0 <= c < m.cols - 1) or _window(m, r, c) != before:
        raise InvalidMosaicError(f"{site.kind.value} pattern not present at {site.anchor}")
    return m.replace({(r + i, c + j): after[i][j] for i in range(2) for j in range(2)})


def reduce_greedy(m: Mosaic) -> Mosaic:
    """Apply the first reducing site (row-major) until none is left."""
    while True:
        sites = find_moves(m)
        if not sites:
            return m
        m = apply_move(m, sites[0])


# -- corner reduction ------------------------------------------------------------


def _top_corner_kink(m: Mosaic) -> Mosaic | None:
    n = m.size
    row = m.cells[1]
    if n < 4 or not (row[1].is_crossing and row[n - 2].is_crossing):
        return None
    points = sum(Tile(t).mask & 1 for t in row[1 : n - 1])
    if points % 2 == 0:
        return None
    # the odd parity forces a boundary corner arc, which closes a kink
    # around the inner corner crossing beneath it
    for anchor in ((0, 0), (0, n - 2)):
        for i, (before, _) in enumerate(STENCILS[MoveKind.R1]):
            if _window(m, *anchor) == before:
                return apply_move(m, MoveSite(MoveKind.CORNER_R1, anchor, i))
    return None


def corner_reduce(m: Mosaic) -> Mosaic | None:
    """Remove one inner-corner crossing when an outer inner row/column qualifies.

    A side qualifies when both of its end tiles are crossings and an odd number
    of connection points cross between it and the boundary row beyond it.
    Sides are tried top, right, bottom, left.
    """
    if not is_suitably_connected(m):
        raise InvalidMosaicError("board is not suitably connected")
    for k in range(4):
        # rotate so the side under test is on top
        turn = Symmetry(rotation=-k)
        reduced = _top_corner_kink(transform(m, turn))
        if reduced is not None:
            return transform(reduced, turn.inverse)
    return None


# -- inner boards ------------------------------------------------------------


def complete_boundary(inner: InnerBoard) -> list[Mosaic]:
    """Every suitably connected n x n board with this inner board (lexicographic order)."""
    n = inner.n
    fixed = {(i + 1) * n + (j + 1): int(t) for i, row in enumerate(inner.cells) for j, t in enumerate(row)}
    f = EnumFilter(require_single_component=False)
    return [codes_to_mosaic(codes, n) for codes, _ in _walk(n, f, (), n * n, False, fixed)]


def all_crossing_inner(n: int, tile: Tile = Tile.CROSS_V) -> InnerBoard:
    if n < 4:
        raise ValueError("an all-crossing inner board needs n >= 4")
    if not tile.is_crossing:
        raise ValueError("tile must be a crossing tile")
    return InnerBoard(n, tuple((tile,) * (n - 2) for _ in range(n - 2)))


def recomplete(m: Mosaic) -> list[Mosaic]:
    """Completions of ``m``'s own inner board."""
    return complete_boundary(inner_board(m))


__all__ = [
    "DEFAULT_FILTER",
    "MoveKind",
    "MoveSite",
    "STENCILS",
    "all_crossing_inner",
    "apply_move",
    "complete_boundary",
    "corner_reduce",
    "find_moves",
    "recomplete",
    "reduce_greedy",
]
