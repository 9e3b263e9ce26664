"""Exhaustive generation of suitably connected mosaics by row-major frontier search.

The frontier holds one slot per column (the strand stub hanging below the last
placed cell of that column) and one slot for the stub leaving the current cell
eastward.  Each slot records its partner slot -- the other open end of the same
partial strand -- so closing a loop is detected the moment it happens.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from knotmosaic.mosaic import Mosaic
from knotmosaic.tiles import Tile

MIN_SIZE, MAX_SIZE = 2, 6

_TILES = tuple(Tile)
_N, _E, _S, _W = 1, 2, 4, 8


@dataclass(frozen=True)
class EnumFilter:
    max_crossing_tiles: int | None = None
    exact_crossing_tiles: int | None = None
    alternating_only: bool = False
    require_single_component: bool = True


DEFAULT_FILTER = EnumFilter()


def _advance(mate: tuple[int, ...], col: int, tile: int) -> tuple[tuple[int, ...], bool] | None:
    """Frontier after placing ``tile`` at column ``col``; flag marks a closed loop.

    Returns ``None`` when the tile's north/west connection points disagree with
    the stubs present on the frontier.
    """
    h = len(mate) - 1
    t = _TILES[tile]
    mask = t.mask
    has_n = mate[col] >= 0
    has_w = mate[h] >= 0
    if bool(mask & _N) != has_n or bool(mask & _W) != has_w:
        return None
    m = list(mate)
    closed = False
    if t in (Tile.BLANK, Tile.LINE_H, Tile.LINE_V, Tile.CROSS_V, Tile.CROSS_H):
        pass
    elif t is Tile.ARC_SE:
        m[col], m[h] = h, col
    elif t is Tile.ARC_SW:
        p = m[h]
        m[col], m[p], m[h] = p, col, -1
    elif t is Tile.ARC_NE:
        p = m[col]
        m[h], m[p], m[col] = p, h, -1
    elif t in (Tile.ARC_NW, Tile.DOUBLE_NWSE):
        p, q = m[col], m[h]
        if p == h:
            closed = True
        else:
            m[p], m[q] = q, p
        m[col] = m[h] = -1
        if t is Tile.DOUBLE_NWSE:
            m[col], m[h] = h, col
    elif t is Tile.DOUBLE_NESW:
        p, q = m[col], m[h]
        if p == h:
            m[col], m[h] = h, col
        else:
            m[h], m[p] = p, h
            m[col], m[q] = q, col
    return tuple(m), closed


@lru_cache(maxsize=None)
def _options(mate: tuple[int, ...], col: int, n: int, last_row: bool) -> tuple[tuple[int, tuple[int, ...], bool], ...]:
    out = []
    for tile in range(11):
        mask = _TILES[tile].mask
        if col == n - 1 and mask & _E or last_row and mask & _S:
            continue
        res = _advance(mate, col, tile)
        if res is not None:
            out.append((tile, res[0], res[1]))
    return tuple(out)


def inner_cells_after(n: int, index: int) -> int:
    """Number of inner (crossing-capable) cells strictly after ``index`` in row-major order."""
    count = 0
    for k in range(index + 1, n * n):
        r, c = divmod(k, n)
        if 0 < r < n - 1 and 0 < c < n - 1:
            count += 1
    return count


def _check_size(n: int) -> None:
    if not MIN_SIZE <= n <= MAX_SIZE:
        raise ValueError(f"board size {n} outside {MIN_SIZE}..{MAX_SIZE}")


def first_rows(n: int) -> list[tuple[int, ...]]:
    """All admissible first rows in lexicographic order (the unit of parallel work)."""
    _check_size(n)
    return [codes for codes, _ in _walk(n, DEFAULT_FILTER, (), stop=n, single=False)]


def enumerate_codes(n: int, f: EnumFilter = DEFAULT_FILTER, prefix: tuple[int, ...] = ()) -> Iterator[tuple[int, ...]]:
    """Row-major tile-code tuples of every board passing ``f`` that starts with ``prefix``.

    Output is in lexicographic order of the code sequence.
    """
    _check_size(n)
    for codes, _ in _walk(n, f, prefix, stop=n * n, single=f.require_single_component):
        if f.alternating_only:
            from knotmosaic.invariants import mosaic_is_alternating

            if not mosaic_is_alternating(codes_to_mosaic(codes, n)):
                continue
        yield codes


def enumerate_mosaics(n: int, f: EnumFilter = DEFAULT_FILTER, prefix: tuple[int, ...] = ()) -> Iterator[Mosaic]:
    for codes in enumerate_codes(n, f, prefix):
        yield codes_to_mosaic(codes, n)


def codes_to_mosaic(codes, n: int) -> Mosaic:
    return Mosaic(n, n, tuple(tuple(_TILES[c] for c in codes[r * n : (r + 1) * n]) for r in range(n)))


def _walk(n: int, f: EnumFilter, prefix: tuple[int, ...], stop: int, single: bool, fixed: dict[int, int] | None = None):
    """Iterative depth-first search yielding (codes, loops) at depth ``stop``.

    ``fixed`` pins tiles at given row-major indices (in addition to ``prefix``).
    """
    fixed = dict(fixed or {})
    fixed.update(enumerate(prefix))
    total = n * n
    lo_cross = f.exact_crossing_tiles
    hi_cross = f.max_crossing_tiles
    if lo_cross is not None:
        hi_cross = lo_cross if hi_cross is None else min(hi_cross, lo_cross)
    remaining_inner = [inner_cells_after(n, k) for k in range(total)]

    codes = [0] * total
    mates = [None] * (total + 1)
    crossings = [0] * (total + 1)
    loops = [0] * (total + 1)
    opts: list = [()] * total
    idx = [0] * total
    mates[0] = (-1,) * (n + 1)

    def options(depth: int):
        r, c = divmod(depth, n)
        cand = _options(mates[depth], c, n, r == n - 1)
        if depth in fixed:
            cand = tuple(o for o in cand if o[0] == fixed[depth])
        return cand

    depth = 0
    opts[0] = options(0)
    while depth >= 0:
        if idx[depth] >= len(opts[depth]):
            idx[depth] = 0
            depth -= 1
            continue
        tile, mate, closed = opts[depth][idx[depth]]
        idx[depth] += 1
        nloops = loops[depth] + closed
        ncross = crossings[depth] + (tile >= 9)
        if single:
            # a closed loop is only allowed as the final closure, after which
            # nothing but blanks may follow
            if loops[depth] and tile != 0:
                continue
            if closed and any(x >= 0 for x in mate):
                continue
        if hi_cross is not None and ncross > hi_cross:
            continue
        if lo_cross is not None and ncross + remaining_inner[depth] < lo_cross:
            continue
        codes[depth] = tile
        nxt = depth + 1
        if nxt == stop:
            if stop == total:
                if single and nloops != 1:
                    continue
            yield tuple(codes[:stop]), nloops
            continue
        mates[nxt] = mate
        crossings[nxt] = ncross
        loops[nxt] = nloops
        depth = nxt
        opts[depth] = options(depth)
        idx[depth] = 0


def sample_codes(n: int, rng, f: EnumFilter = DEFAULT_FILTER, crossing_weight: float = 1.0) -> tuple[int, ...]:
    """One random board passing ``f`` (ignoring ``alternating_only``).

    Tiles are drawn cell by cell with crossing tiles weighted by
    ``crossing_weight``; dead ends backtrack.  Not uniform over boards.
    """
    _check_size(n)
    total = n * n
    single = f.require_single_component
    hi = f.max_crossing_tiles if f.exact_crossing_tiles is None else f.exact_crossing_tiles
    lo = f.exact_crossing_tiles
    remaining_inner = [inner_cells_after(n, k) for k in range(total)]

    def order(cands):
        weights = [crossing_weight if t >= 9 else 1.0 for t, _, _ in cands]
        keys = [rng.random() ** (1.0 / w) for w in weights]
        return [c for _, c in sorted(zip(keys, cands), key=lambda kc: -kc[0])]

    codes = [0] * total
    stack = [(order(_options((-1,) * (n + 1), 0, n, n == 1)), 0, 0, 0)]
    while stack:
        cands, pos, cross, loops = stack[-1]
        if pos >= len(cands):
            stack.pop()
            continue
        depth = len(stack) - 1
        stack[-1] = (cands, pos + 1, cross, loops)
        tile, mate, closed = cands[pos]
        ncross = cross + (tile >= 9)
        if single and (loops and tile != 0 or closed and any(x >= 0 for x in mate)):
            continue
        if hi is not None and ncross > hi or lo is not None and ncross + remaining_inner[depth] < lo:
            continue
        codes[depth] = tile
        if depth + 1 == total:
            if single and loops + closed != 1:
                continue
            return tuple(codes)
        r, c = divmod(depth + 1, n)
        stack.append((order(_options(mate, c, n, r == n - 1)), 0, ncross, loops + closed))
    raise ValueError("no board satisfies the filter")
