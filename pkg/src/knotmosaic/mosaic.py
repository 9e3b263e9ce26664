"""Mosaic boards: parsing, validation, strand tracing and board symmetries."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from knotmosaic.tiles import FLIP_TILE, ROTATE_TILE, SWAP_TILE, Edge, Tile

Step = tuple[int, int, Edge]  # (row, col, entry edge)


class MosaicFormatError(ValueError):
    """Malformed ``.mosaic`` text; carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InvalidMosaicError(ValueError):
    """A board operation was called on a board that breaks its precondition."""


@dataclass(frozen=True)
class Mosaic:
    rows: int
    cols: int
    cells: tuple[tuple[Tile, ...], ...]
    provenance: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("mosaic dimensions must be positive")
        if len(self.cells) != self.rows or any(len(r) != self.cols for r in self.cells):
            raise ValueError("cell grid does not match dimensions")

    @classmethod
    def from_codes(cls, codes: Sequence[Sequence[int]], provenance: str | None = None) -> "Mosaic":
        cells = tuple(tuple(Tile(c) for c in row) for row in codes)
        return cls(len(cells), len(cells[0]) if cells else 0, cells, provenance)

    @classmethod
    def blank(cls, rows: int, cols: int | None = None) -> "Mosaic":
        cols = rows if cols is None else cols
        return cls(rows, cols, tuple((Tile.BLANK,) * cols for _ in range(rows)))

    @property
    def size(self) -> int:
        if self.rows != self.cols:
            raise ValueError(f"board is {self.rows}x{self.cols}, not square")
        return self.rows

    @property
    def codes(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(t) for t in row) for row in self.cells)

    def __getitem__(self, rc: tuple[int, int]) -> Tile:
        return self.cells[rc[0]][rc[1]]

    def positions(self) -> Iterable[tuple[int, int]]:
        for r in range(self.rows):
            for c in range(self.cols):
                yield r, c

    def replace(self, changes: dict[tuple[int, int], Tile | int]) -> "Mosaic":
        grid = [list(row) for row in self.cells]
        for (r, c), t in changes.items():
            grid[r][c] = Tile(t)
        return Mosaic(self.rows, self.cols, tuple(tuple(r) for r in grid), self.provenance)

    def __str__(self) -> str:
        return serialize_mosaic(self)


# -- text format ------------------------------------------------------------


def parse_mosaic(text: str, provenance: str | None = None) -> Mosaic:
    """Parse ``.mosaic`` text: a ``ROWS COLS`` header then ROWS lines of tile codes."""
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), start=1)]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MosaicFormatError("missing header", 1)
    hline, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise MosaicFormatError(f"malformed header {header!r}", hline)
    rows, cols = int(parts[0]), int(parts[1])
    if rows < 1 or cols < 1:
        raise MosaicFormatError("dimensions must be positive", hline)
    body = lines[1:]
    if len(body) != rows:
        where = body[rows][0] if len(body) > rows else (body[-1][0] + 1 if body else hline + 1)
        raise MosaicFormatError(f"expected {rows} rows, found {len(body)}", where)
    grid = []
    for lineno, ln in body:
        toks = ln.split()
        if len(toks) != cols:
            raise MosaicFormatError(f"expected {cols} codes, found {len(toks)}", lineno)
        row = []
        for tok in toks:
            if not tok.isdigit() or int(tok) > 10:
                raise MosaicFormatError(f"tile code {tok!r} out of range 0-10", lineno)
            row.append(Tile(int(tok)))
        grid.append(tuple(row))
    return Mosaic(rows, cols, tuple(grid), provenance)


def serialize_mosaic(m: Mosaic) -> str:
    lines = [f"{m.rows} {m.cols}"]
    lines += [" ".join(str(int(t)) for t in row) for row in m.cells]
    return "\n".join(lines)


def load_mosaic(path) -> Mosaic:
    from pathlib import Path

    p = Path(path)
    return parse_mosaic(p.read_text(), provenance=p.stem)


# -- validation and tracing -------------------------------------------------


def mismatched_edges(m: Mosaic) -> list[tuple[int, int, Edge]]:
    """Every (row, col, edge) where a connection point is left dangling."""
    bad = []
    for r, c in m.positions():
        conn = m.cells[r][c].connections
        for e in Edge:
            dr, dc = e.delta
            rr, cc = r + dr, c + dc
            inside = 0 <= rr < m.rows and 0 <= cc < m.cols
            if not inside:
                if e in conn:
                    bad.append((r, c, e))
            elif e in (Edge.E, Edge.S):
                if (e in conn) != (e.opposite in m.cells[rr][cc].connections):
                    bad.append((r, c, e))
    return bad


def is_suitably_connected(m: Mosaic) -> bool:
    rows, cols, cells = m.rows, m.cols, m.cells
    for r in range(rows):
        row = cells[r]
        for c in range(cols):
            mask = row[c].mask
            # N=1 E=2 S=4 W=8
            if r == 0 and mask & 1 or r == rows - 1 and mask & 4:
                return False
            if c == 0 and mask & 8 or c == cols - 1 and mask & 2:
                return False
            if c + 1 < cols and bool(mask & 2) != bool(row[c + 1].mask & 8):
                return False
            if r + 1 < rows and bool(mask & 4) != bool(cells[r + 1][c].mask & 1):
                return False
    return True


def trace_components(m: Mosaic) -> list[list[Step]]:
    """Closed strand loops of a suitably connected board.

    Each loop starts at its lexicographically least (row, col, edge) point and
    lists (row, col, entry edge) for every tile pass in traversal order.
    """
    if not is_suitably_connected(m):
        raise InvalidMosaicError("board is not suitably connected")
    cells = m.cells
    seen: set[tuple[int, int, int]] = set()
    loops = []
    for r, c in m.positions():
        mask = cells[r][c].mask
        for e in range(4):
            if not mask >> e & 1 or (r, c, e) in seen:
                continue
            loop = []
            rr, cc, entry = r, c, e
            while True:
                out = _EXIT[cells[rr][cc]][entry]
                seen.add((rr, cc, entry))
                seen.add((rr, cc, out))
                loop.append((rr, cc, _EDGES[entry]))
                dr, dc = _DELTAS[out]
                rr, cc, entry = rr + dr, cc + dc, out ^ 2
                if rr == r and cc == c and entry == e:
                    break
            loops.append(loop)
    return loops


_EDGES = tuple(Edge)
_DELTAS = tuple(e.delta for e in Edge)
_EXIT = tuple(tuple(int(t.exit(e)) if e in t.connections else -1 for e in Edge) for t in Tile)


def component_count(m: Mosaic) -> int:
    return len(trace_components(m))


def crossing_tiles(m: Mosaic) -> int:
    return sum(t.is_crossing for row in m.cells for t in row)


def nonblank_tiles(m: Mosaic) -> int:
    return sum(t is not Tile.BLANK for row in m.cells for t in row)


# -- inner boards -------------------------------------------------------------


@dataclass(frozen=True)
class InnerBoard:
    """The (n-2)x(n-2) block of non-boundary cells of an n x n board.

    For n = 5 the cells are addressed I1..I9 in reading order.
    """

    n: int
    cells: tuple[tuple[Tile, ...], ...]

    def __post_init__(self):
        k = self.n - 2
        if k < 1 or len(self.cells) != k or any(len(r) != k for r in self.cells):
            raise ValueError(f"inner board of a {self.n}x{self.n} board must be {k}x{k}")

    @classmethod
    def from_codes(cls, n: int, codes: Sequence[Sequence[int]]) -> "InnerBoard":
        return cls(n, tuple(tuple(Tile(c) for c in row) for row in codes))

    def label(self, k: int) -> Tile:
        """Tile I^k (1-based, reading order)."""
        w = self.n - 2
        return self.cells[(k - 1) // w][(k - 1) % w]

    def embed(self) -> Mosaic:
        """The inner board placed on an otherwise blank n x n board."""
        grid = [[Tile.BLANK] * self.n for _ in range(self.n)]
        for i, row in enumerate(self.cells):
            grid[i + 1][1 : self.n - 1] = row
        return Mosaic(self.n, self.n, tuple(tuple(r) for r in grid))


def inner_board(m: Mosaic) -> InnerBoard:
    n = m.size
    return InnerBoard(n, tuple(row[1 : n - 1] for row in m.cells[1 : n - 1]))


# -- symmetries ---------------------------------------------------------------


@dataclass(frozen=True)
class Symmetry:
    """Board symmetry: optional face-down flip, then clockwise quarter turns,
    optionally followed by exchanging over/under at every crossing.

    The eight (flip, rotation) elements are isotopies of the represented knot;
    ``crossing_swap`` produces the mirror image.
    """

    rotation: int = 0
    flip: bool = False
    crossing_swap: bool = False

    def __post_init__(self):
        object.__setattr__(self, "rotation", self.rotation % 4)

    def then(self, other: "Symmetry") -> "Symmetry":
        """The symmetry ``other ∘ self`` (apply ``self`` first)."""
        sign = -1 if other.flip else 1
        return Symmetry(
            other.rotation + sign * self.rotation,
            self.flip != other.flip,
            self.crossing_swap != other.crossing_swap,
        )

    @property
    def inverse(self) -> "Symmetry":
        for s in ALL_SYMMETRIES:
            if self.then(s) == IDENTITY:
                return s
        raise AssertionError("unreachable")


IDENTITY = Symmetry()
ROT90 = Symmetry(1)
CROSSING_SWAP = Symmetry(crossing_swap=True)
DIHEDRAL = tuple(Symmetry(k, f) for f in (False, True) for k in range(4))
ALL_SYMMETRIES = tuple(Symmetry(k, f, x) for x in (False, True) for f in (False, True) for k in range(4))


def _rotate(m: Mosaic) -> Mosaic:
    cells = tuple(
        tuple(ROTATE_TILE[m.cells[m.rows - 1 - c][r]] for c in range(m.rows)) for r in range(m.cols)
    )
    return Mosaic(m.cols, m.rows, cells, m.provenance)


def _flip(m: Mosaic) -> Mosaic:
    cells = tuple(tuple(FLIP_TILE[t] for t in reversed(row)) for row in m.cells)
    return Mosaic(m.rows, m.cols, cells, m.provenance)


def _swap(m: Mosaic) -> Mosaic:
    cells = tuple(tuple(SWAP_TILE[t] for t in row) for row in m.cells)
    return Mosaic(m.rows, m.cols, cells, m.provenance)


def transform(m: Mosaic, s: Symmetry) -> Mosaic:
    if s.flip:
        m = _flip(m)
    for _ in range(s.rotation):
        m = _rotate(m)
    if s.crossing_swap:
        m = _swap(m)
    return m


def canonical_form(m: Mosaic, group: Sequence[Symmetry] = ALL_SYMMETRIES) -> Mosaic:
    """Least image of ``m`` (by tile codes) under a symmetry group."""
    return min((transform(m, s) for s in group), key=lambda x: (x.rows, x.cols, x.codes))
