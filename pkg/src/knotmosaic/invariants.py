"""Planar diagrams from mosaics, the Kauffman bracket and the Jones polynomial.

A planar diagram lists crossings as ``(a, b, c, d)``: arc labels read
counterclockwise starting from the incoming under-strand.  Arcs are numbered
``1..2c`` consecutively along the orientation, so arc ``k`` runs into arc
``k + 1`` (cyclically); the under-strand always enters on ``a`` and leaves on
``c``.

The A-smoothing of ``(a, b, c, d)`` joins ``a``-``b`` and ``c``-``d``.  The
normalized bracket ``(-A^3)^(-w) <D>`` has exponents divisible by four and
becomes the Jones polynomial under ``A^-4 -> t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from numba import njit

from knotmosaic.laurent import DELTA, LaurentPoly
from knotmosaic.mosaic import InvalidMosaicError, Mosaic, trace_components
from knotmosaic.tiles import Edge

MAX_STATE_SUM_CROSSINGS = 20

# counterclockwise successor of an edge as seen on the page
_CCW = {Edge.N: Edge.W, Edge.W: Edge.S, Edge.S: Edge.E, Edge.E: Edge.N}


class ComponentCountError(InvalidMosaicError):
    def __init__(self, count: int):
        super().__init__(f"expected a knot (1 component), got {count} components")
        self.count = count


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple[tuple[int, int, int, int], ...]

    def __post_init__(self):
        labels = [x for x in (l for cr in self.crossings for l in cr)]
        n = 2 * len(self.crossings)
        if sorted(labels) != sorted(list(range(1, n + 1)) * 2):
            raise ValueError("every arc label 1..2c must appear exactly twice")
        for a, _, c, _ in self.crossings:
            if c != a % n + 1:
                raise ValueError(f"under-strand {a}->{c} does not follow the orientation")

    @classmethod
    def from_code(cls, code: Sequence[Sequence[int]]) -> "PlanarDiagram":
        return cls(tuple(tuple(int(x) for x in cr) for cr in code))

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def arc_count(self) -> int:
        # the crossingless diagram is a single closed arc
        return max(1, 2 * len(self.crossings))

    def signs(self) -> tuple[int, ...]:
        """Crossing signs: +1 when the over-strand runs from ``d`` to ``b``."""
        n = 2 * len(self.crossings)
        out = []
        for a, b, _, d in self.crossings:
            if n == 2:
                # both over labels are successors of each other; the label
                # shared with the under-strand's ``a`` is the outgoing one
                out.append(1 if b == a else -1)
            else:
                out.append(1 if b == d % n + 1 else -1)
        return tuple(out)

    def code(self) -> list[tuple[int, int, int, int]]:
        return list(self.crossings)

    def __str__(self):
        return "[" + ",".join("(%d,%d,%d,%d)" % cr for cr in self.crossings) + "]"


UNKNOT_DIAGRAM = PlanarDiagram(())


def to_planar_diagram(m: Mosaic) -> PlanarDiagram:
    loops = trace_components(m)
    if len(loops) != 1:
        raise ComponentCountError(len(loops))
    (loop,) = loops
    visits = [(r, c, entry) for r, c, entry in loop if m.cells[r][c].is_crossing]
    n = len(visits)
    if n == 0:
        return UNKNOT_DIAGRAM
    # edge -> arc label, per crossing cell
    labels: dict[tuple[int, int], dict[Edge, int]] = {}
    under_entry: dict[tuple[int, int], Edge] = {}
    for k, (r, c, entry) in enumerate(visits):
        tile = m.cells[r][c]
        slot = labels.setdefault((r, c), {})
        slot[entry] = k + 1
        slot[entry.opposite] = (k + 1) % n + 1
        if entry not in tile.over_edges:
            under_entry[(r, c)] = entry
    crossings = []
    order = sorted(labels, key=lambda rc: labels[rc][under_entry[rc]])
    for rc in order:
        e = under_entry[rc]
        slot = labels[rc]
        ring = [e, _CCW[e], e.opposite, _CCW[e.opposite]]
        crossings.append(tuple(slot[x] for x in ring))
    return PlanarDiagram(tuple(crossings))


def writhe(pd: PlanarDiagram) -> int:
    return sum(pd.signs())


@njit(cache=True)
def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


@njit(cache=True)
def state_counts(code, lo, hi):
    """Tally smoothing states ``lo <= s < hi`` by (#A-smoothings, #loops).

    ``code`` is a (c, 4) array of 0-based arc labels; bit i of the state
    selects the A-smoothing at crossing i.
    """
    c = code.shape[0]
    n = 2 * c
    counts = np.zeros((c + 1, n + 1), dtype=np.int64)
    parent = np.empty(n, dtype=np.int64)
    for s in range(lo, hi):
        for i in range(n):
            parent[i] = i
        comps = n
        na = 0
        for i in range(c):
            if (s >> i) & 1:
                na += 1
                p, q, u, v = code[i, 0], code[i, 1], code[i, 2], code[i, 3]
            else:
                p, q, u, v = code[i, 0], code[i, 3], code[i, 1], code[i, 2]
            rp = _find(parent, p)
            rq = _find(parent, q)
            if rp != rq:
                parent[rp] = rq
                comps -= 1
            ru = _find(parent, u)
            rv = _find(parent, v)
            if ru != rv:
                parent[ru] = rv
                comps -= 1
        counts[na, comps] += 1
    return counts


def bracket_from_counts(counts: np.ndarray) -> LaurentPoly:
    key = (counts.shape, counts.tobytes())
    hit = _BRACKET_MEMO.get(key)
    if hit is None:
        hit = _BRACKET_MEMO[key] = _bracket_from_counts(counts)
    return hit


_BRACKET_MEMO: dict[tuple, LaurentPoly] = {}


def _bracket_from_counts(counts: np.ndarray) -> LaurentPoly:
    c = counts.shape[0] - 1
    total: dict[int, int] = {}
    delta_pows = [LaurentPoly({0: 1})]
    for na in range(c + 1):
        for loops in np.nonzero(counts[na])[0]:
            while len(delta_pows) < loops:
                delta_pows.append(delta_pows[-1] * DELTA)
            k = int(counts[na, loops])
            shift = 2 * na - c
            for e, coef in delta_pows[loops - 1].terms:
                total[e + shift] = total.get(e + shift, 0) + k * coef
    return LaurentPoly(total)


def kauffman_bracket(pd: PlanarDiagram, partitions: int = 1) -> LaurentPoly:
    """State sum over all ``2^c`` smoothings.

    ``partitions`` splits the state range into contiguous chunks; the result is
    identical for any split.
    """
    c = pd.crossing_count
    if c > MAX_STATE_SUM_CROSSINGS:
        raise ValueError(f"{c} crossings exceeds the state-sum bound {MAX_STATE_SUM_CROSSINGS}")
    if c == 0:
        return LaurentPoly({0: 1})
    code = np.array(pd.crossings, dtype=np.int64) - 1
    total = 1 << c
    bounds = np.linspace(0, total, max(1, partitions) + 1).astype(np.int64)
    counts = sum(state_counts(code, int(lo), int(hi)) for lo, hi in zip(bounds[:-1], bounds[1:]))
    return bracket_from_counts(counts)


def normalize_bracket(bracket: LaurentPoly, w: int) -> LaurentPoly:
    """Multiply by ``(-A^3)^(-w)``."""
    return bracket * LaurentPoly({-3 * w: -1 if w % 2 else 1})


def diagram_jones(pd: PlanarDiagram) -> LaurentPoly:
    """Normalized bracket (in A) of a knot diagram."""
    return normalize_bracket(kauffman_bracket(pd), writhe(pd))


def normalized_jones(m: Mosaic) -> LaurentPoly:
    return diagram_jones(to_planar_diagram(m))


def jones_in_t(f: LaurentPoly) -> LaurentPoly:
    """Substitute ``A^-4 -> t``."""
    return f.substitute_power(-4)


def jones_from_t(v: LaurentPoly) -> LaurentPoly:
    return LaurentPoly((-4 * e, c) for e, c in v.terms)


def determinant(m: Mosaic) -> int:
    return abs(sum(c * (-1) ** e for e, c in jones_in_t(normalized_jones(m)).terms))


def is_alternating(pd: PlanarDiagram) -> bool:
    """Whether over and under passes alternate along the strand."""
    n = 2 * pd.crossing_count
    if n == 0:
        return True
    under = [False] * (n + 1)
    for a, *_ in pd.crossings:
        under[a] = True
    seq = under[1:]
    return all(seq[k] != seq[(k + 1) % n] for k in range(n))


def mosaic_is_alternating(m: Mosaic) -> bool:
    """Alternation checked on every traced component of the board."""
    for loop in trace_components(m):
        passes = [entry in m.cells[r][c].over_edges for r, c, entry in loop if m.cells[r][c].is_crossing]
        k = len(passes)
        if any(passes[i] == passes[(i + 1) % k] for i in range(k)):
            return False
    return True


def nugatory_crossings(pd: PlanarDiagram) -> list[int]:
    """Indices of crossings whose removal would disconnect the diagram.

    In the Gauss diagram each crossing is a chord joining the two arcs that run
    into it.  A crossing is nugatory exactly when its chord meets no other chord.
    A diagram with none of these is called reduced.
    """
    n = 2 * pd.crossing_count
    chords = []
    for a, b, _, d in pd.crossings:
        over_in = d if b == d % n + 1 else b
        chords.append((min(a, over_in), max(a, over_in)))
    out = []
    for i, (x, y) in enumerate(chords):
        if not any((x < u < y) != (x < v < y) for j, (u, v) in enumerate(chords) if j != i):
            out.append(i)
    return out
