"""Rebuild the small fixture boards deterministically.

Each fixture is the lexicographically first enumerated board with the stated
property, so rerunning this script reproduces the same files byte for byte.
The 6x6 witnesses come from ``find_witnesses.py`` and are not touched here.

    python3 scripts/make_fixtures.py --out fixtures
"""

import argparse
from pathlib import Path

from knotmosaic.enumerate import EnumFilter, codes_to_mosaic, enumerate_codes
from knotmosaic.invariants import is_alternating, normalized_jones, to_planar_diagram
from knotmosaic.mosaic import Mosaic, crossing_tiles, is_suitably_connected, parse_mosaic, serialize_mosaic, trace_components
from knotmosaic.moves import STENCILS, MoveKind, MoveSite, apply_move, find_moves
from knotmosaic.reference import identify


def _name(m: Mosaic) -> str | None:
    kid = identify(normalized_jones(m))
    return kid.name if kid else None


def first(n: int, f: EnumFilter, pred):
    for codes in enumerate_codes(n, f):
        m = codes_to_mosaic(codes, n)
        if pred(m):
            return m
    raise LookupError(f"no {n}x{n} board matches")


def kink4(unknot: Mosaic) -> Mosaic:
    """Pad the 2x2 unknot into a 4x4 board and add one kink by an inverse R1."""
    for r0 in range(3):
        for c0 in range(3):
            cells = [[0] * 4 for _ in range(4)]
            for i in range(2):
                for j in range(2):
                    cells[r0 + i][c0 + j] = int(unknot.cells[i][j])
            base = Mosaic.from_codes(cells)
            for r in range(3):
                for c in range(3):
                    for k in range(len(STENCILS[MoveKind.R1])):
                        site = MoveSite(MoveKind.R1, (r, c), k, inverse=True)
                        try:
                            m = apply_move(base, site)
                        except ValueError:
                            continue
                        if is_suitably_connected(m):
                            return m
    raise LookupError("no kink placement")


def hopf(m: Mosaic) -> bool:
    """Two loops clasped by two crossings, each loop passing over once (linked)."""
    if crossing_tiles(m) != 2:
        return False
    loops = trace_components(m)
    if len(loops) != 2:
        return False
    over = {}
    seen = {}
    for k, loop in enumerate(loops):
        for r, c, e in loop:
            t = m.cells[r][c]
            if t.is_crossing:
                seen.setdefault((r, c), set()).add(k)
                if e in t.over_edges:
                    over[(r, c)] = k
    return all(len(v) == 2 for v in seen.values()) and sorted(over.values()) == [0, 1]


def nonred_trefoil(m: Mosaic) -> bool:
    if _name(m) != "3_1":
        return False
    return any(s.kind is MoveKind.R2 and crossing_tiles(apply_move(m, s)) == 3 for s in find_moves(m))


def two_b_nonalt(m: Mosaic) -> bool:
    c = [int(m.cells[1 + k // 3][1 + k % 3]) for k in range(9)]
    i1, i2, i3, i4, i5, i6, i7, i8, i9 = c
    if i1 >= 9 or i9 >= 9 or not all(x >= 9 for x in c[1:8]):
        return False
    if not (i2 != i3 and i3 != i6 and i4 != i7 and i7 != i8 and i2 == i5):
        return False
    return not is_alternating(to_planar_diagram(m)) and _name(m) is not None


def main(argv=None):
    ap = argparse.ArgumentParser(description="rebuild the small fixture boards")
    ap.add_argument("--out", default="fixtures")
    out = Path(ap.parse_args(argv).out)
    (out / "links").mkdir(parents=True, exist_ok=True)

    def write(path: str, m: Mosaic, note: str):
        (out / path).write_text(f"# {note}\n" + serialize_mosaic(m) + "\n")
        print(f"{path}: {note}")

    unknot = parse_mosaic("2 2\n2 1\n3 4")
    write("unknot2.mosaic", unknot, "the 2x2 unknot")
    write("trefoil4.mosaic", first(4, EnumFilter(), lambda m: _name(m) == "3_1"), "first 4x4 board identifying as 3_1")
    write("kink4.mosaic", kink4(unknot), "2x2 unknot padded to 4x4 plus one R1 kink")
    write(
        "links/hopf4.mosaic",
        first(4, EnumFilter(exact_crossing_tiles=2, require_single_component=False), hopf),
        "first 4x4 two-loop board clasped by two crossings, each loop over once",
    )
    write(
        "nonred_trefoil5.mosaic",
        first(5, EnumFilter(exact_crossing_tiles=5), nonred_trefoil),
        "5-crossing 3_1 with an R2 site that leaves 3 crossings",
    )
    write(
        "7_4_5.mosaic",
        first(5, EnumFilter(exact_crossing_tiles=7, alternating_only=True), lambda m: _name(m) == "7_4"),
        "7_4 with seven alternating crossing tiles",
    )
    seven = EnumFilter(exact_crossing_tiles=7)
    write("6_1_5.mosaic", first(5, seven, lambda m: _name(m) == "6_1"), "6_1 with seven crossing tiles")
    write("2b_nonalt5.mosaic", first(5, seven, two_b_nonalt), "seven crossings, I2 and I5 break alternation")
    for knot, c in (("4_1", 4), ("5_1", 5), ("5_2", 5), ("6_2", 6)):
        for k in range(c, 10):
            try:
                m = first(5, EnumFilter(exact_crossing_tiles=k), lambda m, knot=knot: _name(m) == knot)
            except LookupError:
                continue
            write(f"{knot}_5.mosaic", m, f"first 5x5 board identifying as {knot} ({k} crossing tiles)")
            break


if __name__ == "__main__":
    main()
