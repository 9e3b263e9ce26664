"""Regenerate the embedded knot table from a KnotInfo CSV dump.

Usage::

    pip download database_knotinfo --no-deps -d /tmp/ki
    python3 -m zipfile -e /tmp/ki/database_knotinfo-*.whl /tmp/ki/x
    python3 scripts/build_reference_data.py /tmp/ki/x/database_knotinfo/csv_data/knotinfo_data_complete.csv

Writes ``src/knotmosaic/data/knots.txt`` (PD codes, crossing numbers, mosaic
numbers) and ``tests/data/knotinfo_jones.txt`` (published Jones polynomials,
used only as an external oracle by the test suite).
"""

import ast
import csv
import sys
from pathlib import Path

import sympy

ROOT = Path(__file__).resolve().parents[1]

# mosaic numbers m(K) of the prime knots through eight crossings
MOSAIC_NUMBER = {"0_1": 2, "3_1": 4, "4_1": 5, "5_1": 5, "5_2": 5, "6_1": 5, "6_2": 5, "6_3": 6, "7_4": 5}


def jones_terms(text: str) -> list[tuple[int, int]]:
    t = sympy.Symbol("t")
    expr = sympy.sympify(text.replace("^", "**"), locals={"t": t})
    expr = sympy.expand(expr)
    terms = sympy.Poly(expr * t**40, t).terms()
    return sorted((int(k[0]) - 40, int(c)) for k, c in terms)


def main(csv_path: str) -> None:
    csv.field_size_limit(10**9)
    with open(csv_path, newline="") as fh:
        reader = csv.reader(fh, delimiter="|")
        header = next(reader)
        next(reader)  # human-readable column titles
        rows = [dict(zip(header, r)) for r in reader]
    knots = [r for r in rows if r["name"].split("_")[0].isdigit() and int(r["name"].split("_")[0]) <= 8]

    out = [
        "# Prime knots through eight crossings (Rolfsen order) plus the unknot.",
        "# format: name crossing_number mosaic_number pd:[(a,b,c,d),...]",
        "# PD codes: KnotInfo pd_notation column (knotinfo.math.indiana.edu),",
        "# arcs numbered along the orientation, (a,b,c,d) counterclockwise from",
        "# the incoming under-strand.",
        "# version 1",
    ]
    amphichiral = []
    jones_lines = ["# KnotInfo jones_polynomial column, rewritten as: name | c*t^e + ..."]
    for r in knots:
        name = r["name"]
        c = int(r["crossing_number"])
        m = MOSAIC_NUMBER.get(name, 6)
        pd = ast.literal_eval(r["pd_notation"]) if r["pd_notation"].strip() else []
        pd_text = "[" + ",".join("(%d,%d,%d,%d)" % tuple(x) for x in pd) + "]"
        out.append(f"{name} {c} {m} pd:{pd_text}")
        if name == "0_1" or "amphicheiral" in r["symmetry_type"]:
            amphichiral.append(name)
        terms = jones_terms(r["jones_polynomial"])
        jones_lines.append(f"{name} | " + " + ".join(f"{k}*t^{e}" for e, k in terms))
    out.append("# knots equal to their mirror image")
    out.append("amphichiral: " + " ".join(amphichiral))

    (ROOT / "src/knotmosaic/data/knots.txt").write_text("\n".join(out) + "\n")
    (ROOT / "tests/data").mkdir(parents=True, exist_ok=True)
    (ROOT / "tests/data/knotinfo_jones.txt").write_text("\n".join(jones_lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1])
