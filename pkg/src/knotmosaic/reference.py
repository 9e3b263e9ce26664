"""Embedded table of the unknot and the 36 prime knots with at most eight crossings."""

from __future__ import annotations

import ast
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from importlib import resources

from knotmosaic.invariants import PlanarDiagram, diagram_jones
from knotmosaic.laurent import LaurentPoly


class Chirality(str, Enum):
    AS_TABLE = "AsTable"
    MIRROR = "Mirror"
    AMPHICHIRAL = "Amphichiral"


@dataclass(frozen=True)
class KnotId:
    name: str
    chirality: Chirality

    def __str__(self):
        return self.name if self.chirality is not Chirality.MIRROR else f"{self.name} (mirror)"


@dataclass(frozen=True)
class KnotRecord:
    name: str
    crossing_number: int
    mosaic_number: int
    reference_pd: PlanarDiagram
    jones: LaurentPoly
    amphichiral: bool = False


class ReferenceTableError(RuntimeError):
    pass


def parse_reference_data(text: str) -> tuple[list[tuple[str, int, int, PlanarDiagram]], set[str]]:
    entries = []
    amphichiral: set[str] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("amphichiral:"):
            amphichiral.update(line.split(":", 1)[1].split())
            continue
        try:
            name, c, m, pd = line.split(maxsplit=3)
            if not pd.startswith("pd:"):
                raise ValueError("missing pd: field")
            code = ast.literal_eval(pd[3:])
            entries.append((name, int(c), int(m), PlanarDiagram.from_code(code)))
        except (ValueError, SyntaxError) as exc:
            raise ReferenceTableError(f"knots.txt line {lineno}: {exc}") from exc
    return entries, amphichiral


def build_table(text: str) -> tuple[KnotRecord, ...]:
    entries, amphichiral = parse_reference_data(text)
    records = tuple(
        KnotRecord(name, c, m, pd, diagram_jones(pd), name in amphichiral) for name, c, m, pd in entries
    )
    self_check(records)
    return records


def self_check(records) -> None:
    """Jones values must separate every knot from every other knot and its mirror."""
    seen: dict[LaurentPoly, str] = {}
    for rec in records:
        mirror_equal = rec.jones.mirror() == rec.jones
        if rec.amphichiral and not mirror_equal:
            raise ReferenceTableError(f"{rec.name} is listed amphichiral but its Jones polynomial is not symmetric")
        if not rec.amphichiral and mirror_equal:
            raise ReferenceTableError(f"{rec.name} cannot be told apart from its mirror")
        for p in {rec.jones, rec.jones.mirror()}:
            if p in seen:
                raise ReferenceTableError(f"Jones collision between {seen[p]} and {rec.name}")
            seen[p] = rec.name


@lru_cache(maxsize=1)
def reference_table() -> tuple[KnotRecord, ...]:
    text = resources.files("knotmosaic").joinpath("data/knots.txt").read_text()
    return build_table(text)


def record(name: str) -> KnotRecord:
    for rec in reference_table():
        if rec.name == name:
            return rec
    raise KeyError(f"unknown knot {name!r}")


@lru_cache(maxsize=1)
def _lookup() -> dict[LaurentPoly, KnotId]:
    table = {}
    for rec in reference_table():
        if rec.amphichiral:
            table[rec.jones] = KnotId(rec.name, Chirality.AMPHICHIRAL)
        else:
            table[rec.jones] = KnotId(rec.name, Chirality.AS_TABLE)
            table[rec.jones.mirror()] = KnotId(rec.name, Chirality.MIRROR)
    return table


def identify(p: LaurentPoly) -> KnotId | None:
    """Knot whose normalized Jones value (in A) is ``p``; ``None`` when unidentified."""
    return _lookup().get(p)


@dataclass(frozen=True)
class BoundReport:
    name: str
    crossing_number: int
    mosaic_number: int
    lower_printed: int
    upper: int
    lower_ok: bool
    upper_ok: bool


def bound_report(rec: KnotRecord) -> BoundReport:
    """Check ceil(sqrt(c)) + 3 <= m and m <= c + 1 against the tabulated m."""
    c, m = rec.crossing_number, rec.mosaic_number
    lower = math.isqrt(c - 1) + 1 + 3 if c > 0 else 3
    upper = c + 1
    return BoundReport(rec.name, c, m, lower, upper, lower <= m, m <= upper)
