"""Knot surveys over exhaustive enumerations, absence certificates and the mosaic-number table."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from knotmosaic.enumerate import DEFAULT_FILTER, EnumFilter, codes_to_mosaic, enumerate_codes, first_rows
from knotmosaic.invariants import normalized_jones
from knotmosaic.laurent import LaurentPoly
from knotmosaic.mosaic import Mosaic, crossing_tiles, is_suitably_connected, load_mosaic, nonblank_tiles, trace_components
from knotmosaic.reference import Chirality, identify, record, reference_table

EXHAUSTIVE_MAX = 5


@dataclass
class KnotStats:
    count: int = 0
    min_nonblank: int = 10**9
    min_crossings: int = 10**9
    witness: tuple[int, ...] = ()
    chiralities: set[str] = field(default_factory=set)

    def add(self, codes: tuple[int, ...], chirality: Chirality) -> None:
        self.count += 1
        nb = sum(c != 0 for c in codes)
        self.min_crossings = min(self.min_crossings, sum(c >= 9 for c in codes))
        if (nb, codes) < (self.min_nonblank, self.witness or (99,)):
            self.min_nonblank, self.witness = nb, codes
        self.chiralities.add(chirality.value)

    def merge(self, other: "KnotStats") -> None:
        self.count += other.count
        self.min_crossings = min(self.min_crossings, other.min_crossings)
        if (other.min_nonblank, other.witness) < (self.min_nonblank, self.witness or (99,)):
            self.min_nonblank, self.witness = other.min_nonblank, other.witness
        self.chiralities |= other.chiralities


@dataclass
class Survey:
    """Identification of every board of one enumeration."""

    n: int
    filter: EnumFilter
    total: int = 0
    knots: dict[str, KnotStats] = field(default_factory=dict)
    unidentified: int = 0
    unidentified_values: set[LaurentPoly] = field(default_factory=set)
    jones_seen: set[LaurentPoly] = field(default_factory=set)
    seconds: float = 0.0
    workers: int = 1

    def merge(self, other: "Survey") -> None:
        self.total += other.total
        for name, st in other.knots.items():
            self.knots.setdefault(name, KnotStats()).merge(st)
        self.unidentified += other.unidentified
        self.unidentified_values |= other.unidentified_values
        self.jones_seen |= other.jones_seen

    def witness(self, name: str) -> Mosaic:
        return codes_to_mosaic(self.knots[name].witness, self.n)

    def realizable(self) -> set[str]:
        return set(self.knots)

    def summary(self) -> dict:
        return {
            "size": self.n,
            "filter": vars(self.filter),
            "boards": self.total,
            "knots": {
                k: {"count": s.count, "min_nonblank": s.min_nonblank, "min_crossings": s.min_crossings}
                for k, s in sorted(self.knots.items(), key=lambda kv: _table_order(kv[0]))
            },
            "unidentified_boards": self.unidentified,
            "unidentified_jones_values": len(self.unidentified_values),
        }


def _table_order(name: str) -> tuple[int, int]:
    c, k = name.split("_")
    return int(c), int(k)


def _survey_prefixes(args) -> Survey:
    n, f, prefixes = args
    part = Survey(n, f)
    cache: dict[LaurentPoly, object] = {}
    for prefix in prefixes:
        for codes in enumerate_codes(n, f, prefix):
            part.total += 1
            jones = normalized_jones(codes_to_mosaic(codes, n))
            if jones not in cache:
                cache[jones] = identify(jones)
            kid = cache[jones]
            if kid is None:
                part.unidentified += 1
                part.unidentified_values.add(jones)
            else:
                part.knots.setdefault(kid.name, KnotStats()).add(codes, kid.chirality)
    part.jones_seen = set(cache)
    return part


def survey(n: int, f: EnumFilter = DEFAULT_FILTER, workers: int = 1) -> Survey:
    """Identify every one-component board of the enumeration.

    Work is split by first row; the merged result does not depend on the split.
    """
    if not f.require_single_component:
        raise ValueError("surveys identify knots and need require_single_component=True")
    start = time.perf_counter()
    rows = [(r,) for r in first_rows(n)]
    prefixes = [r[0] for r in rows]
    result = Survey(n, f, workers=workers)
    if workers <= 1:
        result.merge(_survey_prefixes((n, f, prefixes)))
    else:
        chunks = [prefixes[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(workers) as pool:
            for part in pool.map(_survey_prefixes, [(n, f, c) for c in chunks if c]):
                result.merge(part)
    result.seconds = time.perf_counter() - start
    return result


_SURVEYS: dict[tuple[int, EnumFilter], Survey] = {}


def cached_survey(n: int, f: EnumFilter = DEFAULT_FILTER, workers: int = 1) -> Survey:
    """``survey`` memoized per process; the result does not depend on ``workers``."""
    key = (n, f)
    if key not in _SURVEYS:
        _SURVEYS[key] = survey(n, f, workers)
    return _SURVEYS[key]


def realizable_knots(n: int, f: EnumFilter = DEFAULT_FILTER, workers: int = 1) -> set[str]:
    return cached_survey(n, f, workers).realizable()


@dataclass(frozen=True)
class AbsenceCertificate:
    knot: str
    n: int
    absent: bool
    boards: int
    distinct_jones: int
    filter: EnumFilter
    seconds: float

    def __bool__(self):
        return self.absent

    def as_dict(self) -> dict:
        return {
            "knot": self.knot,
            "size": self.n,
            "absent": self.absent,
            "boards_enumerated": self.boards,
            "distinct_jones_values": self.distinct_jones,
            "filter": vars(self.filter),
            "seconds": round(self.seconds, 3),
        }


def absence_proof(n: int, knot: str, workers: int = 1, done: Survey | None = None) -> AbsenceCertificate:
    """Certify that neither chirality of ``knot`` occurs on any n x n board.

    Sound as an absence argument: any board representing the knot would show
    its Jones value.
    """
    if n > EXHAUSTIVE_MAX:
        raise ValueError(f"absence proofs need exhaustive enumeration (n <= {EXHAUSTIVE_MAX})")
    rec = record(knot)
    s = done if done is not None else cached_survey(n, DEFAULT_FILTER, workers)
    if s.n != n or s.filter != DEFAULT_FILTER:
        raise ValueError("survey does not match the requested board")
    absent = rec.jones not in s.jones_seen and rec.jones.mirror() not in s.jones_seen
    return AbsenceCertificate(knot, n, absent, s.total, len(s.jones_seen), s.filter, s.seconds)


# -- tabulation -------------------------------------------------------------------


class FixtureError(ValueError):
    def __init__(self, name: str, reason: str):
        super().__init__(f"fixture {name}: {reason}")
        self.fixture = name


@dataclass(frozen=True)
class TabRow:
    knot: str
    mosaic_number: int | None
    lower_bound: int
    upper_bound: int | None
    min_tile_count: int | None
    tile_count_exhaustive: bool
    witness: Mosaic | None
    witness_source: str | None

    def as_dict(self) -> dict:
        return {
            "knot": self.knot,
            "mosaic_number": self.mosaic_number,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "min_tile_count": self.min_tile_count,
            "tile_count_exhaustive": self.tile_count_exhaustive,
            "witness_source": self.witness_source,
            "witness": [list(r) for r in self.witness.codes] if self.witness else None,
        }


def check_fixture(m: Mosaic) -> str:
    """Validate a witness board and return the knot it identifies as."""
    name = m.provenance or "<unnamed>"
    if m.rows != m.cols:
        raise FixtureError(name, "board is not square")
    if not is_suitably_connected(m):
        raise FixtureError(name, "not suitably connected")
    k = len(trace_components(m))
    if k != 1:
        raise FixtureError(name, f"{k} components")
    kid = identify(normalized_jones(m))
    if kid is None:
        raise FixtureError(name, "Jones polynomial matches no tabulated knot")
    return kid.name


def load_fixtures(directory: str | Path) -> list[Mosaic]:
    return [load_mosaic(p) for p in sorted(Path(directory).glob("*.mosaic"))]


def tabulate(
    max_n: int,
    fixtures: Iterable[Mosaic] = (),
    workers: int = 1,
    surveys: dict[int, Survey] | None = None,
) -> list[TabRow]:
    """Mosaic number of every tabulated knot from exhaustive surveys plus fixture witnesses.

    Boards up to ``min(max_n, 5)`` are enumerated exhaustively (absence on
    n x n implies absence on every smaller board, which pads into it).  Larger
    boards contribute only through fixture witnesses.
    """
    surveys = dict(surveys or {})
    top = min(max_n, EXHAUSTIVE_MAX)
    for n in range(2, top + 1):
        if n not in surveys:
            surveys[n] = cached_survey(n, DEFAULT_FILTER, workers)

    best_fixture: dict[str, Mosaic] = {}
    for m in fixtures:
        name = check_fixture(m)
        if m.size > max_n:
            continue
        cur = best_fixture.get(name)
        if cur is None or (m.size, nonblank_tiles(m), m.codes) < (cur.size, nonblank_tiles(cur), cur.codes):
            best_fixture[name] = m

    rows = []
    for rec in reference_table():
        found = [n for n in range(2, top + 1) if rec.name in surveys[n].knots]
        if found:
            m = found[0]
            st = surveys[m].knots[rec.name]
            if st.min_crossings < rec.crossing_number:
                # a Jones match on fewer crossing tiles than c(K) must be a collision
                raise RuntimeError(f"{rec.name} matched on a board with {st.min_crossings} crossing tiles")
            rows.append(TabRow(rec.name, m, m, m, st.min_nonblank, True, surveys[m].witness(rec.name), f"enumeration n={m}"))
            continue
        lower = top + 1
        fx = best_fixture.get(rec.name)
        upper = fx.size if fx is not None else None
        settled = upper is not None and upper == lower
        rows.append(
            TabRow(
                rec.name,
                upper if settled else None,
                lower,
                upper,
                nonblank_tiles(fx) if fx is not None else None,
                False,
                fx,
                f"fixture {fx.provenance}" if fx is not None else None,
            )
        )
    return rows


def table_csv(rows: Sequence[TabRow]) -> str:
    lines = ["knot,mosaic_number,lower_bound,upper_bound,min_tile_count,tile_count_exhaustive,witness_source"]
    for r in rows:
        vals = [r.knot, r.mosaic_number, r.lower_bound, r.upper_bound, r.min_tile_count, r.tile_count_exhaustive, r.witness_source]
        lines.append(",".join("" if v is None else str(v).lower() if isinstance(v, bool) else str(v) for v in vals))
    return "\n".join(lines) + "\n"
