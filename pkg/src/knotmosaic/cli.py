"""Command-line interface: ``knotmosaic <subcommand> ...``.

Exit codes: 0 success, 1 domain failure (invalid board, unidentified knot,
failed certificate), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from knotmosaic.enumerate import EnumFilter, enumerate_mosaics
from knotmosaic.invariants import (
    ComponentCountError,
    is_alternating,
    jones_in_t,
    normalized_jones,
    to_planar_diagram,
    writhe,
)
from knotmosaic.mosaic import (
    InnerBoard,
    MosaicFormatError,
    crossing_tiles,
    inner_board,
    is_suitably_connected,
    load_mosaic,
    mismatched_edges,
    nonblank_tiles,
    serialize_mosaic,
    trace_components,
)
from knotmosaic.moves import apply_move, complete_boundary, corner_reduce, find_moves, reduce_greedy
from knotmosaic.reference import bound_report, identify, reference_table
from knotmosaic.render import render_svg
from knotmosaic.tabulation import FixtureError, absence_proof, load_fixtures, survey, table_csv, tabulate

SUBCOMMANDS = (
    "validate", "trace", "identify", "jones", "reduce", "moves", "complete",
    "enumerate", "absence", "tabulate", "bounds", "render",
)  # fmt: skip


class DomainFailure(Exception):
    def __init__(self, message: str, payload: dict | None = None):
        super().__init__(message)
        self.payload = payload or {"error": message}


def _emit(args, text: str, payload: dict) -> None:
    out = json.dumps(payload, indent=2, sort_keys=True) if args.json else text
    if args.out and args.command not in ("tabulate", "render", "enumerate"):
        Path(args.out).write_text(out + "\n")
    else:
        print(out)


def _load(path: str):
    try:
        return load_mosaic(path)
    except MosaicFormatError as exc:
        raise DomainFailure(f"{path}: {exc}", {"file": path, "error": str(exc)})
    except OSError as exc:
        raise DomainFailure(f"{path}: {exc.strerror}", {"file": path, "error": exc.strerror})


def _require_valid(m, path):
    if not is_suitably_connected(m):
        bad = mismatched_edges(m)
        raise DomainFailure(
            f"not suitably connected ({len(bad)} dangling connection points)",
            {"file": path, "suitably_connected": False, "mismatches": [[r, c, e.name] for r, c, e in bad]},
        )


def _knot_jones(m, path):
    _require_valid(m, path)
    try:
        return normalized_jones(m)
    except ComponentCountError as exc:
        raise DomainFailure(str(exc), {"file": path, "error": str(exc), "components": exc.count})


def cmd_validate(args):
    m = _load(args.file)
    _require_valid(m, args.file)
    k = len(trace_components(m))
    noun = "component" if k == 1 else "components"
    _emit(args, f"suitably connected; {k} {noun}", {"file": args.file, "suitably_connected": True, "components": k, "mismatches": []})


def cmd_trace(args):
    m = _load(args.file)
    _require_valid(m, args.file)
    loops = trace_components(m)
    lines = [f"{len(loops)} component(s)"]
    for i, loop in enumerate(loops):
        lines.append(f"loop {i}: " + " ".join(f"({r},{c},{e.name})" for r, c, e in loop))
    payload = {"file": args.file, "components": [[[r, c, e.name] for r, c, e in loop] for loop in loops]}
    _emit(args, "\n".join(lines), payload)


def cmd_identify(args):
    m = _load(args.file)
    f = _knot_jones(m, args.file)
    kid = identify(f)
    v = jones_in_t(f)
    payload = {
        "file": args.file,
        "knot": kid.name if kid else None,
        "chirality": kid.chirality.value if kid else None,
        "jones_A": f.format("A"),
        "jones_t": v.format("t"),
    }
    if kid is None:
        raise DomainFailure("unidentified\n" + v.format("t"), payload)
    _emit(args, f"{kid.name} {kid.chirality.value}\n{v.format('t')}", payload)


def cmd_jones(args):
    m = _load(args.file)
    f = _knot_jones(m, args.file)
    pd = to_planar_diagram(m)
    v = jones_in_t(f)
    det = abs(v(-1))
    payload = {
        "file": args.file,
        "jones_A": f.format("A"),
        "jones_t": v.format("t"),
        "writhe": writhe(pd),
        "crossings": pd.crossing_count,
        "determinant": det,
        "alternating": is_alternating(pd),
        "pd": [list(x) for x in pd.crossings],
    }
    text = "\n".join(
        [
            f"A: {f.format('A')}",
            f"t: {v.format('t')}",
            f"writhe {payload['writhe']}, determinant {det}, alternating {str(payload['alternating']).lower()}",
            f"pd: {pd}",
        ]
    )
    _emit(args, text, payload)


def cmd_reduce(args):
    m = _load(args.file)
    _require_valid(m, args.file)
    r = reduce_greedy(m)
    if args.corner:
        while (c := corner_reduce(r)) is not None:
            r = reduce_greedy(c)
    payload = {"file": args.file, "crossings_before": crossing_tiles(m), "crossings_after": crossing_tiles(r), "mosaic": serialize_mosaic(r)}
    _emit(args, serialize_mosaic(r), payload)


def cmd_moves(args):
    m = _load(args.file)
    _require_valid(m, args.file)
    sites = find_moves(m)
    lines = [f"{s.kind.value} at {s.anchor} variant {s.orientation}" for s in sites] or ["no reducing moves"]
    payload = {
        "file": args.file,
        "moves": [
            {"kind": s.kind.value, "anchor": list(s.anchor), "variant": s.orientation, "crossings_after": crossing_tiles(apply_move(m, s))}
            for s in sites
        ],
    }
    _emit(args, "\n".join(lines), payload)


def cmd_complete(args):
    m = _load(args.file)
    if args.size:
        if m.rows != args.size - 2 or m.cols != args.size - 2:
            raise DomainFailure(f"inner board must be {args.size - 2}x{args.size - 2}")
        inner = InnerBoard(args.size, m.cells)
    else:
        inner = inner_board(m)
    done = complete_boundary(inner)
    comps = [len(trace_components(b)) for b in done]
    text = f"{len(done)} completion(s)" + "".join(
        f"\n\n# components: {k}\n{serialize_mosaic(b)}" for b, k in zip(done, comps)
    )
    payload = {"completions": [{"components": k, "mosaic": serialize_mosaic(b)} for b, k in zip(done, comps)]}
    _emit(args, text, payload)


def _filter(args, single=True) -> EnumFilter:
    return EnumFilter(
        max_crossing_tiles=args.crossings,
        exact_crossing_tiles=args.exact_crossings,
        alternating_only=args.alternating,
        require_single_component=single,
    )


def cmd_enumerate(args):
    _need_size(args)
    f = _filter(args, single=not args.all_components)
    if args.identify:
        s = survey(args.size, f, args.workers)
        payload = s.summary()
        lines = [f"{s.total} boards"] + [f"{k}: {v['count']}" for k, v in payload["knots"].items()]
        if s.unidentified:
            lines.append(f"unidentified: {s.unidentified}")
        _emit(args, "\n".join(lines), payload)
        return
    count = 0
    sink = open(args.out, "w") if args.out else None
    try:
        for m in enumerate_mosaics(args.size, f):
            count += 1
            if sink:
                sink.write(serialize_mosaic(m) + "\n\n")
    finally:
        if sink:
            sink.close()
    _emit(args, f"{count} boards", {"size": args.size, "filter": vars(f), "boards": count})


def cmd_absence(args):
    _need_size(args)
    cert = absence_proof(args.size, args.knot, args.workers)
    verdict = "absent" if cert.absent else "PRESENT"
    text = f"{args.knot} on {args.size}x{args.size}: {verdict} ({cert.boards} boards, {cert.seconds:.1f}s)"
    if not cert.absent:
        raise DomainFailure(text, cert.as_dict())
    _emit(args, text, cert.as_dict())


def cmd_tabulate(args):
    fixtures = load_fixtures(args.fixtures) if args.fixtures else []
    try:
        rows = tabulate(args.max_size, fixtures, args.workers)
    except FixtureError as exc:
        raise DomainFailure(str(exc), {"error": str(exc), "fixture": exc.fixture})
    payload = [r.as_dict() for r in rows]
    if args.out:
        out = Path(args.out)
        out.write_text(json.dumps(payload, indent=2) + "\n")
        out.with_suffix(".csv").write_text(table_csv(rows))
    unresolved = [r.knot for r in rows if r.mosaic_number is None]
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for r in rows:
            m = r.mosaic_number if r.mosaic_number is not None else f"{r.lower_bound}..{r.upper_bound or '?'}"
            flag = "" if r.tile_count_exhaustive else " (tile count: witness only)"
            print(f"{r.knot:>5}  m={m}  tiles={r.min_tile_count}{flag}")
    if unresolved:
        print("unresolved: " + " ".join(unresolved), file=sys.stderr)
        raise SystemExit(1)


def cmd_bounds(args):
    reps = [bound_report(r) for r in reference_table()]
    lines = [
        f"{b.name:>5} c={b.crossing_number} m={b.mosaic_number} "
        f"lower {b.lower_printed} {'ok' if b.lower_ok else 'VIOLATED'}, upper {b.upper} {'ok' if b.upper_ok else 'VIOLATED'}"
        for b in reps
    ]
    _emit(args, "\n".join(lines), {"bounds": [vars(b) for b in reps]})


def cmd_render(args):
    m = _load(args.file)
    svg = render_svg(m)
    if args.out:
        Path(args.out).write_text(svg)
    if args.json:
        print(json.dumps({"file": args.file, "svg": svg, "mismatches": len(mismatched_edges(m))}, indent=2, sort_keys=True))
    elif not args.out:
        sys.stdout.write(svg)


def _need_size(args):
    if args.size is None:
        raise DomainFailure("--size is required")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", metavar="FILE", help="write output to FILE")
    common.add_argument("--workers", type=int, default=1, metavar="N")

    board = argparse.ArgumentParser(add_help=False)
    board.add_argument("--size", type=int)
    board.add_argument("--crossings", type=int, metavar="MAX", help="at most MAX crossing tiles")
    board.add_argument("--exact-crossings", type=int, metavar="K")
    board.add_argument("--alternating", action="store_true")

    p = argparse.ArgumentParser(prog="knotmosaic", description="Knot mosaics: validation, invariants, enumeration, tabulation.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in ("validate", "trace", "identify", "jones", "moves", "render"):
        sub.add_parser(name, parents=[common]).add_argument("file")
    red = sub.add_parser("reduce", parents=[common])
    red.add_argument("file")
    red.add_argument("--corner", action="store_true", help="also apply corner reductions")
    comp = sub.add_parser("complete", parents=[common])
    comp.add_argument("file", help="full board, or an inner board together with --size")
    comp.add_argument("--size", type=int)
    en = sub.add_parser("enumerate", parents=[common, board])
    en.add_argument("--all-components", action="store_true", help="include links and the empty board")
    en.add_argument("--identify", action="store_true", help="identify every board and summarize by knot")
    ab = sub.add_parser("absence", parents=[common, board])
    ab.add_argument("knot")
    tab = sub.add_parser("tabulate", parents=[common])
    tab.add_argument("--max-size", type=int, default=6)
    tab.add_argument("--fixtures", metavar="DIR")
    sub.add_parser("bounds", parents=[common])
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = globals()[f"cmd_{args.command}"]
    try:
        handler(args)
    except DomainFailure as exc:
        if getattr(args, "json", False):
            exc.payload.setdefault("error", str(exc))
            print(json.dumps(exc.payload, indent=2, sort_keys=True))
        else:
            print(str(exc), file=sys.stderr)
        return 1
    except SystemExit as exc:
        return int(exc.code or 0)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
