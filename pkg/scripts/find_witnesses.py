"""Random search for small-board witnesses of every tabulated knot.

Writes one ``<name>_<n>.mosaic`` file per knot found into the output
directory, keeping the witness with the fewest crossing tiles and then the
fewest non-blank tiles.

    python3 scripts/find_witnesses.py --size 6 --samples 200000 --out fixtures/
"""

import argparse
import random
from pathlib import Path

from knotmosaic.enumerate import EnumFilter, codes_to_mosaic, sample_codes
from knotmosaic.invariants import normalized_jones
from knotmosaic.mosaic import crossing_tiles, load_mosaic, nonblank_tiles, serialize_mosaic
from knotmosaic.reference import identify, reference_table


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=6)
    ap.add_argument("--samples", type=int, default=100000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--weight", type=float, default=4.0, help="relative weight of crossing tiles")
    ap.add_argument("--min-crossings", type=int, default=7)
    ap.add_argument("--out", default="fixtures")
    ap.add_argument("--only", nargs="*", help="knot names to look for (default: those with m == size)")
    args = ap.parse_args()

    out = Path(args.out)
    out.mkdir(exist_ok=True)
    wanted = set(args.only or [r.name for r in reference_table() if r.mosaic_number == args.size])
    best = {}
    for name in wanted:
        p = out / f"{name}_{args.size}.mosaic"
        if p.exists():
            m = load_mosaic(p)
            best[name] = (crossing_tiles(m), nonblank_tiles(m))
    rng = random.Random(args.seed)
    for i in range(args.samples):
        codes = sample_codes(args.size, rng, EnumFilter(), crossing_weight=args.weight)
        if sum(c >= 9 for c in codes) < args.min_crossings:
            continue
        m = codes_to_mosaic(codes, args.size)
        kid = identify(normalized_jones(m))
        if kid is None or kid.name not in wanted:
            continue
        score = (crossing_tiles(m), nonblank_tiles(m))
        if kid.name not in best or score < best[kid.name]:
            best[kid.name] = score
            (out / f"{kid.name}_{args.size}.mosaic").write_text(
                f"# {kid.name} on a {args.size}x{args.size} board\n" + serialize_mosaic(m) + "\n"
            )
            print(f"[{i}] {kid.name} crossings={score[0]} nonblank={score[1]}  ({len(best)}/{len(wanted)})", flush=True)
    missing = sorted(wanted - set(best))
    print("missing:", " ".join(missing) if missing else "none")


if __name__ == "__main__":
    main()
