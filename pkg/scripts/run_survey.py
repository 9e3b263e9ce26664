"""Exhaustive knot survey of n x n boards; writes a JSON summary (used for the golden files).

    python3 scripts/run_survey.py --size 5 --out tests/golden/survey_5.json
    python3 scripts/run_survey.py --size 5 --exact-crossings 7 --alternating
"""

import argparse
import json
import pickle
import sys

from knotmosaic.enumerate import EnumFilter
from knotmosaic.tabulation import survey


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--crossings", type=int)
    p.add_argument("--exact-crossings", type=int)
    p.add_argument("--alternating", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="JSON summary path (default: stdout)")
    p.add_argument("--pickle", help="also pickle the full Survey object here")
    a = p.parse_args(argv)
    f = EnumFilter(a.crossings, a.exact_crossings, a.alternating)
    s = survey(a.size, f, a.workers)
    summary = s.summary()
    summary["witnesses"] = {k: list(v.witness) for k, v in sorted(s.knots.items())}
    text = json.dumps(summary, indent=2, sort_keys=True) + "\n"
    if a.out:
        with open(a.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if a.pickle:
        with open(a.pickle, "wb") as fh:
            pickle.dump(s, fh)
    print(f"{s.total} boards in {s.seconds:.1f}s", file=sys.stderr)


if __name__ == "__main__":
    main()
