"""Regenerate the golden files under tests/golden/ (run after an intentional output change).

    python3 scripts/update_goldens.py
"""

import contextlib
import io
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

from test_cli import CASES, mask  # noqa: E402

from knotmosaic.cli import run  # noqa: E402
from knotmosaic.mosaic import load_mosaic  # noqa: E402
from knotmosaic.render import render_svg  # noqa: E402

GOLDEN = ROOT / "tests" / "golden"


def main():
    (GOLDEN / "cli").mkdir(parents=True, exist_ok=True)
    for name, argv in CASES:
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            code = run(argv)
        if code != 0:
            raise SystemExit(f"{name}: exit {code}")
        (GOLDEN / "cli" / f"{name}.txt").write_text(mask(buf.getvalue()))
    (GOLDEN / "trefoil4.svg").write_text(render_svg(load_mosaic(ROOT / "fixtures" / "trefoil4.mosaic")))
    for n in (2, 3, 4):
        subprocess.run(
            [sys.executable, str(ROOT / "scripts" / "run_survey.py"), "--size", str(n), "--out", str(GOLDEN / f"survey_{n}.json")],
            check=True,
        )
    print("goldens written; the 5x5 survey golden is rebuilt with run_survey.py --size 5")


if __name__ == "__main__":
    main()
