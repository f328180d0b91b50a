"""Regenerate the golden net fixtures shipped in ``netlab/data``.

    python -m netlab.fixtures [--check]

The hexagon figure-eight has no closed form here; it is the first solution
of the bounded midpoint search on the doubled regular hexagon.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .io import dumps
from .search import SearchConfig, search_figure8

DATA = Path(__file__).with_name("data")
HEXAGON = "figure8_hexagon.json"


def hexagon_figure8_json() -> str:
    report = search_figure8(SearchConfig(6, max_word_length=24))
    if not report.solutions:
        raise RuntimeError("the hexagon search found no figure-eight")
    return dumps(report.solutions[0]) + "\n"


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="python -m netlab.fixtures", description=__doc__.split("\n")[0])
    ap.add_argument("--check", action="store_true",
                    help="compare with the stored fixture instead of overwriting it")
    args = ap.parse_args(argv)
    text = hexagon_figure8_json()
    target = DATA / HEXAGON
    if args.check:
        same = target.exists() and target.read_text() == text
        print(f"{target.name}: {'up to date' if same else 'differs'}")
        return 0 if same else 1
    target.write_text(text)
    print(f"wrote {target}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
