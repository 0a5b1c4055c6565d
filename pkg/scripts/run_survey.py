#!/usr/bin/env python3
"""Classification census of the 17 secondary elements over a (delta, m, n) box.

Writes one CSV row per (element, class) with its count, plus the list of
parameter triples where delta_beta is rational.  Also cross-checks the
general-formula path against the closed forms on every triangle.
"""

import argparse
import csv
import sys
import time
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Tuple

from pythsec.elements import ELEMENT_NAMES, closed_forms, secondary_elements
from pythsec.triples import iter_survey


@dataclass
class SurveyConfig:
    m_max: int = 50
    deltas: Tuple[int, ...] = (1, 2, 3)
    out_dir: Path = field(default_factory=lambda: Path("results"))


def run(cfg: SurveyConfig) -> Counter:
    census: Counter = Counter()
    rational_beta = []
    for p in iter_survey(cfg.m_max, cfg.deltas):
        report = secondary_elements(p)
        if report != closed_forms(p):
            raise SystemExit(f"closed forms disagree at {p}")
        for name, cls in report.classification.items():
            census[name, cls.value] += 1
        if report.classification["delta_beta"].is_rational:
            rational_beta.append((p.delta, p.m, p.n, str(report.delta_beta)))

    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    with open(cfg.out_dir / "survey_census.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["element", "class", "count"])
        for name in ELEMENT_NAMES:
            for (el, cls), count in sorted(census.items()):
                if el == name:
                    w.writerow([el, cls, count])
    with open(cfg.out_dir / "rational_delta_beta.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["delta", "m", "n", "delta_beta"])
        w.writerows(rational_beta)
    return census


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m-max", type=int, default=SurveyConfig.m_max)
    ap.add_argument("--deltas", default="1,2,3", help="comma-separated scale factors")
    ap.add_argument("--out-dir", type=Path, default=Path("results"))
    args = ap.parse_args(argv)
    cfg = SurveyConfig(args.m_max, tuple(int(d) for d in args.deltas.split(",")), args.out_dir)

    start = time.perf_counter()
    census = run(cfg)
    total = sum(c for (el, _), c in census.items() if el == "R")
    print(f"{total} triangles, m <= {cfg.m_max}, deltas {cfg.deltas}  ({time.perf_counter() - start:.2f}s)")
    for name in ELEMENT_NAMES:
        row = ", ".join(f"{cls}={c}" for (el, cls), c in sorted(census.items()) if el == name)
        print(f"  {name:12s} {row}")
    print(f"wrote {cfg.out_dir}/survey_census.csv and rational_delta_beta.csv")
    return 0


if __name__ == "__main__":
    sys.exit(main())
