#!/usr/bin/env python3
"""Bounded searches for the two quartics and the median radicands, with timings."""

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass

from pythsec.diophantine import QuarticEquation, Regime, median_radicand_scan, search_quartic


@dataclass
class SearchConfig:
    bound: int = 300
    unconstrained_bound: int = 20
    median_m_max: int = 50
    workers: int = 1


def run(cfg: SearchConfig) -> dict:
    results = {"config": asdict(cfg), "quartic": [], "median": None}
    for eq in QuarticEquation:
        for regime in Regime:
            bound = cfg.unconstrained_bound if regime is Regime.UNCONSTRAINED else cfg.bound
            start = time.perf_counter()
            sols = search_quartic(eq, regime, bound, workers=cfg.workers)
            results["quartic"].append({
                "equation": eq.value,
                "regime": regime.value,
                "bound": bound,
                "solutions": [str(s) for s in sols],
                "seconds": round(time.perf_counter() - start, 3),
            })
    start = time.perf_counter()
    hits = median_radicand_scan(cfg.median_m_max)
    results["median"] = {
        "m_max": cfg.median_m_max,
        "hits": [h._asdict() for h in hits],
        "seconds": round(time.perf_counter() - start, 3),
    }
    return results


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bound", type=int, default=SearchConfig.bound)
    ap.add_argument("--unconstrained-bound", type=int, default=SearchConfig.unconstrained_bound)
    ap.add_argument("--median-m-max", type=int, default=SearchConfig.median_m_max)
    ap.add_argument("--workers", type=int, default=SearchConfig.workers)
    ap.add_argument("--json", action="store_true", help="print the full result document")
    args = ap.parse_args(argv)
    cfg = SearchConfig(args.bound, args.unconstrained_bound, args.median_m_max, args.workers)

    results = run(cfg)
    if args.json:
        print(json.dumps(results, indent=2, sort_keys=True))
        return 0
    for row in results["quartic"]:
        shown = ",".join(row["solutions"][:5]) + (" ..." if len(row["solutions"]) > 5 else "")
        print(f"{row['equation']} {row['regime']:13s} box {row['bound']:4d}: "
              f"{len(row['solutions']):3d} solutions  {shown}  ({row['seconds']}s)")
    med = results["median"]
    print(f"median radicand squares, m <= {med['m_max']}: {len(med['hits'])} hits ({med['seconds']}s)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
