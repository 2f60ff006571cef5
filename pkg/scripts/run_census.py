"""Dimension census of centralizing and commuting maps over Q, with timings.

    python3 scripts/run_census.py --r 4 5 6 [--out census.csv]
"""

import argparse
import csv
import sys
import time
from dataclasses import dataclass, field

from nilcentral import RingContext, parse_field
from nilcentral.analyzer import map_space_dimension, predicted_dimension


@dataclass
class CensusConfig:
    r_values: list[int] = field(default_factory=lambda: [4, 5, 6])
    field: str = "Q"
    out: str | None = None


def run(cfg: CensusConfig) -> list[dict]:
    fld = parse_field(cfg.field)
    rows = []
    for r in cfg.r_values:
        ctx = RingContext(r, fld)
        for kind in ("centralizing", "commuting"):
            t0 = time.perf_counter()
            dim, _ = map_space_dimension(ctx, kind)
            rows.append(
                {
                    "r": r,
                    "field": cfg.field,
                    "n": ctx.n,
                    "kind": kind,
                    "dimension": dim,
                    "predicted": predicted_dimension(ctx, kind),
                    "seconds": round(time.perf_counter() - t0, 3),
                }
            )
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r", type=int, nargs="+", default=[4, 5, 6])
    ap.add_argument("--field", default="Q")
    ap.add_argument("--out")
    args = ap.parse_args()
    rows = run(CensusConfig(args.r, args.field, args.out))
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    writer = csv.DictWriter(out, fieldnames=list(rows[0]))
    writer.writeheader()
    writer.writerows(rows)
    bad = [row for row in rows if row["predicted"] is not None and row["predicted"] != row["dimension"]]
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
