"""Census across small primes next to Q, looking for characteristic-dependent jumps.

    python3 scripts/charp_sweep.py --r 4 5 --primes 3 5 7 11 101 [--workers 4]
"""

import argparse
import sys
from dataclasses import dataclass, field

from nilcentral.analyzer import charp_sweep
from nilcentral.analyzer.census import SweepRow


@dataclass
class SweepConfig:
    r_values: list[int] = field(default_factory=lambda: [4, 5])
    primes: list[int] = field(default_factory=lambda: [3, 5, 7, 11, 101])
    workers: int | None = None


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--r", type=int, nargs="+", default=[4, 5])
    ap.add_argument("--primes", type=int, nargs="+", default=[3, 5, 7, 11, 101])
    ap.add_argument("--workers", type=int)
    args = ap.parse_args()
    cfg = SweepConfig(args.r, args.primes, args.workers)
    fields = ["Q"] + [f"F{p}" for p in cfg.primes]
    rows = charp_sweep(cfg.r_values, fields, workers=cfg.workers)
    print(SweepRow.CSV_HEADER)
    for row in rows:
        print(row.csv_line())
    base = {row.r: (row.dim_centralizing, row.dim_commuting) for row in rows if row.field == "Q"}
    for row in rows:
        if row.field != "Q" and (row.dim_centralizing, row.dim_commuting) != base[row.r]:
            print(f"# r={row.r} {row.field}: differs from Q", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
