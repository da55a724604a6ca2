"""Tabulate every supported count over a degree range and check the low-degree sanity values.

    python scripts/census_table.py --d-min 3 --d-max 8 --out census.csv
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from typing import Optional

from curve_census.counts import LOW_DEGREE_VALUES, SUPPORTED, CountEngine


@dataclass
class Config:
    d_min: int = 1
    d_max: int = 10
    lines: tuple[int, ...] = (0, 1, 2)
    out: Optional[str] = None


def run(cfg: Config) -> list[dict]:
    engine = CountEngine()
    rows = []
    for spec in SUPPORTED:
        for n in cfg.lines:
            poly = engine.n_final(spec, n)
            row = {"sing": str(spec), "n": n, "valid_from": spec.validity, "polynomial": str(poly)}
            row.update({f"d={d}": str(poly.eval(d)) for d in range(cfg.d_min, cfg.d_max + 1)})
            rows.append(row)
    return rows


def sanity(engine: CountEngine) -> list[str]:
    problems = []
    for tag, n, d, want in LOW_DEGREE_VALUES:
        got = engine.n_final(tag, n).eval(d)
        if got != want:
            problems.append(f"N({tag},{n}) at d={d}: {got}, expected {want}")
    return problems


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d-min", type=int, default=Config.d_min)
    ap.add_argument("--d-max", type=int, default=Config.d_max)
    ap.add_argument("--out", help="CSV path; stdout if omitted")
    a = ap.parse_args()
    cfg = Config(a.d_min, a.d_max, out=a.out)

    rows = run(cfg)
    fh = open(cfg.out, "w", newline="") if cfg.out else sys.stdout
    try:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if cfg.out:
            fh.close()

    problems = sanity(CountEngine())
    for p in problems:
        print("MISMATCH", p, file=sys.stderr)
    print(f"{len(rows)} rows, {len(LOW_DEGREE_VALUES) - len(problems)}/{len(LOW_DEGREE_VALUES)} sanity values ok", file=sys.stderr)
    return 1 if problems else 0


if __name__ == "__main__":
    sys.exit(main())
