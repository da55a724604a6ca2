"""Derive the A_k and D_k obstruction invariants over a symbolic jet and time each derivation.

Beyond A7 / D8 the output is new territory: no closed form exists to compare against.
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from curve_census.cli import derive_formula


@dataclass
class Config:
    a_range: tuple[int, int] = (3, 7)
    d_range: tuple[int, int] = (6, 8)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--a-max", type=int, default=Config.a_range[1])
    ap.add_argument("--d-max", type=int, default=Config.d_range[1])
    a = ap.parse_args()
    cfg = Config((3, a.a_max), (6, a.d_max))

    for series, (lo, hi) in (("A", cfg.a_range), ("D", cfg.d_range)):
        for k in range(lo, hi + 1):
            t0 = time.perf_counter()
            text = derive_formula(series, k)
            dt = time.perf_counter() - t0
            terms = text.count(" + ") + text.count(" - ") + 1
            print(f"{series}{k}  [{terms} terms, {dt:.2f}s]\n    {text}\n")


if __name__ == "__main__":
    main()
