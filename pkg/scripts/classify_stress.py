"""Stress the classifier: model germs under random rational coordinate changes and unit factors.

Reports misclassifications and per-germ timing.
"""

from __future__ import annotations

import argparse
import random
import statistics
import time
from dataclasses import dataclass
from fractions import Fraction

from curve_census.normalform import classify
from curve_census.normalform.series import PowerSeries2

MODELS = {
    **{f"A{k}": {(0, 2): 1, (k + 1, 0): 1} for k in range(0, 8)},
    **{f"D{k}": {(1, 2): 1, (k - 1, 0): 1} for k in range(4, 8)},
    "E6": {(0, 3): 1, (4, 0): 1},
    "E7": {(0, 3): 1, (3, 1): 1},
}


@dataclass
class Config:
    trials: int = 100
    seed: int = 0
    height: int = 9  # numerators drawn from [-height, height]
    order: int = 12


def rational(rng: random.Random, h: int) -> Fraction:
    return Fraction(rng.randint(-h, h), rng.randint(1, 5))


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=Config.trials)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--height", type=int, default=Config.height)
    a = ap.parse_args()
    cfg = Config(a.trials, a.seed, a.height)
    rng = random.Random(cfg.seed)

    times: dict[str, list[float]] = {tag: [] for tag in MODELS}
    wrong = 0
    for _ in range(cfg.trials):
        while True:
            m = [rational(rng, cfg.height) for _ in range(4)]
            if m[0] * m[3] - m[1] * m[2]:
                break
        unit = PowerSeries2(cfg.order, {(0, 0): rational(rng, cfg.height) or 1, (1, 0): rational(rng, cfg.height),
                                        (0, 1): rational(rng, cfg.height)})
        for tag, terms in MODELS.items():
            germ = PowerSeries2(cfg.order, terms).linear_change(*m) * unit
            t0 = time.perf_counter()
            got = classify(germ, max_order=cfg.order).tag
            times[tag].append(time.perf_counter() - t0)
            if got != tag:
                wrong += 1
                print(f"MISS {tag} -> {got} under {m}")
    for tag, ts in times.items():
        print(f"{tag:4s} median {1e3 * statistics.median(ts):6.2f} ms   max {1e3 * max(ts):6.2f} ms")
    print(f"{wrong} misclassified out of {cfg.trials * len(MODELS)}")
    return 1 if wrong else 0


if __name__ == "__main__":
    raise SystemExit(main())
