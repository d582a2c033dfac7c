"""Run the whole registry over many random degree assignments.

    python3 scripts/suite_sweep.py --trials 50 --max-dim 2 --out sweep.json
"""

from __future__ import annotations

import argparse
import json
import random
from collections import Counter
from dataclasses import asdict, dataclass

from braidcoh.conditions import DEFAULT_ATOMS, REGISTRY, run_suite
from braidcoh.model import GradedModel


@dataclass
class SweepConfig:
    trials: int = 50
    max_dim: int = 2
    degrees: tuple[int, ...] = (0, 1, 2)
    seed: int = 0
    symmetric: bool = False


def sweep(cfg: SweepConfig) -> dict:
    rng = random.Random(cfg.seed)
    model = GradedModel(specialize_q=1 if cfg.symmetric else None)
    statuses: dict[str, Counter] = {n.value: Counter() for n in REGISTRY}
    seconds = []
    for _ in range(cfg.trials):
        asg = {a: tuple(rng.choice(cfg.degrees) for _ in range(rng.randint(0, cfg.max_dim))) for a in DEFAULT_ATOMS}
        report = run_suite(model, asg)
        seconds.append(report.seconds)
        for r in report.results:
            statuses[r.name][r.status] += 1
    return {
        "config": asdict(cfg),
        "statuses": {k: dict(v) for k, v in statuses.items()},
        "mean_seconds": sum(seconds) / len(seconds),
        "max_seconds": max(seconds),
    }


def main() -> None:
    p = argparse.ArgumentParser()
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--max-dim", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--symmetric", action="store_true")
    p.add_argument("--out")
    a = p.parse_args()
    result = sweep(SweepConfig(a.trials, a.max_dim, seed=a.seed, symmetric=a.symmetric))
    for name, counts in result["statuses"].items():
        print(f"{name:<16} {counts}")
    print(f"mean {result['mean_seconds']:.3f} s, max {result['max_seconds']:.3f} s per suite")
    if a.out:
        with open(a.out, "w", encoding="utf-8") as fh:
            json.dump(result, fh, indent=2)


if __name__ == "__main__":
    main()
