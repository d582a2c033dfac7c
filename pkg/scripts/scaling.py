"""Time the largest diagram as atom dimensions grow.

    python3 scripts/scaling.py --condition F17 --max-dim 4
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from braidcoh.conditions import REGISTRY, build, lookup
from braidcoh.diagram import check_commutes, max_dimension
from braidcoh.expr import Atom
from braidcoh.model import GradedModel


@dataclass
class ScalingConfig:
    condition: str = "F17"
    max_dim: int = 4
    repeats: int = 3


def run(cfg: ScalingConfig) -> list[tuple[int, int, float, str]]:
    name = lookup(cfg.condition)
    d = build(name, [Atom(a) for a in "ABCD"[: REGISTRY[name].arity]])
    rows = []
    for dim in range(1, cfg.max_dim + 1):
        asg = {a: tuple(range(dim)) for a in "ABCD"}
        best = float("inf")
        for _ in range(cfg.repeats):
            model = GradedModel()  # fresh memo each time
            t0 = time.perf_counter()
            report = check_commutes(d, model, asg)
            best = min(best, time.perf_counter() - t0)
        rows.append((dim, max_dimension(d, GradedModel(), asg), best, report.verdict))
    return rows


def main() -> None:
    p = argparse.ArgumentParser()
    p.add_argument("--condition", default="F17")
    p.add_argument("--max-dim", type=int, default=4)
    a = p.parse_args()
    print(f"{'dim':>3} {'matrix':>7} {'seconds':>9}  verdict")
    for dim, size, secs, verdict in run(ScalingConfig(a.condition, a.max_dim)):
        print(f"{dim:>3} {size:>7} {secs:>9.4f}  {verdict}")


if __name__ == "__main__":
    main()
