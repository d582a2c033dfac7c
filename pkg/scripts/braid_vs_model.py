"""How often does the graded model separate braid-unequal product words?

Every word is an endomorphism of the left-nested power x^n: a sequence of
block crossings, each conjugated by associators into place. For random pairs
we count how many random assignments of x the model needs before the two
matrices differ. Braid-equal pairs must stay matrix-equal throughout.

    python3 scripts/braid_vs_model.py --pairs 200 --assignments 8
"""

from __future__ import annotations

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from braidcoh.braid import braid_equal, power, strict_image
from braidcoh.expr import AlphaTimes, Atom, Comp, GammaTimes, Id, Inv, Obj, Prod, ProdM, compose_all, dom, cod
from braidcoh.model import GradedModel


@dataclass
class PairConfig:
    pairs: int = 200
    assignments: int = 8
    max_strands: int = 4
    max_len: int = 6
    degrees: tuple[int, int] = (-1, 2)
    seed: int = 0


def to_left(o: Obj):
    """Structural map from ``o`` to its left-nested bracketing."""
    if not isinstance(o, Prod):
        return Id(o), o
    f, left = to_left(o.left)
    g, right = to_left(o.right)
    h, res = _absorb(left, right)
    return Comp(ProdM(f, g), h), res


def _absorb(left: Obj, right: Obj):
    """``left * right`` to left-nested form, both factors already left-nested."""
    if not isinstance(right, Prod):
        return Id(Prod(left, right)), Prod(left, right)
    h, res = _absorb(left, right.left)
    step = Inv(AlphaTimes(left, right.left, right.right))
    return Comp(step, ProdM(h, Id(right.right))), Prod(res, right.right)


def conjugate(step):
    """Put ``step`` between reassociations so that it acts on left-nested powers."""
    into, _ = to_left(dom(step))
    out, _ = to_left(cod(step))
    return compose_all(Inv(into), step, out)


def crossing(rng: random.Random, n: int, x: Atom):
    a = rng.randint(1, n - 1)
    b = rng.randint(1, n - a)
    pre = rng.randint(0, n - a - b)
    rest = n - pre - a - b
    core = GammaTimes(power(x, a), power(x, b))
    if rng.random() < 0.5:
        core = Inv(GammaTimes(power(x, b), power(x, a)))
    if pre:
        core = ProdM(Id(power(x, pre)), core)
    if rest:
        core = ProdM(core, Id(power(x, rest)))
    return conjugate(core)


def random_word(rng: random.Random, n: int, length: int, x: Atom):
    return compose_all(*(crossing(rng, n, x) for _ in range(length)))


def run(cfg: PairConfig) -> Counter:
    rng = random.Random(cfg.seed)
    x = Atom("x")
    model = GradedModel()
    stats: Counter = Counter()
    lo, hi = cfg.degrees
    for _ in range(cfg.pairs):
        n = rng.randint(2, cfg.max_strands)
        m1 = random_word(rng, n, rng.randint(1, cfg.max_len), x)
        if rng.random() < 0.3:
            # same braid, different word: append a crossing and its inverse
            c = crossing(rng, n, x)
            m2 = compose_all(m1, c, Inv(c))
        else:
            m2 = random_word(rng, n, rng.randint(1, cfg.max_len), x)
        eq = braid_equal(strict_image(m1), strict_image(m2))
        first = None
        for k in range(cfg.assignments):
            asg = {"x": tuple(rng.randint(lo, hi) for _ in range(rng.randint(1, 2)))}
            same = model.interpret_morphism(m1, asg) == model.interpret_morphism(m2, asg)
            if eq and not same:
                raise AssertionError("braid-equal words evaluated differently")
            if not same and first is None:
                first = k + 1
        if eq:
            stats["braid-equal"] += 1
        elif first is None:
            stats["unequal, never separated"] += 1
        else:
            stats[f"unequal, separated at {first}"] += 1
    return stats


def main() -> None:
    p = argparse.ArgumentParser()
    p.add_argument("--pairs", type=int, default=200)
    p.add_argument("--assignments", type=int, default=8)
    p.add_argument("--max-strands", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    a = p.parse_args()
    stats = run(PairConfig(a.pairs, a.assignments, a.max_strands, seed=a.seed))
    for k in sorted(stats):
        print(f"{k:<30} {stats[k]}")


if __name__ == "__main__":
    main()
