"""Classify random piecewise-polynomial functions and count the outcomes.

Each Ball(N0) result is cross-checked with an explicit witness one level
below N0.
"""
import argparse
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
import random

from padicmontel.diffcalc import iterated_difference
from padicmontel.interp import Polynomial
from padicmontel.montel import PiecewisePolyFn, find_witness, period_group
from padicmontel.padic import coset_rep, enumerate_reps


@dataclass
class SurveyConfig:
    trials: int = 500
    primes: list = field(default_factory=lambda: [2, 3, 5])
    levels: tuple = (-2, 3)
    max_m: int = 3
    block_prob: float = 0.5   # chance that a piece is spread over a whole coarser coset
    seed: int = 0


def random_poly(rng, deg):
    return Polynomial(tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                            for _ in range(rng.randint(0, deg) + 1)))


def random_function(rng, cfg):
    p = rng.choice(cfg.primes)
    level = rng.randint(*cfg.levels)
    m = rng.randint(0, cfg.max_m)
    deg = m + (1 if rng.random() < 0.1 else 0)
    pieces = {}
    for c in rng.sample(enumerate_reps(level - 1, level - 2, p), rng.randint(0, 2)):
        q = random_poly(rng, deg)
        if rng.random() < cfg.block_prob:
            for j in range(p):
                pieces[coset_rep(c + j * Fraction(p) ** (level - 1), level, p)] = q
        else:
            pieces[coset_rep(c, level, p)] = q
    return PiecewisePolyFn(p, level, pieces, random_poly(rng, m)), m


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=SurveyConfig.trials)
    ap.add_argument("--seed", type=int, default=SurveyConfig.seed)
    args = ap.parse_args()
    cfg = SurveyConfig(trials=args.trials, seed=args.seed)
    rng = random.Random(cfg.seed)

    outcomes = Counter()
    drops = Counter()
    for _ in range(cfg.trials):
        f, m = random_function(rng, cfg)
        cls = period_group(f, m)
        outcomes[cls.kind] += 1
        if cls.kind == "Ball":
            drops[f.level - cls.level] += 1
            x, h = find_witness(f, m, cls.level - 1)
            assert iterated_difference(f, h, m + 1, x) != 0
    print("outcomes:", dict(sorted(outcomes.items())))
    print("levels coarsened below N (Ball only):", dict(sorted(drops.items())))


if __name__ == "__main__":
    main()
