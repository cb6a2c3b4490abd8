"""Tabulate Delta_h^{m+1} f(p^{-N(m+1)}) for the nonuniform gallery function.

Compares the observed value against (-1)^(m+1) p^(N(m+1) - N m (m+1)) over a
few steps h of valuation exactly N. The two disagree exactly when some node
x + k h (1 <= k <= m+1) falls back into p^-n + p^n Z_p, which needs
v_p(k) >= N m.
"""
import argparse
from fractions import Fraction
import random

from padicmontel.diffcalc import iterated_difference
from padicmontel.montel import gallery_nonuniform, nonuniform_closed_form
from padicmontel.padic import valuation


def steps(rng, p, N, count):
    out = []
    while len(out) < count:
        u = Fraction(rng.randint(1, 50), rng.randint(1, 50))
        if valuation(u, p) == 0:
            out.append(Fraction(p) ** N * u)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5])
    ap.add_argument("--max-m", type=int, default=3)
    ap.add_argument("--max-N", type=int, default=2)
    ap.add_argument("--steps", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    print(f"{'p':>3} {'m':>3} {'N':>3}  {'closed form':>14}  agree  sample values")
    for p in args.primes:
        for m in range(1, args.max_m + 1):
            f = gallery_nonuniform(p, m)
            for N in range(1, args.max_N + 1):
                x = Fraction(p) ** (-N * (m + 1))
                closed = nonuniform_closed_form(p, m, N)
                vals = [iterated_difference(f, h, m + 1, x) for h in steps(rng, p, N, args.steps)]
                agree = all(v == closed for v in vals)
                shown = ", ".join(str(v) for v in vals[:3])
                print(f"{p:>3} {m:>3} {N:>3}  {str(closed):>14}  {'yes' if agree else 'NO ':5}  {shown}")


if __name__ == "__main__":
    main()
