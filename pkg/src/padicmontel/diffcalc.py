"""Forward, iterated and mixed difference operators on rational oracles.

A function oracle is any callable mapping a ``Fraction`` to a ``Fraction``.
The iterated difference uses the closed binomial sum, the mixed difference
uses recursion; their agreement on equal steps is checked by the tests.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

from .padic import as_rational


def forward_difference(f, h, x):
    h, x = as_rational(h), as_rational(x)
    return f(x + h) - f(x)


def iterated_difference(f, h, s, x):
    """sum_{k=0}^{s} C(s,k) (-1)^(s-k) f(x + k h)."""
    if s < 1:
        raise ValueError(f"order must be >= 1, got {s}")
    h, x = as_rational(h), as_rational(x)
    total = Fraction(0)
    for k in range(s + 1):
        c = comb(s, k)
        total += (c if (s - k) % 2 == 0 else -c) * f(x + k * h)
    return total


def mixed_difference(f, steps, x):
    """Delta_{h1} (Delta_{h2 ... hs} f)(x), evaluated recursively."""
    steps = [as_rational(h) for h in steps]
    if not steps:
        raise ValueError("need at least one step")
    x = as_rational(x)
    h, rest = steps[0], steps[1:]
    if not rest:
        return f(x + h) - f(x)
    return mixed_difference(f, rest, x + h) - mixed_difference(f, rest, x)


@dataclass(frozen=True)
class DjokovicTerm:
    epsilon: tuple
    sign: int
    alpha: Fraction
    beta: Fraction


def djokovic_terms(steps):
    """All 2^s terms of Djokovic's expansion, epsilon counted in binary.

    alpha = -sum eps_r h_r / r and beta = sum eps_r h_r (r is 1-based).
    """
    steps = [as_rational(h) for h in steps]
    terms = []
    for eps in product((0, 1), repeat=len(steps)):
        alpha = -sum((h / r for r, (e, h) in enumerate(zip(eps, steps), 1) if e),
                     Fraction(0))
        beta = sum((h for e, h in zip(eps, steps) if e), Fraction(0))
        terms.append(DjokovicTerm(eps, -1 if sum(eps) % 2 else 1, alpha, beta))
    return terms


def djokovic_rhs(f, steps, x):
    """Right-hand side of Djokovic's identity for Delta_{h1 ... hs} f(x)."""
    x = as_rational(x)
    s = len(steps)
    return sum((t.sign * iterated_difference(f, t.alpha, s, x + t.beta)
                for t in djokovic_terms(steps)), Fraction(0))
