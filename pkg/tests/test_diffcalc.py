from fractions import Fraction
from itertools import permutations
from math import factorial
import random

import pytest
import sympy
from hypothesis import given, strategies as st

from padicmontel.diffcalc import (djokovic_rhs, djokovic_terms, forward_difference,
                                  iterated_difference, mixed_difference)
from padicmontel.interp import Polynomial

from conftest import rationals

square = Polynomial.monomial(2)
cube = Polynomial.monomial(3)


def const(c):
    return lambda x: Fraction(c)


def ragged(x):
    # deliberately non-polynomial, deterministic
    return Fraction((x.numerator * 7 + x.denominator * 3) % 11, x.denominator % 5 + 1)


def sympy_mixed(expr, t, steps):
    for h in reversed(steps):
        expr = sympy.expand(expr.subs(t, t + h) - expr)
    return expr


def test_forward_difference_examples():
    assert forward_difference(square, 3, 1) == 15
    assert forward_difference(const(5), Fraction(2, 7), 9) == 0
    h = Fraction(-4, 9)
    assert forward_difference(Polynomial.monomial(1), h, 11) == h


def test_iterated_difference_examples():
    assert iterated_difference(square, Fraction(1, 2), 2, Fraction(17, 3)) == Fraction(1, 2)
    # 2! h^2 with h = 3, by the binomial sum f(x) - 2 f(x+3) + f(x+6)
    x = Fraction(5)
    assert iterated_difference(square, 3, 2, x) == x**2 - 2 * (x + 3)**2 + (x + 6)**2 == 18
    for m in range(5):
        assert iterated_difference(Polynomial.monomial(m), Fraction(2, 3), m + 1, Fraction(1, 7)) == 0


def test_iterated_difference_rejects_order_zero():
    with pytest.raises(ValueError):
        iterated_difference(square, 1, 0, 0)


def test_mixed_difference_examples():
    assert mixed_difference(square, [1, 3], 0) == 6
    rng = random.Random(3)
    t = sympy.Symbol("t")
    for _ in range(10):
        xs = [Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(3)]
        expected = sympy_mixed(t**3, t, [sympy.Rational(x.numerator, x.denominator) for x in xs])
        assert expected.free_symbols == set()
        assert mixed_difference(cube, xs, 0) == 6 * xs[0] * xs[1] * xs[2] == Fraction(str(expected))


@given(st.lists(rationals(), min_size=1, max_size=4), rationals(), st.integers(0, 5))
def test_mixed_difference_matches_symbolic(steps, x, d):
    t = sympy.Symbol("t")
    symbolic = sympy_mixed(t**d, t, [sympy.Rational(h.numerator, h.denominator) for h in steps])
    expected = Fraction(str(symbolic.subs(t, sympy.Rational(x.numerator, x.denominator))))
    assert mixed_difference(Polynomial.monomial(d), steps, x) == expected


@given(st.lists(rationals(), min_size=1, max_size=6), rationals())
def test_collapse_equal_steps(steps, x):
    h = steps[0]
    s = len(steps)
    assert mixed_difference(ragged, [h] * s, x) == iterated_difference(ragged, h, s, x)


@given(st.lists(rationals(), min_size=2, max_size=4), rationals(), st.randoms())
def test_step_symmetry(steps, x, rnd):
    perm = steps[:]
    rnd.shuffle(perm)
    assert mixed_difference(ragged, steps, x) == mixed_difference(ragged, perm, x)


def test_step_symmetry_all_permutations():
    steps = [Fraction(1, 2), Fraction(-3), Fraction(5, 7)]
    values = {mixed_difference(ragged, list(pm), Fraction(2, 9)) for pm in permutations(steps)}
    assert len(values) == 1


@given(rationals(), rationals(), rationals())
def test_sum_step_identity(a, b, x):
    lhs = forward_difference(ragged, a + b, x)
    rhs = forward_difference(ragged, a, x) + forward_difference(ragged, b, x) \
        + mixed_difference(ragged, [a, b], x)
    assert lhs == rhs


@pytest.mark.parametrize("d", range(6))
def test_annihilation_threshold(d):
    f = Polynomial.monomial(d)
    for h in [Fraction(1), Fraction(-2, 3), Fraction(9, 4)]:
        for x in [Fraction(0), Fraction(5, 6)]:
            if d >= 1:
                assert iterated_difference(f, h, d, x) == factorial(d) * h**d
            for s in range(1, 8):
                assert (iterated_difference(f, h, s, x) == 0) == (s > d)


def test_djokovic_terms_examples():
    h1, h2, h3 = Fraction(3), Fraction(5, 2), Fraction(-7)
    (t0, t1) = djokovic_terms([h1])
    assert (t1.epsilon, t1.sign, t1.alpha, t1.beta) == ((1,), -1, -h1, h1)
    assert (t0.sign, t0.alpha, t0.beta) == (1, 0, 0)
    last = djokovic_terms([h1, h2])[-1]
    assert (last.epsilon, last.sign, last.alpha, last.beta) == ((1, 1), 1, -(h1 + h2 / 2), h1 + h2)
    terms = djokovic_terms([h1, h2, h3])
    assert len(terms) == 8
    mid = terms[2]
    assert (mid.epsilon, mid.sign, mid.alpha, mid.beta) == ((0, 1, 0), -1, -h2 / 2, h2)


@given(st.lists(rationals(), min_size=1, max_size=4))
def test_djokovic_terms_recomputable(steps):
    for term in djokovic_terms(steps):
        assert term.alpha == -sum((Fraction(e) * h / r for r, (e, h) in
                                   enumerate(zip(term.epsilon, steps), 1)), Fraction(0))
        assert term.beta == sum((e * h for e, h in zip(term.epsilon, steps)), Fraction(0))
        assert term.sign == (-1) ** sum(term.epsilon)


def test_djokovic_rhs_examples():
    assert djokovic_rhs(const(4), [Fraction(1), Fraction(2, 3)], Fraction(5)) == 0
    # s = 1: -Delta_{-h}f(x+h) = f(x+h) - f(x)
    for h, x in [(Fraction(2), Fraction(1, 3)), (Fraction(-5, 4), Fraction(7))]:
        assert djokovic_rhs(ragged, [h], x) == ragged(x + h) - ragged(x)
    rng = random.Random(11)
    for _ in range(10):
        h1, h2 = (Fraction(rng.randint(-30, 30), rng.randint(1, 8)) for _ in range(2))
        x = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        assert djokovic_rhs(square, [h1, h2], x) == 2 * h1 * h2 == mixed_difference(square, [h1, h2], x)


@given(st.lists(rationals(), min_size=1, max_size=4), rationals())
def test_djokovic_identity(steps, x):
    assert mixed_difference(ragged, steps, x) == djokovic_rhs(ragged, steps, x)


def test_zero_steps_allowed():
    assert mixed_difference(ragged, [Fraction(0), Fraction(3)], 1) == 0
    assert iterated_difference(ragged, 0, 3, Fraction(1, 2)) == 0
