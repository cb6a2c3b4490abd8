"""Exact p-adic valuation, digits and coset representatives on Q inside Q_p.

Points of Q_p are represented by ``fractions.Fraction``; the valuation of zero
is ``math.inf`` so that ``valuation(x) >= N`` reads as ball membership.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
import math

from .errors import ConfigurationError, ParseError, RangeError

INF = math.inf

_MAX_PRIME = 2**63


@lru_cache(maxsize=None)
def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_prime(p):
    """Return ``p`` if it is a machine-word prime, else raise ConfigurationError."""
    if isinstance(p, bool) or not isinstance(p, int):
        raise ConfigurationError(f"prime must be an integer, got {p!r}")
    if p >= _MAX_PRIME or not _is_prime(p):
        raise ConfigurationError(f"{p} is not a supported prime")
    return p


def as_rational(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    return Fraction(x)


def _int_valuation(n, p):
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def valuation(x, p):
    """p-adic valuation of a rational; ``inf`` for zero."""
    check_prime(p)
    x = as_rational(x)
    if x == 0:
        return INF
    return _int_valuation(x.numerator, p) - _int_valuation(x.denominator, p)


def norm(x, p):
    """|x|_p as an exact rational."""
    v = valuation(x, p)
    if v == INF:
        return Fraction(0)
    return Fraction(p) ** -v


def in_ball(x, N, p):
    """True iff x lies in p^N Z_p."""
    return valuation(x, p) >= N


def digit_expansion(x, lo, hi, p):
    """Digits a_lo, ..., a_{hi-1} with x - sum a_i p^i in p^hi Z_p."""
    check_prime(p)
    x = as_rational(x)
    if lo > hi:
        raise RangeError(f"empty window: lo={lo} > hi={hi}")
    if x == 0:
        return [0] * (hi - lo)
    v = valuation(x, p)
    if lo > v:
        raise RangeError(f"window starts at {lo} above the valuation {v} of {x}")
    digits = [0] * (min(v, hi) - lo)
    # unit part u = a/b with p dividing neither; peel one digit per step
    u = x / Fraction(p) ** v
    a, b = u.numerator, u.denominator
    binv = pow(b, -1, p)
    for _ in range(max(hi - v, 0)):
        d = (a * binv) % p
        digits.append(d)
        a = (a - d * b) // p
    return digits


def coset_rep(x, N, p):
    """Canonical representative of x + p^N Z_p: its digits strictly below N."""
    x = as_rational(x)
    v = valuation(x, p)
    if v >= N:
        return Fraction(0)
    digits = digit_expansion(x, v, N, p)
    return sum((Fraction(d) * Fraction(p) ** (v + i) for i, d in enumerate(digits)),
               Fraction(0))


def enumerate_reps(N, vmin, p):
    """All p^(N - vmin) canonical representatives sum_{i=vmin}^{N-1} a_i p^i.

    Ordered lexicographically on the digit vector (a_vmin, ..., a_{N-1}).
    """
    check_prime(p)
    if vmin > N:
        raise RangeError(f"vmin={vmin} exceeds level N={N}")
    powers = [Fraction(p) ** i for i in range(vmin, N)]
    return [sum((d * w for d, w in zip(digits, powers)), Fraction(0))
            for digits in product(range(p), repeat=N - vmin)]


def parse_rational(text):
    """Parse ``"a/b"`` or ``"a"``; accepts ASCII '-' or Unicode minus."""
    if not isinstance(text, str):
        raise ParseError(f"expected a rational string, got {text!r}")
    s = text.strip().replace("−", "-")
    num, sep, den = s.partition("/")
    try:
        if not _is_decimal_int(num) or (sep and not _is_decimal_int(den, signed=False)):
            raise ValueError
        return Fraction(int(num), int(den) if sep else 1)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"malformed rational {text!r}") from None


def _is_decimal_int(s, signed=True):
    if signed and s[:1] == "-":
        s = s[1:]
    return s.isdigit() and s.isascii()


def format_rational(x):
    """Canonical reduced string form, e.g. ``"-3/4"`` or ``"5"``."""
    return str(as_rational(x))


@dataclass(frozen=True)
class PAdicScalar:
    """A rational viewed as a point of Q_p."""

    value: Fraction
    prime: int

    def __post_init__(self):
        check_prime(self.prime)
        object.__setattr__(self, "value", as_rational(self.value))

    @property
    def valuation(self):
        return valuation(self.value, self.prime)

    @property
    def norm(self):
        return norm(self.value, self.prime)

    def in_ball(self, N):
        return self.valuation >= N

    def coset_rep(self, N):
        return PAdicScalar(coset_rep(self.value, N, self.prime), self.prime)

    def digits(self, lo, hi):
        return digit_expansion(self.value, lo, hi, self.prime)

    def _coerce(self, other):
        if isinstance(other, PAdicScalar):
            if other.prime != self.prime:
                raise ConfigurationError("mixed primes")
            return other.value
        return as_rational(other)

    def __add__(self, other):
        return PAdicScalar(self.value + self._coerce(other), self.prime)

    __radd__ = __add__

    def __sub__(self, other):
        return PAdicScalar(self.value - self._coerce(other), self.prime)

    def __rsub__(self, other):
        return PAdicScalar(self._coerce(other) - self.value, self.prime)

    def __mul__(self, other):
        return PAdicScalar(self.value * self._coerce(other), self.prime)

    __rmul__ = __mul__

    def __neg__(self):
        return PAdicScalar(-self.value, self.prime)

    def __str__(self):
        return format_rational(self.value)
