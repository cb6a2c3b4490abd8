"""Exact polynomials over Q and Newton-form Lagrange interpolation."""
from dataclasses import dataclass
from fractions import Fraction
from math import comb, inf

from .errors import DegenerateNodesError, ParseError
from .padic import as_rational, format_rational, parse_rational


@dataclass(frozen=True)
class Polynomial:
    """Ascending coefficients; the zero polynomial has no coefficients."""

    coeffs: tuple = ()

    def __post_init__(self):
        cs = [as_rational(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, d, c=1):
        return cls((0,) * d + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else -inf

    def __call__(self, x):
        return poly_eval(self, x)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Polynomial(tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other):
        return self + other.scale(-1)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    def scale(self, c):
        c = as_rational(c)
        return Polynomial(tuple(c * a for a in self.coeffs))

    def to_json(self):
        return {"coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj, location="coeffs"):
        if not isinstance(obj, dict) or not isinstance(obj.get("coeffs"), list):
            raise ParseError("expected an object with a 'coeffs' array", location)
        cs = []
        for i, c in enumerate(obj["coeffs"]):
            try:
                cs.append(parse_rational(c))
            except ParseError as e:
                raise ParseError(str(e), f"{location}.coeffs[{i}]") from None
        return cls(tuple(cs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{format_rational(c)}{'*' + mono if mono else ''}")
        return " + ".join(reversed(terms)).replace("+ -", "- ")


def poly_eval(q, x):
    x = as_rational(x)
    acc = Fraction(0)
    for c in reversed(q.coeffs):
        acc = acc * x + c
    return acc


def lagrange_interpolate(nodes, m):
    """The unique polynomial of degree <= m through the m+1 given (x, y) nodes.

    Built with Newton divided differences, then expanded to monomial form.
    """
    nodes = [(as_rational(x), as_rational(y)) for x, y in nodes]
    if len(nodes) != m + 1:
        raise ValueError(f"need exactly {m + 1} nodes for degree {m}, got {len(nodes)}")
    xs = [x for x, _ in nodes]
    if len(set(xs)) != len(xs):
        raise DegenerateNodesError("interpolation nodes must be pairwise distinct")
    table = [y for _, y in nodes]
    newton = [table[0]]
    for j in range(1, len(xs)):
        table = [(table[i + 1] - table[i]) / (xs[i + j] - xs[i])
                 for i in range(len(table) - 1)]
        newton.append(table[0])
    # Horner in Newton form: c_0 + (t - x_0)(c_1 + (t - x_1)(...))
    result = Polynomial()
    for c, x in zip(reversed(newton), reversed(xs)):
        result = result * Polynomial((-x, 1)) + Polynomial.constant(c)
    return result


def poly_shift(q, c):
    """r(t) = q(t + c), by binomial re-expansion."""
    c = as_rational(c)
    out = [Fraction(0)] * len(q.coeffs)
    for k, a in enumerate(q.coeffs):
        for j in range(k + 1):
            out[j] += a * comb(k, j) * c ** (k - j)
    return Polynomial(tuple(out))
