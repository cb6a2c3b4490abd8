"""Piecewise-polynomial functions on Q_p and their period groups.

A ``PiecewisePolyFn`` at level N assigns a polynomial to finitely many cosets
s + p^N Z_p and a default polynomial to all the others. For such functions the
group P_m(f) = {h : Delta_h^{m+1} f = 0} is decided exactly: it is {0}, a ball
p^N0 Z_p, or all of Q_p.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import inf

from .diffcalc import iterated_difference
from .errors import ReconstructionFailed
from .interp import Polynomial, lagrange_interpolate, poly_eval
from .padic import as_rational, check_prime, coset_rep, valuation


@dataclass(frozen=True)
class PiecewisePolyFn:
    p: int
    level: int
    pieces: dict = field(default_factory=dict)
    default: Polynomial = field(default_factory=Polynomial)

    def __post_init__(self):
        check_prime(self.p)
        pieces = {}
        for rep, poly in self.pieces.items():
            rep = as_rational(rep)
            canon = coset_rep(rep, self.level, self.p)
            if canon != rep:
                raise ValueError(
                    f"piece key {rep} is not canonical at level {self.level}; "
                    f"use {canon}")
            assert canon not in pieces
            pieces[rep] = poly
        object.__setattr__(self, "pieces", pieces)

    def __call__(self, x):
        return evaluate_piecewise(self, x)

    def piece_at(self, x):
        return self.pieces.get(coset_rep(x, self.level, self.p), self.default)

    def nondefault_pieces(self):
        """Pieces whose polynomial differs from the default, keyed by rep."""
        return {s: q for s, q in self.pieces.items() if q != self.default}

    @property
    def max_degree(self):
        return max([self.default.degree] + [q.degree for q in self.pieces.values()])


def evaluate_piecewise(f, x):
    x = as_rational(x)
    return poly_eval(f.piece_at(x), x)


@dataclass(frozen=True)
class PeriodGroupClass:
    """One of Zero ({0}), Ball(N0) (p^N0 Z_p) or Whole (Q_p)."""

    kind: str
    level: int = None

    def __post_init__(self):
        assert self.kind in ("Zero", "Ball", "Whole")
        assert (self.level is not None) == (self.kind == "Ball")

    def __str__(self):
        return f"Ball({self.level})" if self.kind == "Ball" else self.kind

    def contains(self, h, p):
        if self.kind == "Whole":
            return True
        if self.kind == "Zero":
            return as_rational(h) == 0
        return valuation(h, p) >= self.level


ZERO = PeriodGroupClass("Zero")
WHOLE = PeriodGroupClass("Whole")


def Ball(level):
    return PeriodGroupClass("Ball", level)


def uniform_at_level(f, level):
    """True iff f is a single polynomial on every coset of p^level Z_p.

    Only cosets meeting a non-default piece need checking; such a coset is
    uniform iff all of its p^(N - level) subcosets carry that same piece.
    """
    if level >= f.level:
        return True
    groups = {}
    for s, q in f.nondefault_pieces().items():
        groups.setdefault(coset_rep(s, level, f.p), []).append(q)
    need = f.p ** (f.level - level)
    return all(len(qs) == need and all(q == qs[0] for q in qs)
               for qs in groups.values())


def period_group(f, m):
    """Exact classification of P_m(f)."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    if f.max_degree > m:
        return ZERO
    nondefault = f.nondefault_pieces()
    if not nondefault:
        return WHOLE
    level = f.level
    # terminates: once p^(N - level) exceeds the piece count a coset mixes in
    # default subcosets
    while uniform_at_level(f, level - 1):
        level -= 1
    return Ball(level)


def find_witness(f, m, level):
    """Search (x, h) with valuation(h) = level and Delta_h^{m+1} f(x) != 0.

    Steps are p^level * u for u = 1..p-1. Points x range over every level-N
    subcoset of the level-``level`` cosets that meet a non-default piece, with
    m+1 points per subcoset; on a subcoset the difference is a polynomial in x
    of degree <= m, so a nonzero one cannot vanish at all of them. Returns None
    when no witness exists (the classification at ``level`` is then uniform).
    """
    p, N = f.p, f.level
    outer = sorted({coset_rep(s, level, p) for s in f.nondefault_pieces()})
    if f.max_degree > m and not outer:
        outer = [Fraction(0)]
    step = Fraction(p) ** N
    base = Fraction(p) ** level
    npts = max(m, f.max_degree) + 1
    for u in range(1, p):
        h = base * u
        for s in outer:
            for j in range(p ** max(N - level, 0)):
                sub = s + j * base if N > level else s
                for k in range(npts):
                    x = sub + k * step
                    if iterated_difference(f, h, m + 1, x) != 0:
                        return x, h
    return None


def reconstruct_coset_polynomial(f, x0, h0, m, verify_extra=0):
    """Interpolate f on x0 + k h0 (k <= m) and check the next nodes agree."""
    x0, h0 = as_rational(x0), as_rational(h0)
    if h0 == 0:
        raise ValueError("h0 must be nonzero")
    nodes = [(x0 + k * h0, f(x0 + k * h0)) for k in range(m + 1)]
    q = lagrange_interpolate(nodes, m)
    for k in range(m + 1, m + 1 + verify_extra):
        x = x0 + k * h0
        fx = f(x)
        if fx != poly_eval(q, x):
            raise ReconstructionFailed(
                f"f({x}) = {fx} but the interpolant gives {poly_eval(q, x)}",
                witness=x)
    return q


@dataclass
class MontelCertificate:
    h0: Fraction
    m: int
    level: int
    verified_cosets: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def valid(self):
        return not self.failures


def montel_certificate(f, h0, m, verify_extra=None):
    """Check that f agrees with one polynomial of degree <= m on each coset of
    p^v(h0) Z_p touched by its pieces, rebuilding each polynomial from the
    orbit x + h0 N."""
    h0 = as_rational(h0)
    if h0 == 0:
        raise ValueError("h0 must be nonzero")
    p = f.p
    N0 = valuation(h0, p)
    extra = m + 2 if verify_extra is None else verify_extra
    cert = MontelCertificate(h0, m, N0)

    starts = sorted(f.pieces) + [_default_point(f)]
    seen = set()
    for x in starts:
        rep = coset_rep(x, N0, p)
        if rep in seen:
            continue
        seen.add(rep)
        try:
            q = reconstruct_coset_polynomial(f, x, h0, m, extra)
        except ReconstructionFailed as e:
            cert.failures.append(e.witness)
            continue
        # every level-N subcoset of x + p^N0 Z_p must carry exactly q
        bad = _mismatched_subcoset(f, x, N0, q)
        if bad is not None:
            cert.failures.append(bad)
            continue
        cert.verified_cosets.append((rep, q, m + 1 + extra))
    return cert


def _default_point(f):
    """A point in some coset carrying the default polynomial.

    p^(N-1-k) for k = 0, 1, ... lie in pairwise distinct cosets, and only
    finitely many cosets are listed.
    """
    p, N = f.p, f.level
    k = 0
    while coset_rep(Fraction(p) ** (N - 1 - k), N, p) in f.pieces:
        k += 1
    return Fraction(p) ** (N - 1 - k)


def _mismatched_subcoset(f, x, N0, q):
    p, N = f.p, f.level
    if N0 >= N:
        return None if f.piece_at(x) == q else x
    # subcosets listed explicitly must match; unlisted ones inherit the default
    outer = coset_rep(x, N0, p)
    listed = [s for s in f.pieces if coset_rep(s, N0, p) == outer]
    for s in listed:
        if f.pieces[s] != q:
            return s
    if len(listed) < p ** (N - N0) and f.default != q:
        j = 0
        while True:
            y = x + j * Fraction(p) ** N0
            if coset_rep(y, N, p) not in f.pieces:
                return y
            j += 1
    return None


def gallery_jacobi(p, N):
    """Indicator of p^N Z_p: its period group is exactly p^N Z_p."""
    check_prime(p)
    return PiecewisePolyFn(p, N, {Fraction(0): Polynomial.constant(1)},
                           Polynomial())


class NonuniformPolynomial:
    """f(x) = p^n x^m on p^-n + p^n Z_p (n >= 0), and 0 elsewhere.

    Locally a polynomial of degree <= m everywhere, yet P_m(f) = {0}.
    """

    def __init__(self, p, m):
        if m < 1:
            raise ValueError(f"m must be >= 1, got {m}")
        self.p = check_prime(p)
        self.m = m

    def branch(self, x):
        """The n with x in p^-n + p^n Z_p, or None."""
        x = as_rational(x)
        p = self.p
        if valuation(x - 1, p) >= 0:
            return 0
        v = valuation(x, p)
        if v != inf and v < 0:
            n = -v
            if valuation(x - Fraction(1, p ** n), p) >= n:
                return n
        return None

    def __call__(self, x):
        x = as_rational(x)
        n = self.branch(x)
        if n is None:
            return Fraction(0)
        return Fraction(self.p) ** n * x ** self.m

    def __repr__(self):
        return f"NonuniformPolynomial(p={self.p}, m={self.m})"


def gallery_nonuniform(p, m):
    return NonuniformPolynomial(p, m)


def nonuniform_closed_form(p, m, N):
    """(-1)^(m+1) p^(N(m+1) - N m (m+1)), the value claimed for
    Delta_h^{m+1} f(p^{-N(m+1)}) when valuation(h) = N."""
    sign = -1 if (m + 1) % 2 else 1
    return sign * Fraction(p) ** (N * (m + 1) - N * m * (m + 1))
