"""Constructive decomposition of uniformly locally polynomial functions.

If Delta_h^{m+1} f(x) = 0 for every x and every h in p^N Z_p, then near any
base point x0

    f(x0 + z) = A0 + A_1(z) + ... + A_m(z)    for z in p^Nphi Z_p,

where A_k is the diagonal of a symmetric k-additive map A^k. The maps are
extracted top-down: A^j = (1/j!) Delta_{z1...zj} f_j(0), then f_{j-1} =
f_j - A_j on a ball shrunk by the step-division factor max_{t<=j+1} |1/t|_p.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .diffcalc import iterated_difference, mixed_difference
from .errors import DomainError, PreconditionViolated
from .padic import as_rational, check_prime, format_rational, valuation


def step_factor_exponent(k, p):
    """e_k = max_{1<=t<=k} v_p(t), i.e. max |1/t|_p = p^e_k."""
    return max(valuation(t, p) for t in range(1, k + 1))


def phi_exponent(N, m, p):
    """Level of the ball on which the decomposition is guaranteed."""
    check_prime(p)
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    return N + sum(step_factor_exponent(k, p) for k in range(2, m + 2))


class TranslatedOracle:
    def __init__(self, f, x0):
        self.f = f
        self.x0 = as_rational(x0)

    def __call__(self, x):
        return self.f(self.x0 + as_rational(x))

    def __repr__(self):
        return f"TranslatedOracle({self.f!r}, {self.x0})"


def translate_oracle(f, x0):
    """g(x) = f(x0 + x); translation commutes with every Delta_h."""
    return TranslatedOracle(f, x0)


def multiadditive_component(f, args):
    """(1/k!) Delta_{z1...zk} f(0)."""
    args = [as_rational(z) for z in args]
    if not args:
        raise ValueError("need at least one argument")
    return mixed_difference(f, args, 0) / factorial(len(args))


def _check_ball(z, level, p, what):
    if valuation(z, p) < level:
        raise DomainError(f"{what}: {z} is outside p^{level} Z_{p}")


class MultiadditiveMap:
    """A^k and its diagonal A_k, evaluated on demand from a peeled oracle."""

    def __init__(self, k, source, p, stage_level):
        self.k = k
        self.p = p
        self.source = source
        self.stage_level = stage_level
        self.valid_level = stage_level

    def __call__(self, *args):
        if len(args) != self.k:
            raise ValueError(f"A^{self.k} takes {self.k} arguments")
        for z in args:
            _check_ball(as_rational(z), self.valid_level, self.p, f"A^{self.k}")
        return multiadditive_component(self.source, args)

    def diagonal(self, z):
        z = as_rational(z)
        _check_ball(z, self.valid_level, self.p, f"A_{self.k}")
        return self._diagonal(z)

    def _diagonal(self, z):
        # equal-step mixed difference collapses to the binomial sum
        _check_ball(z, self.stage_level, self.p, f"A_{self.k}")
        return iterated_difference(self.source, z, self.k, 0) / factorial(self.k)


class PeeledOracle:
    """f_prev - A_j, defined only on the stage ball."""

    def __init__(self, prev, component, level):
        self.prev = prev
        self.component = component
        self.level = level
        self._memo = {}

    def __call__(self, x):
        x = as_rational(x)
        try:
            return self._memo[x]
        except KeyError:
            pass
        _check_ball(x, self.level, self.component.p, "peeled oracle")
        y = self.prev(x) - self.component._diagonal(x)
        self._memo[x] = y
        return y


@dataclass
class FrechetDecomposition:
    p: int
    m: int
    x0: Fraction
    input_level: int
    valid_level: int
    A0: Fraction
    components: list = field(default_factory=list)  # components[k-1] is A^k
    stage_levels: list = field(default_factory=list)  # (j, ball level) per stage

    def component(self, k):
        return self.components[k - 1]

    def diagonal(self, k, z):
        return self.components[k - 1].diagonal(z)

    def __call__(self, z):
        """A0 + sum_k A_k(z), i.e. f(x0 + z) on the valid ball."""
        z = as_rational(z)
        _check_ball(z, self.valid_level, self.p, "decomposition")
        return self.A0 + sum((c.diagonal(z) for c in self.components), Fraction(0))

    def to_json(self, sample_zs=()):
        return {
            "p": self.p,
            "m": self.m,
            "x0": format_rational(self.x0),
            "input_level": self.input_level,
            "valid_level": self.valid_level,
            "stage_levels": [{"degree": j, "level": lv} for j, lv in self.stage_levels],
            "A0": format_rational(self.A0),
            "diagonals": [
                {"z": format_rational(z),
                 "values": [format_rational(c.diagonal(z)) for c in self.components]}
                for z in sample_zs],
        }


def default_precondition_grid(x0, N, p):
    x0 = as_rational(x0)
    ball = Fraction(p) ** N
    xs = [x0, x0 + ball, x0 + ball / p, Fraction(0), ball / p]
    hs = [ball, -ball, ball * p]
    return [(x, h) for x in xs for h in hs]


def check_annihilation(f, m, N, p, samples):
    """Raise PreconditionViolated at the first (x, h) with Delta_h^{m+1} f(x) != 0."""
    for x, h in samples:
        x, h = as_rational(x), as_rational(h)
        if h == 0:
            continue
        if valuation(h, p) < N:
            raise DomainError(f"sample step {h} is outside p^{N} Z_{p}")
        d = iterated_difference(f, h, m + 1, x)
        if d != 0:
            raise PreconditionViolated(
                f"Delta_{h}^{m + 1} f({x}) = {d} != 0", witness=(x, h))


def frechet_decompose(f, x0, m, N, p, spot_samples=()):
    check_prime(p)
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    x0 = as_rational(x0)
    check_annihilation(f, m, N, p,
                       list(spot_samples) + default_precondition_grid(x0, N, p))

    current = translate_oracle(f, x0)
    level = N
    components = []
    stages = []
    for j in range(m, 0, -1):
        level += step_factor_exponent(j + 1, p)
        comp = MultiadditiveMap(j, current, p, level)
        components.append(comp)
        stages.append((j, level))
        current = PeeledOracle(current, comp, level)
    A0 = current(0)

    valid = phi_exponent(N, m, p)
    assert level == valid
    for comp in components:
        comp.valid_level = valid
    components.reverse()
    return FrechetDecomposition(p, m, x0, N, valid, A0, components, stages)


@dataclass
class DecompositionReport:
    zs: list
    residuals: list

    @property
    def valid(self):
        return all(r == 0 for r in self.residuals)

    def to_json(self):
        return {"valid": self.valid,
                "samples": [{"z": format_rational(z), "residual": format_rational(r)}
                            for z, r in zip(self.zs, self.residuals)]}


def verify_decomposition(f, d, sample_zs):
    """Residuals f(x0 + z) - (A0 + sum A_k(z)); all zero for a correct d."""
    zs = [as_rational(z) for z in sample_zs]
    for z in zs:
        _check_ball(z, d.valid_level, d.p, "verification sample")
    return DecompositionReport(zs, [f(d.x0 + z) - d(z) for z in zs])
