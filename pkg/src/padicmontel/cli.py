"""Command-line front end.

Exit codes: 0 success, 1 a check failed (invalid certificate, failed
reconstruction, nonzero residual, identity mismatch), 2 usage or parse error.
"""
import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import diffcalc, frechet, montel
from .errors import PadicError, ParseError, PreconditionViolated, ReconstructionFailed
from .fileio import function_to_json, load_function_file
from .interp import Polynomial
from .padic import check_prime, enumerate_reps, format_rational, parse_rational

DEFAULT_SEED = 0

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class Report:
    command: list
    results: dict = field(default_factory=dict)
    lines: list = field(default_factory=list)

    def render(self, machine=False):
        if machine:
            return json.dumps({"command": self.command, "results": self.results},
                              indent=2) + "\n"
        return "".join(line + "\n" for line in self.lines)


def _rational(text):
    try:
        return parse_rational(text)
    except ParseError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _seed(text):
    n = int(text)
    if not 0 <= n < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return n


def _witness_json(w):
    if w is None:
        return None
    x, h = w
    return {"x": format_rational(x), "h": format_rational(h)}


def cmd_period(args, report):
    f = load_function_file(args.file)
    cls = montel.period_group(f, args.m)
    witness = None
    if cls.kind == "Ball":
        witness = montel.find_witness(f, args.m, cls.level - 1)
    report.results.update({
        "p": f.p, "level": f.level, "m": args.m,
        "classification": cls.kind,
        "N0": cls.level,
        "witness": _witness_json(witness),
    })
    report.lines.append(f"classification: {cls}")
    if witness is not None:
        x, h = witness
        report.lines.append(f"witness: Delta_h^{args.m + 1} f(x) != 0 at x={x}, h={h}")
    return EXIT_OK


def cmd_certify(args, report):
    f = load_function_file(args.file)
    cert = montel.montel_certificate(f, args.h0, args.m, args.verify)
    report.results.update({
        "h0": format_rational(cert.h0), "m": cert.m, "level": cert.level,
        "valid": cert.valid,
        "verified_cosets": [{"rep": format_rational(s), **q.to_json(), "nodes_checked": n}
                            for s, q, n in cert.verified_cosets],
        "failures": [format_rational(x) for x in cert.failures],
    })
    report.lines.append(f"certificate at level {cert.level}: "
                        f"{'valid' if cert.valid else 'INVALID'}")
    for s, q, n in cert.verified_cosets:
        report.lines.append(f"  coset {s} + p^{cert.level} Z_p: {q} ({n} nodes)")
    for x in cert.failures:
        report.lines.append(f"  failure near x={x}")
    return EXIT_OK if cert.valid else EXIT_CHECK_FAILED


def cmd_reconstruct(args, report):
    f = load_function_file(args.file)
    report.results.update({"x0": format_rational(args.x0), "h0": format_rational(args.h0),
                           "m": args.m, "verify_extra": args.verify})
    try:
        q = montel.reconstruct_coset_polynomial(f, args.x0, args.h0, args.m, args.verify)
    except ReconstructionFailed as e:
        report.results.update({"ok": False, "witness": format_rational(e.witness)})
        report.lines.append(f"reconstruction failed: {e}")
        return EXIT_CHECK_FAILED
    report.results.update({"ok": True, "polynomial": q.to_json()})
    report.lines.append(str(q))
    return EXIT_OK


def cmd_decompose(args, report):
    f = load_function_file(args.file)
    N = f.level if args.level is None else args.level
    try:
        d = frechet.frechet_decompose(f, args.x0, args.m, N, f.p)
    except PreconditionViolated as e:
        report.results.update({"ok": False, "witness": _witness_json(e.witness)})
        report.lines.append(f"precondition violated: {e}")
        return EXIT_CHECK_FAILED
    rng = random.Random(args.seed)
    ball = Fraction(f.p) ** d.valid_level
    zs = [ball * Fraction(rng.randint(-50, 50), _unit_den(rng, f.p))
          for _ in range(args.samples)]
    rep = frechet.verify_decomposition(f, d, zs)
    report.results.update({"ok": rep.valid, "decomposition": d.to_json(zs),
                           "verification": rep.to_json()})
    report.lines.append(f"valid ball: p^{d.valid_level} Z_{d.p} (input level {N})")
    report.lines.append("stages: " + ", ".join(f"A^{j} on p^{lv} Z_p" for j, lv in d.stage_levels))
    report.lines.append(f"A0 = {d.A0}")
    for z in zs:
        vals = ", ".join(f"A_{k}={d.diagonal(k, z)}" for k in range(1, d.m + 1))
        report.lines.append(f"  z={z}: {vals}")
    report.lines.append("residuals all zero" if rep.valid else "NONZERO residuals")
    return EXIT_OK if rep.valid else EXIT_CHECK_FAILED


def _unit_den(rng, p):
    d = rng.randint(1, 30)
    while d % p == 0:
        d += 1
    return d


def random_piecewise(rng, p, max_degree, level=0, depth=1, npieces=3):
    """A random piecewise polynomial function with pieces below ``level``."""
    reps = enumerate_reps(level, level - depth, p)
    chosen = rng.sample(reps, min(npieces, len(reps)))

    def poly():
        deg = rng.randint(0, max_degree)
        return Polynomial(tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                                for _ in range(deg + 1)))

    return montel.PiecewisePolyFn(p, level, {s: poly() for s in chosen}, poly())


def random_rational(rng, p):
    return Fraction(rng.randint(-30, 30), p ** rng.randint(0, 2) * rng.randint(1, 5))


def cmd_verify_djokovic(args, report):
    check_prime(args.p)
    if args.s < 1 or args.trials < 0:
        raise UsageError("--s must be >= 1 and --trials >= 0")
    rng = random.Random(args.seed)
    matches = 0
    mismatches = []
    for trial in range(args.trials):
        f = random_piecewise(rng, args.p, args.s + 1)
        steps = [random_rational(rng, args.p) for _ in range(args.s)]
        x = random_rational(rng, args.p)
        lhs = diffcalc.mixed_difference(f, steps, x)
        rhs = diffcalc.djokovic_rhs(f, steps, x)
        if lhs == rhs:
            matches += 1
        else:
            mismatches.append({"trial": trial, "x": format_rational(x),
                               "steps": [format_rational(h) for h in steps]})
    report.results.update({"p": args.p, "s": args.s, "trials": args.trials,
                           "seed": args.seed, "matches": matches,
                           "mismatches": mismatches})
    report.lines.append(f"{matches}/{args.trials} exact matches")
    return EXIT_OK if matches == args.trials else EXIT_CHECK_FAILED


def cmd_gallery(args, report):
    if args.kind == "jacobi":
        if args.N is None:
            raise UsageError("gallery jacobi needs --N")
        f = montel.gallery_jacobi(args.p, args.N)
        report.results.update({"kind": "jacobi", "function": function_to_json(f),
                               "period_group": str(montel.period_group(f, 0))})
        desc = [f"indicator of p^{args.N} Z_{args.p}",
                f"P_0(f) = {montel.period_group(f, 0)}"]
    else:
        if args.m is None:
            raise UsageError("gallery nonuniform needs --m")
        f = montel.gallery_nonuniform(args.p, args.m)
        report.results.update({"kind": "nonuniform", "p": args.p, "m": args.m})
        desc = [f"p^n x^{args.m} on p^-n + p^n Z_{args.p} (n >= 0), 0 elsewhere",
                f"P_{args.m}(f) = {{0}}"]
    if args.eval is not None:
        y = f(args.eval)
        report.results["eval"] = {"x": format_rational(args.eval), "value": format_rational(y)}
        report.lines.append(format_rational(y))
    else:
        report.lines.extend(desc)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="padicmontel",
                                     description="p-adic difference calculus toolkit")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    sp = add("period", cmd_period, "classify the period group P_m(f)")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("file")

    sp = add("certify", cmd_certify, "Montel certificate for a step h0")
    sp.add_argument("--h0", type=_rational, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--verify", type=int, default=None, help="extra nodes per coset")
    sp.add_argument("file")

    sp = add("reconstruct", cmd_reconstruct, "rebuild the polynomial on a coset")
    sp.add_argument("--x0", type=_rational, required=True)
    sp.add_argument("--h0", type=_rational, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--verify", type=int, default=0)
    sp.add_argument("file")

    sp = add("decompose", cmd_decompose, "Frechet decomposition about x0")
    sp.add_argument("--x0", type=_rational, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--level", type=int, default=None)
    sp.add_argument("--samples", type=int, default=5)
    sp.add_argument("--seed", type=_seed, default=DEFAULT_SEED)
    sp.add_argument("file")

    sp = add("verify-djokovic", cmd_verify_djokovic, "randomized check of Djokovic's identity")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=_seed, default=DEFAULT_SEED)

    sp = add("gallery", cmd_gallery, "example functions")
    sp.add_argument("kind", choices=["jacobi", "nonuniform"])
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--N", type=int, default=None)
    sp.add_argument("--m", type=int, default=None)
    sp.add_argument("--eval", type=_rational, default=None)
    return parser


def run_command(argv):
    """Parse and execute; returns (exit code, Report or None, machine flag)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return (e.code if isinstance(e.code, int) else EXIT_USAGE), None, False
    report = Report(list(argv))
    try:
        code = args.func(args, report)
    except (UsageError, PadicError, OSError) as e:
        report.results = {"error": str(e)}
        report.lines = [f"error: {e}"]
        code = EXIT_USAGE
    return code, report, args.json


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    code, report, machine = run_command(argv)
    if report is not None:
        out = sys.stdout if code != EXIT_USAGE else sys.stderr
        out.write(report.render(machine))
    return code


if __name__ == "__main__":
    sys.exit(main())
