"""Exact p-adic finite-difference calculus: period groups of piecewise
polynomials over Q_p and Frechet decompositions of uniformly locally
polynomial functions."""
from .diffcalc import (djokovic_rhs, djokovic_terms, forward_difference,
                       iterated_difference, mixed_difference)
from .errors import (ConfigurationError, DegenerateNodesError, DomainError,
                     ParseError, PreconditionViolated, RangeError,
                     ReconstructionFailed)
from .fileio import parse_function_file, render_function_file
from .frechet import (frechet_decompose, multiadditive_component, phi_exponent,
                      translate_oracle, verify_decomposition)
from .interp import Polynomial, lagrange_interpolate, poly_eval, poly_shift
from .montel import (PiecewisePolyFn, evaluate_piecewise, find_witness,
                     gallery_jacobi, gallery_nonuniform, montel_certificate,
                     period_group, reconstruct_coset_polynomial)
from .padic import (PAdicScalar, coset_rep, digit_expansion, enumerate_reps,
                    in_ball, valuation)

__version__ = "0.1.0"
