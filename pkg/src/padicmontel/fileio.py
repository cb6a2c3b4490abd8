"""JSON function files: the finite data of a piecewise-polynomial function.

Schema::

    {"p": 2, "level": 1,
     "pieces": [{"rep": "1", "coeffs": ["1"]}],
     "default": {"coeffs": ["0"]}}
"""
import json

from .errors import ConfigurationError, ParseError
from .interp import Polynomial
from .montel import PiecewisePolyFn
from .padic import check_prime, coset_rep, format_rational, parse_rational

_KEYS = {"p", "level", "pieces", "default"}


def _int_field(obj, key):
    val = obj.get(key)
    if isinstance(val, bool) or not isinstance(val, int):
        raise ParseError(f"expected an integer, got {val!r}", key)
    return val


def parse_function_file(text):
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"not UTF-8: {e}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, f"line {e.lineno} column {e.colno}") from None
    if not isinstance(obj, dict):
        raise ParseError("top level must be a JSON object")
    missing = _KEYS - obj.keys()
    if missing:
        raise ParseError(f"missing keys {sorted(missing)}")
    extra = obj.keys() - _KEYS
    if extra:
        raise ParseError(f"unknown keys {sorted(extra)}")

    p = _int_field(obj, "p")
    try:
        check_prime(p)
    except ConfigurationError as e:
        raise ParseError(str(e), "p") from None
    level = _int_field(obj, "level")
    if not isinstance(obj["pieces"], list):
        raise ParseError("expected an array", "pieces")

    pieces = {}
    for i, entry in enumerate(obj["pieces"]):
        loc = f"pieces[{i}]"
        if not isinstance(entry, dict) or set(entry) != {"rep", "coeffs"}:
            raise ParseError("expected {\"rep\": ..., \"coeffs\": [...]}", loc)
        try:
            rep = parse_rational(entry["rep"])
        except ParseError as e:
            raise ParseError(str(e), f"{loc}.rep") from None
        canon = coset_rep(rep, level, p)
        if canon != rep:
            raise ParseError(f"rep {format_rational(rep)} is not canonical at level "
                             f"{level}; use \"{format_rational(canon)}\"", f"{loc}.rep")
        if rep in pieces:
            raise ParseError(f"duplicate rep {format_rational(rep)}", f"{loc}.rep")
        pieces[rep] = Polynomial.from_json(entry, loc)
    default = Polynomial.from_json(obj["default"], "default")
    return PiecewisePolyFn(p, level, pieces, default)


def function_to_json(f):
    return {
        "p": f.p,
        "level": f.level,
        "pieces": [{"rep": format_rational(s), **f.pieces[s].to_json()}
                   for s in sorted(f.pieces)],
        "default": f.default.to_json(),
    }


def render_function_file(f):
    return json.dumps(function_to_json(f), indent=2) + "\n"


def load_function_file(path):
    with open(path, "rb") as fh:
        return parse_function_file(fh.read())
