"""Command-line interface: ``ldiag <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .diagram import (
    EXPAND_BOUND, code, decode, diagram_from_json, diagram_to_json, expand, fubini, shs_product,
)
from .errors import LdiagError
from .grammar import parse_word
from .kernel import Lin
from .law import LawParams, infil, infil_shifted
from .structure import factorize, filtration_length
from .suites import run_suite, SUITES

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _param(text: str) -> int | None:
    if text == "sym":
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'sym', got {text!r}") from None


def _lin_json(v: Lin) -> list[dict]:
    return [{"word": str(w), "coeff": str(c)} for w, c in v.items()]


def _read_diagram(arg: str):
    text = Path(arg[1:]).read_text() if arg.startswith("@") else arg
    try:
        return diagram_from_json(text)
    except json.JSONDecodeError as e:
        raise InputError(f"invalid diagram JSON: {e}") from None


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


# --------------------------------------------------------------------------

def cmd_product(args) -> int:
    u, v = parse_word(args.u), parse_word(args.v)
    params = LawParams(args.qc, args.qs)
    result = params.apply(infil(u, v) if args.no_shift else infil_shifted(u, v))
    payload = {
        "command": "product", "u": str(u), "v": str(v), "shifted": not args.no_shift,
        "qc": "sym" if args.qc is None else args.qc, "qs": "sym" if args.qs is None else args.qs,
        "terms": _lin_json(result), "text": str(result),
    }
    _emit(args, payload, str(result))
    return EXIT_OK


def cmd_diagram_product(args) -> int:
    d1, d2 = _read_diagram(args.d1), _read_diagram(args.d2)
    params = LawParams(args.qc, args.qs)
    result = params.apply(shs_product(d1, d2))
    rows = [(d, c) for d, c in result.items()]
    lines = [f"{c}\t{d}\t{code(d)}" for d, c in rows] or ["0"]
    payload = {
        "command": "diagram-product",
        "terms": [{"coeff": str(c), "diagram": diagram_to_json(d), "code": str(code(d))} for d, c in rows],
    }
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_code(args) -> int:
    d = _read_diagram(args.diagram)
    w = code(d)
    _emit(args, {"command": "code", "diagram": diagram_to_json(d), "word": str(w)}, str(w))
    return EXIT_OK


def cmd_decode(args) -> int:
    d = decode(parse_word(args.word))
    text = "\n".join([f"p = {d.p}, q = {d.q}, edges = {d.edges()}"] + [f"{i}\t{j}\t{w}" for (i, j), w in d.weights])
    _emit(args, {"command": "decode", "p": d.p, "q": d.q, **diagram_to_json(d)}, text)
    return EXIT_OK


def cmd_expand(args) -> int:
    rows = expand(args.n, bound=args.bound)
    total = sum(m for _, m, _ in rows)
    f = fubini(args.n)
    lines = ["diagram\tcode\tmult\talpha\tbeta\tmonomial"]
    for d, m, mi in rows:
        lines.append(f"{d}\t{code(d)}\t{m}\t{mi.alpha_dict()}\t{mi.beta_dict()}\t{mi.monomial()}")
    lines.append(f"total = {total} = Fubini({args.n})^2 = {f}^2" if total == f * f
                 else f"total = {total} != Fubini({args.n})^2 = {f * f}")
    payload = {
        "command": "expand", "n": args.n,
        "rows": [{"diagram": diagram_to_json(d), "code": str(code(d)), "mult": m,
                  "alpha": {str(k): c for k, c in mi.alpha}, "beta": {str(k): c for k, c in mi.beta}}
                 for d, m, mi in rows],
        "total": total, "fubini": f, "fubini_squared": f * f,
    }
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if total == f * f else EXIT_FAIL


def cmd_factor(args) -> int:
    w = parse_word(args.word)
    fac = factorize(w)
    bad = fac.non_code_factors()
    lines = [str(f) for f in fac.factors] + [f"l(w) = {filtration_length(w)}"]
    for k in bad:
        lines.append(f"note: factor {k + 1} ({fac.factors[k]}) violates the code criterion")
    payload = {
        "command": "factor", "word": str(w), "factors": [str(f) for f in fac.factors],
        "length": filtration_length(w), "non_code_factors": [k + 1 for k in bad],
    }
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    kw = {"chi": args.chi} if args.chi is not None else {}
    reports = run_suite(args.suite, seed=args.seed, max_degree=args.max_degree, **kw)
    lines = []
    for r in reports:
        lines.append(r.summary())
        lines += ["  " + n for n in r.notes]
        lines += ["  failure: " + f for f in r.failures]
    ok = all(r.passed for r in reports)
    payload = {
        "command": "verify", "suite": args.suite, "seed": args.seed, "passed": ok,
        "reports": [{"name": r.name, "passed": r.passed, "cases": r.cases,
                     "notes": r.notes, "failures": r.failures} for r in reports],
    }
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--qc", type=_param, default=None, metavar="INT|sym",
                        help="value of the crossing parameter (default: symbolic)")
    shared.add_argument("--qs", type=_param, default=None, metavar="INT|sym",
                        help="value of the superposition parameter (default: symbolic)")
    shared.add_argument("--format", choices=("text", "json"), default="text")
    shared.add_argument("--seed", type=int, default=None, help="seed for randomized suites (default 0)")
    shared.add_argument("--max-degree", type=int, default=None, help="degree bound of a verification suite")

    parser = argparse.ArgumentParser(prog="ldiag", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("product", parents=[shared], help="deformed product of two words")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--no-shift", action="store_true", help="unshifted law (no translation of v)")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("diagram-product", parents=[shared], help="product of two diagrams (JSON or @file)")
    p.add_argument("d1")
    p.add_argument("d2")
    p.set_defaults(func=cmd_diagram_product)

    p = sub.add_parser("code", parents=[shared], help="code of a diagram")
    p.add_argument("diagram")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("decode", parents=[shared], help="diagram coded by a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("expand", parents=[shared], help="n-edge diagrams with multiplicities")
    p.add_argument("n", type=int)
    p.add_argument("--bound", type=int, default=EXPAND_BOUND, help=f"largest allowed n (default {EXPAND_BOUND})")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("factor", parents=[shared], help="irreducible factors in the shifted monoid")
    p.add_argument("word")
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("verify", parents=[shared], help="run a verification suite")
    p.add_argument("suite", help=", ".join(list(SUITES) + ["all"]))
    p.add_argument("--chi", default=None, help="colour factor for the cocycle suite: const:c, qc-bichar, qs-bichar, perturbed")
    p.set_defaults(func=cmd_verify)
    return parser


def _validate(args):
    uses_params = args.command in ("product", "diagram-product")
    if not uses_params and (args.qc is not None or args.qs is not None):
        raise InputError(f"--qc/--qs do not apply to '{args.command}'")
    if args.command != "verify":
        if args.seed is not None or args.max_degree is not None:
            raise InputError("--seed/--max-degree only apply to 'verify'")
    else:
        if args.seed is None:
            args.seed = 0
        if args.max_degree is not None and args.max_degree < 0:
            raise InputError("--max-degree must be nonnegative")
        if args.chi is not None and args.suite != "cocycle":
            raise InputError("--chi only applies to the cocycle suite")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _validate(args)
        return args.func(args)
    except (LdiagError, InputError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
