"""Batch command-line front end.

Subcommands: gens, decompose, act, period, orbit, verify.  All output is
JSON (or CSV for orbits) with exact rationals encoded as strings; given the
same seed and flags the output is byte-identical.  Exit codes: 0 success,
1 input error, 2 domain error (element outside the group, norm mismatch, or
a failed verification), 3 indeterminate evaluation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .birational import Indeterminate, eval_word, generator_step
from .decompose import NotInGroup, decompose
from .models import (
    CONJUGATOR_WORD,
    OrbitTrace,
    PHI_PIC_ACTION,
    PSI_PIC_ACTION,
    phi_orbit,
    psi_orbit,
)
from .periodmap import root_variables
from .serialize import coord_decimal, decimal_str, parse_params, parse_point, parse_schlesinger
from .verify import SUITES, run_suite
from .weylgroup import NormMismatch, PicMap, SYMBOLS, parse_word, word_to_picmap

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DOMAIN = 2
EXIT_INDETERMINATE = 3

NAMED_ELEMENTS = {
    "phi": lambda: PHI_PIC_ACTION,
    "psi": lambda: PSI_PIC_ACTION,
    "conjugator": lambda: word_to_picmap(CONJUGATOR_WORD),
}


class InputError(ValueError):
    """Malformed command-line input or input file."""


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for all randomized behavior")
    common.add_argument("--trials", type=int, default=25, help="samples per pointwise check")
    common.add_argument(
        "--max-word-length", type=int, default=12, dest="max_word_length",
        help="search depth bound for conjugator search",
    )
    common.add_argument(
        "--bound", type=int, default=10_000,
        help="numerator/denominator bound for random samples",
    )
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--trace", action="store_true", help="include per-step traces")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="e6painleve",
        description="Exact Weyl-group machinery for the additive discrete "
        "Painleve family with E6 affine symmetry.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("gens", parents=[common], help="dump the generator tables")

    p_dec = sub.add_parser("decompose", parents=[common], help="write a lattice map as a word")
    p_dec.add_argument("--element", choices=sorted(NAMED_ELEMENTS))
    p_dec.add_argument("--picmap", metavar="FILE", help="JSON file with a 10x10 integer matrix")

    p_act = sub.add_parser("act", parents=[common], help="apply a word to (b; f, g)")
    p_act.add_argument("--word", required=True, help="comma-separated generator symbols")
    p_act.add_argument("--b", required=True, help="eight comma-separated rationals")
    p_act.add_argument("--point", required=True, help="f,g as rationals")

    p_per = sub.add_parser("period", parents=[common], help="root variables of a parameter vector")
    p_per.add_argument("--b", required=True, help="eight comma-separated rationals")

    p_orb = sub.add_parser("orbit", parents=[common], help="iterate one of the built-in dynamics")
    p_orb.add_argument("--map", required=True, choices=("phi", "psi"))
    p_orb.add_argument("--steps", required=True, type=int)
    p_orb.add_argument("--b", help="phi: eight comma-separated rationals")
    p_orb.add_argument("--theta", help="psi: theta01,theta02,theta11,theta12,kappa1,kappa2,kappa3")
    p_orb.add_argument("--point", required=True, help="initial point (f,g or x,y)")

    p_ver = sub.add_parser("verify", parents=[common], help="run an invariant suite")
    p_ver.add_argument("suite", choices=SUITES)

    return parser


def _print(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def cmd_gens(args: argparse.Namespace) -> int:
    generators = []
    for symbol in SYMBOLS:
        step = generator_step(symbol)
        generators.append(
            {
                "symbol": symbol,
                "picmap": step.picmap.to_json(),
                "param_matrix": [[str(x) for x in row] for row in step.param_matrix],
                "param_shift": [str(x) for x in step.param_shift],
                "coord_f": str(step.coord_f),
                "coord_g": str(step.coord_g),
            }
        )
    _print({"symbols": list(SYMBOLS), "generators": generators})
    return EXIT_OK


def _load_picmap(args: argparse.Namespace) -> PicMap:
    if (args.element is None) == (args.picmap is None):
        raise InputError("provide exactly one of --element or --picmap")
    if args.element is not None:
        return NAMED_ELEMENTS[args.element]()
    try:
        with open(args.picmap, "r", encoding="utf-8") as handle:
            data = json.load(handle)
        rows = tuple(tuple(int(x) for x in row) for row in data)
        return PicMap(rows)
    except (OSError, ValueError, TypeError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read picmap file: {exc}") from exc


def cmd_decompose(args: argparse.Namespace) -> int:
    m = _load_picmap(args)
    if args.trace:
        word, steps = decompose(m, trace=True)
    else:
        word, steps = decompose(m), ()
    out = {
        "word": list(word),
        "length": len(word),
        "verified": word_to_picmap(word) == m,
    }
    if args.trace:
        out["trace"] = [
            {"index": s.index, "images": [list(img.coeffs) for img in s.images]}
            for s in steps
        ]
    _print(out)
    return EXIT_OK


def cmd_act(args: argparse.Namespace) -> int:
    try:
        word = parse_word(s.strip() for s in args.word.split(","))
        b = parse_params(args.b)
        point = parse_point(args.point)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    new_b, new_p = eval_word(word, b, point)
    _print({"b": new_b.to_json(), "point": new_p.to_json()})
    return EXIT_OK


def cmd_period(args: argparse.Namespace) -> int:
    try:
        b = parse_params(args.b)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    a = root_variables(b)
    _print({"a": a.to_json(), "chi_delta": str(a.chi_delta())})
    return EXIT_OK


def _orbit_json_lines(trace: OrbitTrace) -> None:
    for entry in trace.entries:
        if trace.kind == "phi":
            f, g = entry.point
            _print({"step": entry.step, "b": entry.params.to_json(), "f": f.to_json(), "g": g.to_json()})
        else:
            x, y = entry.point
            _print({"step": entry.step, "theta": entry.params.to_json(), "x": str(x), "y": str(y)})


def _orbit_csv(trace: OrbitTrace) -> None:
    if trace.kind == "phi":
        header = ["step"] + [f"b{i}" for i in range(1, 9)] + ["f", "g"]
        sys.stdout.write(",".join(header) + "\n")
        for entry in trace.entries:
            cells = [str(entry.step)]
            cells += [decimal_str(x) for x in entry.params.b]
            cells += [coord_decimal(c) for c in entry.point]
            sys.stdout.write(",".join(cells) + "\n")
    else:
        header = ["step", "theta01", "theta02", "theta11", "theta12", "kappa1", "kappa2", "kappa3", "x", "y"]
        sys.stdout.write(",".join(header) + "\n")
        for entry in trace.entries:
            t = entry.params
            cells = [str(entry.step)]
            cells += [
                decimal_str(v)
                for v in (t.theta01, t.theta02, t.theta11, t.theta12, t.kappa1, t.kappa2, t.kappa3)
            ]
            cells += [decimal_str(v) for v in entry.point]
            sys.stdout.write(",".join(cells) + "\n")


def _emit_orbit(trace: OrbitTrace, fmt: str) -> None:
    if fmt == "csv":
        _orbit_csv(trace)
    else:
        _orbit_json_lines(trace)


def cmd_orbit(args: argparse.Namespace) -> int:
    if args.steps < 0:
        raise InputError("--steps must be nonnegative")
    try:
        if args.map == "phi":
            if args.b is None:
                raise InputError("--map phi requires --b")
            b = parse_params(args.b)
            point = parse_point(args.point)
        else:
            if args.theta is None:
                raise InputError("--map psi requires --theta")
            t = parse_schlesinger(args.theta)
            x, y = (Fraction(s) for s in args.point.split(","))
    except InputError:
        raise
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    try:
        if args.map == "phi":
            trace = phi_orbit(b, point, args.steps)
        else:
            trace = psi_orbit(t, x, y, args.steps)
    except Indeterminate as exc:
        partial = getattr(exc, "partial_trace", None)
        if partial is not None:
            _emit_orbit(partial, args.format)
        raise
    _emit_orbit(trace, args.format)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    checks = run_suite(
        args.suite,
        trials=args.trials,
        seed=args.seed,
        max_word_length=args.max_word_length,
        bound=args.bound,
    )
    passed = all(c.passed for c in checks)
    _print({"suite": args.suite, "passed": passed, "checks": [c.to_json() for c in checks]})
    return EXIT_OK if passed else EXIT_DOMAIN


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage; report as input error instead
        code = exc.code if isinstance(exc.code, int) else 0
        return EXIT_INPUT if code != 0 else EXIT_OK
    handlers = {
        "gens": cmd_gens,
        "decompose": cmd_decompose,
        "act": cmd_act,
        "period": cmd_period,
        "orbit": cmd_orbit,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except InputError as exc:
        sys.stderr.write(json.dumps({"error": "input", "message": str(exc)}) + "\n")
        return EXIT_INPUT
    except (NotInGroup, NormMismatch) as exc:
        sys.stderr.write(json.dumps({"error": "domain", "message": str(exc)}) + "\n")
        return EXIT_DOMAIN
    except Indeterminate as exc:
        payload = {"error": "indeterminate", "message": str(exc)}
        if exc.step_index is not None:
            payload["step_index"] = exc.step_index
        if exc.symbol is not None:
            payload["symbol"] = exc.symbol
        sys.stderr.write(json.dumps(payload) + "\n")
        return EXIT_INDETERMINATE


if __name__ == "__main__":
    raise SystemExit(main())
