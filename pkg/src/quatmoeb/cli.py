"""``quatmoeb`` command line.

Reads one matrix or a JSON array of matrices and writes one report per
matrix, as JSON lines or as ``key=value`` text.  Exit status: 0 on success,
2 if any input failed to parse, 3 if any matrix was singular or could not be
reduced, 4 if ``check`` found a disagreement.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time

import numpy as np

from . import moebius, qmat2, spectral
from .classify import classify
from .errors import QuatMoebError
from .quat import DEFAULT_TOL
from .sampling import check_sample
from .zclass import zclass_of

EXIT_OK, EXIT_PARSE, EXIT_SINGULAR, EXIT_DISAGREE = 0, 2, 3, 4
COMMANDS = ("classify", "normal-form", "zclass", "fixed-points", "act", "orbit", "check")
ANGLE_KEYS = ("theta", "phi")


class InputError(ValueError):
    pass


def dumps(obj) -> str:
    """JSON with floats at 17 significant digits and keys in insertion order."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        return format(v, ".17g") if math.isfinite(v) else "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k, v in obj.items():
            yield from _flatten(v, f"{prefix}{k}.")
    else:
        yield prefix[:-1], obj


def text_line(obj: dict) -> str:
    parts = []
    for key, value in _flatten(obj):
        shown = value if isinstance(value, str) else dumps(value)
        parts.append(f"{key}={shown}")
    return "  ".join(parts)


def _to_degrees(obj):
    if isinstance(obj, dict):
        return {k: (math.degrees(v) if k in ANGLE_KEYS and isinstance(v, float) else _to_degrees(v))
                for k, v in obj.items()}
    return obj


def _depth(data) -> int:
    d = 0
    while isinstance(data, list) and data:
        data = data[0]
        d += 1
    return d


def parse_input(text: str) -> list:
    """Raw items: one per matrix; each item is later parsed on its own."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
    if not isinstance(data, list):
        raise InputError("input must be a matrix or an array of matrices")
    if data == [] or _depth(data) >= 4:
        return data
    return [data]


def _report(command: str, A: qmat2.QMat2, args) -> dict:
    tol = args.tol
    if command == "classify":
        return classify(A, tol).to_json()
    if command == "normal-form":
        return spectral.to_json(spectral.normal_form(A, tol))
    if command == "zclass":
        zc, nf = zclass_of(A, tol, return_conjugator=True)
        return {"zclass": zc.value, "kind": nf.kind.value,
                "conjugator": qmat2.to_json(nf.S)}
    if command == "fixed-points":
        return {"fixed_points": [moebius.point_to_json(p) for p in spectral.fixed_points(A, tol)]}
    if command == "act":
        qmat2.check_invertible(A, tol)
        return {"image": moebius.point_to_json(moebius.apply(A, args.point, tol))}
    if command == "orbit":
        qmat2.check_invertible(A, tol)
        orb = moebius.orbit(A, args.point, args.n, tol)
        return {"orbit": [moebius.point_to_json(p) for p in orb], "pole_pass": orb.pole_pass}
    raise AssertionError(command)


def _emit(obj: dict, args, out) -> None:
    if args.degrees:
        obj = _to_degrees(obj)
    out.write((dumps(obj) if args.format == "json" else text_line(obj)) + "\n")


def run_matrices(args, text: str, out) -> int:
    try:
        items = parse_input(text)
    except InputError as exc:
        _emit({"error": "parse", "message": str(exc)}, args, out)
        return EXIT_PARSE
    parse_failed = singular = False
    for index, item in enumerate(items):
        try:
            A = qmat2.from_json(item)
        except (ValueError, TypeError) as exc:
            parse_failed = True
            _emit({"index": index, "error": "parse", "message": str(exc)}, args, out)
            continue
        try:
            report = _report(args.command, A, args)
        except QuatMoebError as exc:
            singular = True
            _emit({"index": index, "error": type(exc).__name__, "message": str(exc)}, args, out)
            continue
        _emit(report, args, out)
    if parse_failed:
        return EXIT_PARSE
    return EXIT_SINGULAR if singular else EXIT_OK


def run_check(args, out) -> int:
    rng = np.random.default_rng(args.seed)
    agree = 0
    start = time.perf_counter()
    for index in range(args.n):
        A, report = check_sample(rng, args.tol)
        oracle = spectral.eigen_structure_oracle(A, args.tol)
        if oracle is report.dtype:
            agree += 1
        elif args.format == "json":
            out.write(dumps({"index": index, "matrix": qmat2.to_json(A),
                             "classify": report.dtype.value, "oracle": oracle.value}) + "\n")
    elapsed = time.perf_counter() - start
    if args.format == "json":
        out.write(dumps({"agree": agree, "total": args.n, "seconds": elapsed}) + "\n")
    else:
        out.write(f"{agree}/{args.n} agree\n")
    return EXIT_OK if agree == args.n else EXIT_DISAGREE


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    env_tol = os.environ.get("QUATMOEB_TOL")
    parser = argparse.ArgumentParser(
        prog="quatmoeb",
        description="Classify isometries of hyperbolic 5-space given as 2x2 quaternionic matrices.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("input", nargs="?", default="-", metavar="FILE|-",
                        help="JSON matrix or array of matrices (default: stdin)")
    parser.add_argument("--tol", type=_positive_float,
                        default=_positive_float(env_tol) if env_tol else DEFAULT_TOL,
                        help="tolerance (env QUATMOEB_TOL, default 1e-9)")
    parser.add_argument("--format", choices=("json", "text"), default=None,
                        help="output format (default: json, text for check)")
    parser.add_argument("--seed", type=int, default=0, help="seed for check")
    parser.add_argument("--n", type=_positive_int, default=None,
                        help="number of check draws (default 1000) or orbit steps (default 10)")
    parser.add_argument("--point", default=None, help='boundary point for act/orbit: [w,x,y,z] or "inf"')
    parser.add_argument("--degrees", action="store_true", help="show angles in degrees")
    return parser


def main(argv=None, stdin=None, stdout=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    out = sys.stdout if stdout is None else stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.format is None:
        args.format = "text" if args.command == "check" else "json"
    if args.command == "check":
        args.n = 1000 if args.n is None else args.n
        return run_check(args, out)
    args.n = 10 if args.n is None else args.n
    if args.command in ("act", "orbit"):
        if args.point is None:
            _emit({"error": "parse", "message": "--point is required"}, args, out)
            return EXIT_PARSE
        try:
            args.point = moebius.point_from_json(json.loads(args.point))
        except (ValueError, TypeError) as exc:
            _emit({"error": "parse", "message": f"bad --point: {exc}"}, args, out)
            return EXIT_PARSE
    try:
        if args.input == "-":
            text = stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        _emit({"error": "io", "message": str(exc)}, args, out)
        return EXIT_PARSE
    return run_matrices(args, text, out)


if __name__ == "__main__":
    sys.exit(main())
