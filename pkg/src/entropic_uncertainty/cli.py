"""Command-line front end.

Subcommands: ``bound``, ``sweep``, ``minima-sweep``, ``critical-angle`` and
``verify``. Angles are radians and entropies nats unless ``--degrees`` or
``--bits`` is given.

Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 domain error,
4 I/O error, 5 solver non-convergence.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Optional, Sequence

from . import verification
from .errors import ConvergenceFailure, DomainError
from .geometry import QubitObservable, pair_frame
from .reference import bound_report
from .solver import numeric_minima, solve_critical_angle
from .sweeps import (
    BOUND_FIELDS,
    MINIMA_FIELDS,
    LN2,
    SweepSpec,
    bound_rows,
    convert_units,
    fmt,
    minima_rows,
    to_csv,
    to_json,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4
EXIT_CONVERGENCE = 5


class _ParseError(Exception):
    pass


def parse_observable(text: str) -> QubitObservable:
    parts = text.split(",")
    if len(parts) != 5:
        raise _ParseError(f"--observable expects off,scale,x,y,z; got {text!r}")
    try:
        off, scale, x, y, z = (float(p) for p in parts)
    except ValueError:
        raise _ParseError(f"--observable has a non-numeric field: {text!r}") from None
    if scale == 0.0:
        raise _ParseError(f"--observable scale must be non-zero: {text!r}")
    if x == y == z == 0.0:
        raise _ParseError(f"--observable axis must be non-zero: {text!r}")
    return QubitObservable(off, scale, (x, y, z))


def _add_unit_flags(p: argparse.ArgumentParser, angles=True, entropies=True):
    if angles:
        p.add_argument("--degrees", action="store_true", help="angles in degrees")
    if entropies:
        p.add_argument("--bits", action="store_true", help="entropies in bits")


def _add_sweep_flags(p: argparse.ArgumentParser):
    p.add_argument("--start", type=float, default=0.0, help="first alpha (default 0)")
    p.add_argument("--end", type=float, default=None, help="excluded last alpha (default pi)")
    p.add_argument("--steps", type=int, default=1000)
    p.add_argument("--output", "-o", default="-", help="output path, '-' for stdout")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_unit_flags(p)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entropic-bound",
        description="Optimal entropic uncertainty bound for qubit observable pairs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="bounds and minima for one pair")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--alpha", type=float, help="angle between the observable axes")
    src.add_argument(
        "--observable",
        action="append",
        metavar="OFF,SCALE,X,Y,Z",
        help="offset*I + scale*sigma.axis; give exactly two (use --observable=-1,... for a negative offset)",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    _add_unit_flags(p)

    p = sub.add_parser("sweep", help="bound curves over alpha")
    _add_sweep_flags(p)
    p = sub.add_parser("minima-sweep", help="positions of the minima over alpha")
    _add_sweep_flags(p)

    p = sub.add_parser("critical-angle", help="solve for the bifurcation angle")
    p.add_argument("--tol", type=float, default=1e-12, help="residual tolerance")
    _add_unit_flags(p, entropies=False)

    p = sub.add_parser("verify", help="cross-check the solver against the oracles")
    p.add_argument("--resolution", type=int, default=2048)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _cmd_bound(args, parser) -> int:
    if args.observable is not None:
        if len(args.observable) != 2:
            parser.error("--observable must be given exactly twice")
        try:
            obs = [parse_observable(o) for o in args.observable]
        except _ParseError as exc:
            parser.error(str(exc))
        frame = pair_frame(*obs)
        if frame.degenerate:
            print("note: observable axes are parallel; using alpha = 0", file=sys.stderr)
        alpha = frame.alpha
    else:
        alpha = math.radians(args.alpha) if args.degrees else args.alpha

    rep = bound_report(alpha)
    prof = numeric_minima(alpha)
    ang = math.degrees if args.degrees else float
    ent = (lambda v: v / LN2) if args.bits else float
    fields = [
        ("alpha", ang(rep.alpha)),
        ("regime", str(prof.regime)),
        ("optimal", ent(rep.optimal)),
        ("maassen_uffink", ent(rep.maassen_uffink)),
        ("deutsch", ent(rep.deutsch)),
        ("minima", [ang(t) for t in prof.thetas]),
    ]
    if args.format == "json":
        out = {}
        for k, v in fields:
            if isinstance(v, list):
                out[k] = [float(fmt(x)) for x in v]
            else:
                out[k] = v if isinstance(v, str) else float(fmt(v))
        print(json.dumps(out, indent=1))
    else:
        for k, v in fields:
            text = " ".join(fmt(x) for x in v) if isinstance(v, list) else fmt(v)
            print(f"{k:<15} {text}")
    return EXIT_OK


def _sweep_spec(args) -> SweepSpec:
    conv = math.radians if args.degrees else float
    end = math.pi if args.end is None else conv(args.end)
    return SweepSpec(conv(args.start), end, args.steps)


def _write(text: str, path: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", newline="\n", encoding="utf-8") as fh:
        fh.write(text)


def _cmd_sweep(args, minima: bool) -> int:
    spec = _sweep_spec(args)
    fields = MINIMA_FIELDS if minima else BOUND_FIELDS
    rows = minima_rows(spec) if minima else bound_rows(spec)
    rows = convert_units(rows, degrees=args.degrees, bits=args.bits)
    text = to_json(rows, fields) if args.format == "json" else to_csv(rows, fields)
    try:
        _write(text, args.output)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def _cmd_critical_angle(args) -> int:
    crit = solve_critical_angle(args.tol)
    value = math.degrees(crit.value) if args.degrees else crit.value
    print(f"critical_angle {fmt(value)}")
    print(f"residual {crit.residual:.3e}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.resolution < 64 or args.samples < 1:
        raise DomainError("--resolution must be >= 64 and --samples >= 1")
    results = verification.run_checks(args.resolution, args.samples, args.seed)
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_VERIFY if failed else EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "bound":
            return _cmd_bound(args, parser)
        if args.command in ("sweep", "minima-sweep"):
            return _cmd_sweep(args, minima=args.command == "minima-sweep")
        if args.command == "critical-angle":
            return _cmd_critical_angle(args)
        return _cmd_verify(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConvergenceFailure as exc:
        print(f"solver did not converge: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())
