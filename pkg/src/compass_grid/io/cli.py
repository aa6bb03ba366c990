"""Command-line front end.

Exit codes: 0 success, 1 diagnostics / invalid input content, 2 I/O failure,
3 ``verify`` found no grid, 64 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from ..ancient_ratios import APPROXIMATIONS
from ..dsl import DiagnosticError, evaluate, parse
from ..grid import DegenerateConfiguration, GridSpec, TooFewCircles, generate_grid, verify_grid
from ..kernel import Point
from .serialize import MalformedDocument, dumps, read_circles, scene_to_json, trace_to_document
from .svg import EmptyScene, scene_to_svg

EXIT_OK = 0
EXIT_DIAGNOSTICS = 1
EXIT_IO = 2
EXIT_NOT_GRID = 3
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


class _IOFailure(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational literal: {text!r}") from None


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        n = 0
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return n


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise _IOFailure(f"cannot read {path}: {exc}") from None


def _write(path: str | None, text: str):
    if path is None:
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise _IOFailure(f"cannot write {path}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="compass-grid", description="Compass-and-straightedge construction engine.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    run = sub.add_parser("run", help="parse and evaluate a .csl construction script")
    run.add_argument("file")
    run.add_argument("--svg")
    run.add_argument("--json")

    grid = sub.add_parser("grid", help="generate an overlapping-circles grid")
    grid.add_argument("--rows", type=_positive_int, required=True)
    grid.add_argument("--cols", type=_positive_int, required=True)
    grid.add_argument("--ratio", type=_rational, default=Fraction(1))
    grid.add_argument("--svg")
    grid.add_argument("--json")
    grid.add_argument("--trace")

    verify = sub.add_parser("verify", help="check digitized circles against a square lattice")
    verify.add_argument("file")
    verify.add_argument("--tol", type=float, default=1e-3)

    pi = sub.add_parser("pi", help="show an ancient rational approximation of pi")
    pi.add_argument("source", choices=sorted(APPROXIMATIONS))
    return parser


def _outputs(scene, args, out):
    for obj in scene:
        print(f"{obj.id}\t{obj.kind}\t{obj.role}", file=out)
    if args.svg:
        _write(args.svg, scene_to_svg(scene))
    if args.json:
        _write(args.json, scene_to_json(scene))


def _cmd_run(args, out, err) -> int:
    source = _read(args.file)
    try:
        scene, _ = evaluate(parse(source))
    except DiagnosticError as exc:
        for d in exc.diagnostics:
            print(f"{args.file}:{d}", file=err)
        return EXIT_DIAGNOSTICS
    try:
        _outputs(scene, args, out)
    except EmptyScene as exc:
        print(f"{args.file}: error: {exc}", file=err)
        return EXIT_DIAGNOSTICS
    return EXIT_OK


def _cmd_grid(args, out, err) -> int:
    if args.ratio <= 0:
        raise UsageError("grid: error: --ratio must be positive")
    spec = GridSpec(args.rows, args.cols, 1, args.ratio)
    scene, trace = generate_grid(Point(0, 0), Point(1, 0), spec)
    _outputs(scene, args, out)
    if args.trace:
        _write(args.trace, dumps(trace_to_document(trace)))
    return EXIT_OK


def _cmd_verify(args, out, err) -> int:
    if not args.tol > 0:
        raise UsageError("verify: error: --tol must be positive")
    text = _read(args.file)
    try:
        report = verify_grid(read_circles(text), args.tol)
    except (MalformedDocument, TooFewCircles, DegenerateConfiguration, json.JSONDecodeError) as exc:
        print(f"{args.file}: error: {exc}", file=err)
        return EXIT_DIAGNOSTICS
    for line in report.as_lines():
        print(line, file=out)
    return EXIT_OK if report.is_grid else EXIT_NOT_GRID


def _cmd_pi(args, out, err) -> int:
    for line in APPROXIMATIONS[args.source]().describe():
        print(line, file=out)
    return EXIT_OK


COMMANDS = {"run": _cmd_run, "grid": _cmd_grid, "verify": _cmd_verify, "pi": _cmd_pi}


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:  # --help
            return EXIT_OK if not exc.code else EXIT_USAGE
        if args.command is None:
            raise UsageError(parser.format_usage() + "compass-grid: error: a command is required")
        return COMMANDS[args.command](args, out, err)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except _IOFailure as exc:
        print(f"error: {exc}", file=err)
        return EXIT_IO


def entry_point():
    sys.exit(main())
