"""Command-line interface: ``wrp <command> ...``.

Exit status is 0 on success, 1 if any input entry failed, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .cycles import BUDGET_ENV, CycleBudgetExceeded, simple_directed_cycles
from .diagram import Color, DiagramError, build_diagram, validate_reduced
from .flype import FlypeError, check_flype_invariance
from .formulas import twist_report
from .invariant import wrp_of_diagram
from .pdcode import (
    KnotName,
    PDError,
    TableError,
    TableRow,
    mirror_pd,
    parse_pd,
    parse_table_rows,
    pd_torus2,
    pd_twist,
    serialize_pd,
)
from .table import collision_report, compute_table, format_table
from .tait import build_tait, consolidate, double

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_source(arg: str) -> str:
    """Text from stdin (``-``), an existing file, or the argument itself."""
    if arg == "-":
        return sys.stdin.read()
    path = Path(arg)
    if path.is_file():
        try:
            return path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise UsageError(f"cannot read {arg}: {exc}") from exc
    if re.search(r"[Xx]\s*[\(\[]", arg):
        return arg
    raise UsageError(f"{arg!r} is neither a file nor a PD code")


def _is_table(text: str) -> bool:
    return any("\t" in line for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#"))


def _load_rows(arg: str):
    text = _read_source(arg)
    if _is_table(text):
        return parse_table_rows(text, "<stdin>" if arg == "-" else arg)
    return [TableRow(0, KnotName("input"), parse_pd(text))]


def _cmd_wrp(args) -> int:
    text = _read_source(args.source)
    if _is_table(text):
        table = compute_table(parse_table_rows(text, args.source), budget=args.budget)
        sys.stdout.write(format_table(table, "json" if args.json else "txt"))
        return EXIT_FAILED if any(not e.ok for e in table) else EXIT_OK
    try:
        d = build_diagram(parse_pd(text))
        if args.validate:
            report = validate_reduced(d)
            print(report.to_json() if args.json else report)
        if args.graphs or args.cycles:
            for color in Color:
                tait = build_tait(d, color)
                if args.graphs:
                    print(tait.to_json())
                    print(consolidate(tait).to_json())
                if args.cycles:
                    print(f"# directed cycles, {color.value}")
                    for c in simple_directed_cycles(double(consolidate(tait)), args.budget):
                        print(c)
        value = wrp_of_diagram(d, args.budget)
    except (PDError, DiagramError, CycleBudgetExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    if not value.alternating:
        print("warning: diagram is not alternating; value is not known to be an invariant", file=sys.stderr)
    print(value.dumps() if args.json else value)
    return EXIT_OK


def _cmd_table(args) -> int:
    rows = _load_rows(args.input)
    table = compute_table(rows, jobs=args.jobs, budget=args.budget)
    out = format_table(table, args.format, args.mirrors)
    if args.output == "-":
        sys.stdout.write(out)
    else:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(out)
    failed = [e for e in table if not e.ok]
    for e in failed:
        print(f"{e.name}: {e.error}", file=sys.stderr)
    return EXIT_FAILED if failed else EXIT_OK


def _cmd_collisions(args) -> int:
    table = compute_table(_load_rows(args.input), jobs=args.jobs, budget=args.budget)
    report = collision_report(table, include_mirrors=args.mirrors)
    print(report.to_json() if args.json else report.to_text())
    return EXIT_FAILED if report.failed else EXIT_OK


def _cmd_flype_check(args) -> int:
    status = EXIT_OK
    results = []
    for row in _load_rows(args.input):
        name, pd, error = row.name, row.pd, row.error
        if error is None:
            try:
                check = check_flype_invariance(build_diagram(pd), shapes=args.shapes,
                                               roundtrip=args.roundtrip)
            except (FlypeError, DiagramError, CycleBudgetExceeded) as exc:
                error = str(exc)
        if error is not None:
            status = EXIT_FAILED
            results.append({"name": str(name), "error": error})
            if not args.json:
                print(f"{name}\tERROR: {error}")
            continue
        if not check.passed:
            status = EXIT_FAILED
        results.append({"name": str(name), "sites": check.sites, "nondegenerate": check.nondegenerate,
                        "passed": check.passed, "failures": check.failures})
        if not args.json:
            print(f"{name}\t{check}")
    if args.json:
        print(json.dumps(results, indent=1))
    return status


def _cmd_gen(args) -> int:
    if args.k < 2:
        raise UsageError(f"k={args.k} is too small for {args.family}")
    code = pd_torus2(args.k) if args.family == "torus2" else pd_twist(args.k)
    if args.mirror:
        code = mirror_pd(code)
    print(serialize_pd(code))
    return EXIT_OK


def _cmd_twist_report(args) -> int:
    print(twist_report(args.kmin, args.kmax))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wrp", description="WRP invariant of alternating knots and links")
    ap.add_argument("--budget", type=int, default=None,
                    help=f"cycle enumeration budget per polynomial (default: ${BUDGET_ENV} or 10^7)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wrp", help="print the invariant of one PD code (or of every row of a table)")
    p.add_argument("source", help="PD string, file, or - for stdin")
    p.add_argument("--json", action="store_true")
    p.add_argument("--validate", action="store_true", help="print the reducedness report first")
    p.add_argument("--graphs", action="store_true", help="dump checkerboard graphs as JSON")
    p.add_argument("--cycles", action="store_true", help="dump every directed cycle")
    p.set_defaults(func=_cmd_wrp)

    p = sub.add_parser("table", help="compute a WRP table")
    p.add_argument("input")
    p.add_argument("output", help="output file, or - for stdout")
    p.add_argument("--format", choices=("txt", "csv", "json"), default="txt")
    p.add_argument("--mirrors", action="store_true", help="add a NAMEm row after each knot")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("collisions", help="group table entries by equal WRP")
    p.add_argument("input")
    p.add_argument("--mirrors", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_collisions)

    p = sub.add_parser("flype-check", help="flype every diagram at every site and compare WRP")
    p.add_argument("input")
    p.add_argument("--shapes", action="store_true", help="count flypes that give a new diagram")
    p.add_argument("--roundtrip", action="store_true", help="also undo each flype")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_flype_check)

    p = sub.add_parser("gen", help="print a PD code from a family")
    p.add_argument("family", choices=("torus2", "twist"))
    p.add_argument("k", type=int)
    p.add_argument("--mirror", action="store_true")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("twist-report", help="compare twist knots with the published closed form")
    p.add_argument("--kmin", type=int, default=2)
    p.add_argument("--kmax", type=int, default=6)
    p.set_defaults(func=_cmd_twist_report)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, TableError) as exc:
        print(f"wrp: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PDError as exc:
        print(f"wrp: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
