"""Command line interface.

Subcommands::

    hodgecalc list
    hodgecalc run <scenario> [--max-degree N] [--prime P]
                  [--format json|table] [--out FILE] [--figures DIR]
    hodgecalc compare <scenario> [--max-degree N] [--prime P]
                  [--format json|table] [--out FILE] [--figures DIR]
    hodgecalc rootdatum g2-levi [--format json|table] [--out FILE]

Exit codes: 0 when every check passes, 1 when at least one check fails,
2 for usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import ContractError, __version__
from .catalog import (
    UnknownScenarioError, compare_dr_singular, list_scenarios, run_scenario,
    verify_g2_levi_root_datum,
)
from .reporting import Report

USAGE_ERROR = 2


def _add_report_args(parser: argparse.ArgumentParser, with_degree: bool) -> None:
    if with_degree:
        parser.add_argument("--max-degree", type=int, default=40,
                            help="top degree of every table and check (default 40)")
        parser.add_argument("--prime", type=int, default=2,
                            help="coefficient characteristic (catalog data is mod 2)")
        parser.add_argument("--figures", metavar="DIR",
                            help="also render PNG figures into DIR")
    parser.add_argument("--format", choices=("json", "table"), default="json",
                        help="report format (default json)")
    parser.add_argument("--out", metavar="FILE",
                        help="write the report to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hodgecalc",
        description="Exact mod-2 cohomology ring verification for a built-in "
                    "catalog of groups.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="list catalog scenarios")

    run_p = sub.add_parser("run", help="run every check of one scenario")
    run_p.add_argument("scenario")
    _add_report_args(run_p, with_degree=True)

    cmp_p = sub.add_parser("compare", help="compare de Rham and singular tables")
    cmp_p.add_argument("scenario")
    _add_report_args(cmp_p, with_degree=True)

    root_p = sub.add_parser("rootdatum", help="lattice checks for Levi quotients")
    root_p.add_argument("target", choices=("g2-levi",))
    _add_report_args(root_p, with_degree=False)

    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_report(report: Report, fmt: str, out: str | None) -> int:
    _emit(report.to_json() if fmt == "json" else report.to_text(), out)
    return 0 if report.passed else 1


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "list":
            for name, description in list_scenarios():
                sys.stdout.write(f"{name}\t{description}\n")
            return 0
        if args.command == "run":
            report = run_scenario(args.scenario, args.max_degree, args.prime)
            if args.figures:
                from .figures import render_run_figures
                for path in render_run_figures(args.scenario, args.max_degree,
                                               args.figures):
                    sys.stderr.write(f"wrote {path}\n")
            return _emit_report(report, args.format, args.out)
        if args.command == "compare":
            report = compare_dr_singular(args.scenario, args.max_degree, args.prime)
            if args.figures:
                from .figures import render_compare_figures
                for path in render_compare_figures(args.scenario, args.max_degree,
                                                   args.figures):
                    sys.stderr.write(f"wrote {path}\n")
            return _emit_report(report, args.format, args.out)
        if args.command == "rootdatum":
            ok = verify_g2_levi_root_datum()
            payload = {"check": "g2-levi-root-datum",
                       "status": "pass" if ok else "fail",
                       "detail": "basis images generate the sum-zero lattice and "
                                 "the character difference hits the long root"}
            if args.format == "json":
                _emit(json.dumps(payload, indent=2) + "\n", args.out)
            else:
                _emit("check\tstatus\tdetail\n"
                      f"{payload['check']}\t{payload['status']}\t{payload['detail']}\n",
                      args.out)
            return 0 if ok else 1
    except UnknownScenarioError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR
    except ContractError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return USAGE_ERROR
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
