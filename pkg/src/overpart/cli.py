"""Command-line entry point.

Commands: ``verify`` (theorem campaigns), ``series`` (coefficient dumps),
``table`` (two-index count grids), ``bijection`` (per-cell map audits) and
``count`` (single counting-function values, optionally listing the
objects).  All numeric output is exact decimal.  Exit codes: 0 all checks
pass, 1 some check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import bijections, enumeration, qexpr, series as qs
from .core import InvalidParameters, Overpartition
from .verify import SCHEMA_VERSION, THEOREMS, run_campaign

# single letters name the classical counting functions on each side
_FAMILY_LETTERS = {
    "F": ("gordon", "condition"), "E": ("gordon", "residue"),
    "B": ("bressoud", "condition"), "A": ("bressoud", "residue"),
    "Bbar": ("lovejoy_b", "condition"), "Abar": ("lovejoy_b", "residue"),
    "Dbar": ("lovejoy_d", "condition"), "Cbar": ("lovejoy_d", "residue"),
    "P": ("css", "condition"), "Q": ("css", "residue"),
    "B3": ("clm", "condition"), "A3": ("clm", "residue"),
    "D": ("main", "condition"), "C": ("main", "residue"),
}
_CONDITION_LETTERS = [name for name, (_, side) in _FAMILY_LETTERS.items() if side == "condition"]


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit a JSON document")
    fmt.add_argument("--tsv", action="store_true", help="emit tab-separated records")
    common.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="worker processes for independent checks")
    common.add_argument("--seed", type=int, default=None,
                        help="seed recorded with the report (fuzz corpora)")
    common.add_argument("--stream", action="store_true",
                        help="emit check records as JSON lines while running")

    parser = argparse.ArgumentParser(prog="overpart",
                                     description="exact verification of overpartition identities")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run a verification campaign")
    p.add_argument("theorem", choices=THEOREMS)
    p.add_argument("--kmax", type=int, default=4)
    p.add_argument("--nmax", type=int, default=16)
    p.add_argument("--order", type=int, default=None,
                   help="truncation order for series campaigns")
    p.add_argument("--include-i-equals-k", action="store_true",
                   help="add the refutable i=k checks of the bressoud campaign")
    p.add_argument("--include-k1", action="store_true",
                   help="add the refutable k=1 checks of campaigns needing k>=2")

    p = sub.add_parser("series", parents=[common], help="expand a series to coefficients")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", choices=["W", "Dgen", "theta", "J", "J1"])
    src.add_argument("--expr", help="a Pochhammer-product expression")
    p.add_argument("--k", type=int)
    p.add_argument("--i", type=int)
    p.add_argument("--order", type=int, required=True)

    p = sub.add_parser("table", parents=[common], help="two-index condition-side count grid")
    p.add_argument("--family", choices=_CONDITION_LETTERS, default="D")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--mmax", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--check-recurrence", action="store_true",
                   help="validate the cell-wise recurrence on the grid")

    p = sub.add_parser("bijection", parents=[common], help="audit a map on its cells")
    p.add_argument("--map", choices=["iota", "phi", "chi"], required=True, dest="map_name")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--nmax", type=int, default=12)

    p = sub.add_parser("count", parents=[common], help="one counting-function value")
    p.add_argument("--family", choices=sorted(_FAMILY_LETTERS), required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--list", action="store_true", dest="list_objects",
                   help="also list the qualifying objects, one per line")
    return parser


# ---------------------------------------------------------------------------
# verify

def _cmd_verify(args, parser) -> int:
    emit = None
    if args.stream:
        emit = lambda record: print(json.dumps(asdict(record), sort_keys=True), flush=True)
    try:
        report = run_campaign(args.theorem, kmax=args.kmax, nmax=args.nmax, order=args.order,
                              include_i_equals_k=args.include_i_equals_k,
                              include_k1=args.include_k1, jobs=args.jobs, seed=args.seed,
                              on_record=emit)
    except InvalidParameters as exc:
        parser.error(str(exc))
    if args.json:
        print(report.to_json())
    elif args.tsv:
        for record in report.records:
            params = ",".join(f"{k}={v}" for k, v in record.params.items())
            print("\t".join([record.name, params, "pass" if record.passed else "FAIL",
                             record.counterexample or ""]))
    elif not args.stream:
        for record in report.records:
            params = " ".join(f"{k}={v}" for k, v in record.params.items())
            status = "ok  " if record.passed else "FAIL"
            line = f"{status} {record.name} {params}"
            if record.expected.get("value") is not None:
                line += f"  expected={record.expected['value']} actual={record.actual['value']}"
            if record.counterexample:
                line += f"  [{record.counterexample}]"
            print(line)
        summary = report.summary()
        print(f"{report.campaign}: {summary['passed']}/{summary['total']} checks passed"
              f" in {report.duration_seconds:.2f}s")
    return 0 if report.passed else 1


# ---------------------------------------------------------------------------
# series

def _series_builtin(args, parser):
    if args.k is None or args.order is None:
        parser.error("--builtin needs --k and --order")
    k, i, order = args.k, args.i, args.order
    name = args.builtin
    if name == "J1":
        name, i = "J", 1
    if i is None:
        parser.error("--builtin needs --i (J1 implies --i 1)")
    if name == "W":
        return qs.series_w(k, i, order)
    if name == "J":
        return qs.series_j(k, i, order)
    if name == "Dgen":
        return qs.gen_d(k, i, order)
    return qs.bilateral_theta(k, i, order)


def _cmd_series(args, parser) -> int:
    try:
        if args.expr is not None:
            value = qexpr.evaluate(args.expr, args.order)
        else:
            value = _series_builtin(args, parser)
    except (InvalidParameters, qexpr.ParseError, qexpr.EvalError,
            qs.IllFormedMonomial, qs.NonUnitConstantTerm) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if isinstance(value, qs.XQSeries):
        rows = qs.xqseries_rows(value)
        if args.json:
            print(json.dumps({"schema": SCHEMA_VERSION, "order": value.order,
                              "triples": [list(r) for r in rows]}, sort_keys=True))
        else:
            for m, n, c in rows:
                print(f"{m}\t{n}\t{c}")
    else:
        if args.json:
            print(json.dumps({"schema": SCHEMA_VERSION, "order": value.order,
                              "coefficients": list(value.coeffs)}, sort_keys=True))
        else:
            for n, c in qs.qseries_rows(value):
                print(f"{n}\t{c}")
    return 0


# ---------------------------------------------------------------------------
# table

def _cmd_table(args, parser) -> int:
    family, _ = _FAMILY_LETTERS[args.family]
    try:
        table = enumeration.count_table(family, args.k, args.i, args.mmax, args.nmax)
    except InvalidParameters as exc:
        parser.error(str(exc))
    if args.json:
        print(json.dumps({"schema": SCHEMA_VERSION, "family": args.family, "k": args.k,
                          "i": args.i, "mmax": args.mmax, "nmax": args.nmax,
                          "cells": [list(row) for row in table.cells]}, sort_keys=True))
    elif args.tsv:
        for m in range(args.mmax + 1):
            for n in range(args.nmax + 1):
                print(f"{m}\t{n}\t{table.cell(m, n)}")
    else:
        header = "m\\n " + " ".join(f"{n:>5}" for n in range(args.nmax + 1))
        print(header)
        for m in range(args.mmax + 1):
            print(f"{m:>3} " + " ".join(f"{table.cell(m, n):>5}" for n in range(args.nmax + 1)))
    if not args.check_recurrence:
        return 0
    if family != "main":
        parser.error("--check-recurrence applies to the D family")
    tables = enumeration.count_tables(family, [(args.k, j) for j in range(args.k + 1)],
                                      args.mmax, args.nmax)
    failures = []
    for n in range(args.nmax + 1):
        for m in range(args.mmax + 1):
            lhs = tables[(args.k, args.i)].cell(m, n) - tables[(args.k, args.i - 1)].cell(m, n)
            other = tables[(args.k, args.k - args.i)]
            rhs = other.cell(m - args.i, n - m) + other.cell(m - args.i + 1, n - m)
            if lhs != rhs:
                failures.append((m, n, lhs, rhs))
    if failures:
        m, n, lhs, rhs = failures[0]
        print(f"recurrence FAILS at (m,n)=({m},{n}): difference {lhs}, stripped sum {rhs}")
        return 1
    print("recurrence holds on the grid")
    return 0


# ---------------------------------------------------------------------------
# bijection

def _cmd_bijection(args, parser) -> int:
    if args.map_name == "iota":
        verifier = bijections.verify_iota_cell
    elif args.map_name == "phi":
        verifier = bijections.verify_phi_cell
    else:
        verifier = bijections.verify_chi_cell
    records = []
    try:
        for n in range(args.nmax + 1):
            for m in range(n + 1):
                records.append(verifier(args.k, args.i, m, n))
    except (InvalidParameters, bijections.UnsupportedRange) as exc:
        parser.error(str(exc))
    if args.json:
        print(json.dumps({"schema": SCHEMA_VERSION, "map": args.map_name,
                          "records": [asdict(r) for r in records]}, sort_keys=True))
    else:
        for r in records:
            if not r.passed or args.tsv:
                status = "pass" if r.passed else "FAIL"
                print(f"{r.map_name}\t{r.cell_id}\t{r.domain_size}\t{r.codomain_size}"
                      f"\t{r.image_size}\t{status}\t{r.counterexample or ''}")
        ok = sum(1 for r in records if r.passed)
        print(f"{args.map_name}: {ok}/{len(records)} cells pass")
    return 0 if all(r.passed for r in records) else 1


# ---------------------------------------------------------------------------
# count

def _cmd_count(args, parser) -> int:
    family, side = _FAMILY_LETTERS[args.family]
    try:
        if side == "residue":
            if args.m is not None:
                parser.error("residue-side counts are not refined by part count")
            value = enumeration.count_residue_side(family, args.k, args.i, args.n)
        else:
            value = enumeration.count_condition_side(family, args.k, args.i, args.n, args.m)
    except InvalidParameters as exc:
        parser.error(str(exc))
    if args.json:
        print(json.dumps({"schema": SCHEMA_VERSION, "family": args.family, "k": args.k,
                          "i": args.i, "n": args.n, "m": args.m, "count": value},
                         sort_keys=True))
    else:
        print(value)
    if args.list_objects:
        if side == "residue":
            parser.error("--list applies to condition-side families")
        stream = (lam for lam in
                  (enumeration.partitions_of(args.n, args.m)
                   if family in enumeration.PARTITION_FAMILIES
                   else enumeration.overpartitions_of(args.n, args.m))
                  if enumeration.satisfies(family, args.k, args.i, lam))
        for line in enumeration.text_lines(stream):
            print(line)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {"verify": _cmd_verify, "series": _cmd_series, "table": _cmd_table,
                "bijection": _cmd_bijection, "count": _cmd_count}
    try:
        return handlers[args.command](args, parser)
    except BrokenPipeError:
        # downstream consumer (head, less) closed the pipe; not an error
        import os
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
