"""Command-line front end.

Exit codes: 0 when everything checked passes, 1 on a failed check or
mismatch, 2 on usage, parse or resource-cap errors.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import series as S
from .equivalence import Params, check_conjecture, count_classes, max_class_size, partition
from .errors import MAX_OBJECTS, ResourceLimitError, check_budget, object_cap
from .formulas import catalan
from .opsim import DEFAULT_BUDGET, MagmaTable, profile_magma
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- series specs ---------------------------------------------------------------

SERIES_KINDS = {
    "Cd": (1, S.gf_Cd),
    "Cde": (2, S.gf_Cde),
    "Ckd": (2, S.gf_Ckd),
    "M": (1, S.gf_M),
    "Mkd": (2, S.gf_Mkd),
    "C3d": (1, S.gf_C3d_closed),
    "catalan": (0, lambda order: S.gf_catalan(order)),
}


def parse_series_spec(text: str):
    """``"Cd:2"``, ``"Cde:2,2"``, ``"Ckd:3,1"``, ``"M:2"``, ``"Mkd:2,1"``, ``"C3d:1"`` or ``"catalan"``."""
    name, _, rest = text.partition(":")
    if name not in SERIES_KINDS:
        raise UsageError(f"unknown series {name!r}; choose from {', '.join(SERIES_KINDS)}")
    arity, fn = SERIES_KINDS[name]
    try:
        args = [int(a) for a in rest.split(",")] if rest else []
    except ValueError:
        raise UsageError(f"series arguments must be integers: {text!r}") from None
    if len(args) != arity:
        raise UsageError(f"{name} takes {arity} argument(s), got {len(args)}")

    def build(order: int):
        try:
            return fn(*args, order)
        except ValueError as exc:
            raise UsageError(str(exc)) from None

    return build


def _exact(c: Fraction):
    return int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


# -- b-files ----------------------------------------------------------------------

class BFileError(ValueError):
    pass


@dataclass
class BFile:
    entries: list[tuple[int, int]]

    @classmethod
    def parse(cls, text: str, source: str = "<bfile>") -> BFile:
        entries: list[tuple[int, int]] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 2:
                raise BFileError(f"{source}:{lineno}: expected 'index value', got {raw!r}")
            try:
                index, value = int(fields[0]), int(fields[1])
            except ValueError:
                raise BFileError(f"{source}:{lineno}: non-integer field in {raw!r}") from None
            if entries and index <= entries[-1][0]:
                raise BFileError(f"{source}:{lineno}: index {index} does not increase")
            entries.append((index, value))
        return cls(entries)

    @classmethod
    def read(cls, path) -> BFile:
        path = Path(path)
        try:
            text = path.read_text()
        except OSError as exc:
            raise BFileError(f"{path}: {exc.strerror}") from None
        return cls.parse(text, str(path))


def compare_bfile(sequence: list[int], bfile: BFile, offset: int) -> dict:
    """Match b-file index i against ``sequence[i + offset]`` on the overlap."""
    compared = 0
    for index, value in bfile.entries:
        pos = index + offset
        if not 0 <= pos < len(sequence):
            continue
        compared += 1
        if sequence[pos] != value:
            return {"passed": False, "compared": compared, "first_mismatch":
                    {"index": index, "expected": value, "got": sequence[pos]}}
    return {"passed": compared > 0, "compared": compared, "first_mismatch": None}


# -- output helpers ---------------------------------------------------------------

def _emit(rows: list[dict], fmt: str, out, extra: dict | None = None):
    if fmt == "json":
        payload = dict(extra or {})
        payload["rows"] = rows
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        if not rows:
            return
        writer = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: ("" if v is None else v) for k, v in row.items()})


def _params(args) -> Params:
    try:
        return Params(args.d, args.e, args.k, args.l)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- commands -------------------------------------------------------------------------

def cmd_table(args, out) -> int:
    p = _params(args)
    # refuse up front rather than print a partial table
    check_budget(catalan(args.nmax), f"table up to n={args.nmax}")
    rows = []
    for n in range(args.nmax + 1):
        top, mult = max_class_size(n, p)
        rows.append({"n": n, "C": count_classes(n, p), "C_tilde": top, "multiplicity": mult})
    _emit(rows, args.format, out, {"params": p.as_dict()})
    return EXIT_OK


def cmd_classes(args, out) -> int:
    p = _params(args)
    n = args.n if args.n is not None else args.nmax
    check_budget(catalan(n), f"classes at n={n}")
    json.dump(partition(n, p).to_json(verbose=args.verbose), out, indent=2, ensure_ascii=False)
    out.write("\n")
    return EXIT_OK


def cmd_series(args, out) -> int:
    s = parse_series_spec(args.spec)(args.order)
    coeffs = [_exact(c) for c in s.coeffs]
    if args.format == "json":
        json.dump({"spec": args.spec, "order": args.order, "coefficients": coeffs}, out)
        out.write("\n")
    else:
        _emit([{"power": i, "coefficient": c} for i, c in enumerate(coeffs)], "csv", out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    report = run_suite(args.suite, args.nmax)
    payload = report.to_json()
    if not args.all_checks:
        payload["checks"] = [c for c in payload["checks"] if not c["ok"]]
    if args.format == "json":
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        _emit([{"suite": report.suite, "total": len(report.checks), "failed": len(report.failed),
                "passed": report.passed, "seconds": payload["seconds"]}], "csv", out)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_conjecture(args, out) -> int:
    result = check_conjecture(args.k, args.l, args.nmax)
    if args.format == "json":
        json.dump(result, out, indent=2)
        out.write("\n")
    else:
        _emit([{"k": args.k, "l": args.l, **row} for row in result["rows"]], "csv", out)
    # a counterexample is a finding, not an error
    return EXIT_OK


def cmd_profile(args, out) -> int:
    if not args.table:
        raise UsageError("profile needs --table <path>")
    try:
        tbl = MagmaTable.from_csv(args.table)
    except (OSError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    budget = args.budget if args.budget is not None else DEFAULT_BUDGET
    prof = profile_magma(tbl, args.nmax, budget=budget)
    rows = [
        {"n": n, "C": c, "C_tilde": t, "multiplicity": m}
        for n, (c, t, m) in enumerate(zip(prof.counts, prof.max_sizes, prof.multiplicities))
    ]
    _emit(rows, args.format, out, {"size": tbl.size, "associative": tbl.is_associative(), "depth": prof.depth})
    return EXIT_OK


def cmd_oeis_check(args, out) -> int:
    if not args.bfile:
        raise UsageError("oeis-check needs --bfile <path>")
    build = parse_series_spec(args.spec)
    try:
        bfile = BFile.read(args.bfile)
    except BFileError as exc:
        raise UsageError(str(exc)) from None
    last = max((i for i, _ in bfile.entries), default=0) + args.offset
    order = max(args.order, last + 1)
    sequence = S.counts(build(order))
    result = compare_bfile(sequence, bfile, args.offset)
    result.update({"spec": args.spec, "bfile": str(args.bfile), "offset": args.offset})
    json.dump(result, out, indent=2)
    out.write("\n")
    return EXIT_OK if result["passed"] else EXIT_FAIL


COMMANDS = {
    "table": cmd_table,
    "classes": cmd_classes,
    "series": cmd_series,
    "verify": cmd_verify,
    "conjecture": cmd_conjecture,
    "profile": cmd_profile,
    "oeis-check": cmd_oeis_check,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", type=int, default=1)
    common.add_argument("--e", type=int, default=1)
    common.add_argument("--k", type=int, default=1)
    common.add_argument("--l", type=int, default=1)
    common.add_argument("--nmax", type=int, default=None)
    common.add_argument("--order", type=int, default=S.DEFAULT_ORDER)
    common.add_argument("--format", choices=("csv", "json"), default=None)
    common.add_argument("--budget", type=int, default=None,
                        help=f"object cap for enumerations (default {MAX_OBJECTS}); evaluation budget for profile")

    parser = argparse.ArgumentParser(prog="nonassoc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("table", parents=[common], help="class counts and largest classes for n <= nmax")
    classes = sub.add_parser("classes", parents=[common], help="the partition of T_n as JSON")
    classes.add_argument("--n", type=int, default=None)
    classes.add_argument("--verbose", action="store_true", help="list the trees of every class")
    series = sub.add_parser("series", parents=[common], help="coefficients of a generating function")
    series.add_argument("spec")
    verify = sub.add_parser("verify", parents=[common], help="run a cross-check suite")
    verify.add_argument("suite", choices=sorted(SUITES))
    verify.add_argument("--all-checks", action="store_true", help="include passing checks in the report")
    sub.add_parser("conjecture", parents=[common], help="compare C_{k,l,n} with C_{k+l-1,n}")
    profile = sub.add_parser("profile", parents=[common], help="profile a finite magma from a CSV table")
    profile.add_argument("--table", default=None)
    oeis = sub.add_parser("oeis-check", parents=[common], help="compare a series with a local b-file")
    oeis.add_argument("spec")
    oeis.add_argument("--bfile", default=None)
    oeis.add_argument("--offset", type=int, default=0)
    return parser


_DEFAULT_NMAX = {"table": 8, "classes": 4, "verify": None, "conjecture": 9, "profile": 5}
_DEFAULT_FORMAT = {"table": "csv", "series": "json", "verify": "json", "conjecture": "json", "profile": "csv"}


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.nmax is None:
        args.nmax = _DEFAULT_NMAX.get(args.command)
    elif args.nmax < 0:
        print("error: --nmax must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    if args.format is None:
        args.format = _DEFAULT_FORMAT.get(args.command, "json")
    cap = args.budget if args.budget is not None and args.command != "profile" else MAX_OBJECTS
    try:
        with object_cap(cap):
            return COMMANDS[args.command](args, out)
    except (UsageError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
