"""Command-line interface: ``partition-lab <command> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage or
domain errors.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
from typing import Callable, Optional, Sequence

from .core import ColoredPartition, Family, Overpartition, count, member, parse_filter
from .maps import (
    FixedStaircase,
    Moved,
    from_overpartition,
    modular4_transform,
    pair_merge,
    pair_split,
    paint_colors,
    phi,
    strip_colors,
    theta,
    to_modular_diagram,
    to_overpartition,
)
from .render import render_diagram
from .verify import IdentityId, IdentityReport, Mode, check_identity, full_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _table(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    cells = [[str(h) for h in header]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# count


def cmd_count(args, out) -> int:
    family = _family(args.family)
    flt = parse_filter(args.filter)
    value = count(family, args.n, flt)
    label = "all" if flt is None else str(flt)
    if args.output == "json":
        out.write(_json({"family": family.value, "n": args.n, "filter": label, "count": value}))
    elif args.output == "csv":
        out.write(_csv(["family", "n", "filter", "count"], [[family.value, args.n, label, value]]))
    else:
        out.write(f"{value}\n")
    return EXIT_OK


def _family(name: str) -> Family:
    try:
        return Family(name.upper())
    except ValueError:
        raise UsageError(f"unknown family {name!r}; expected one of "
                         f"{', '.join(f.value for f in Family)}") from None


# ---------------------------------------------------------------------------
# table


def _report_rows(rep: IdentityReport) -> list[list]:
    return [[r.n, r.to_dict()["lhs"], r.to_dict()["rhs"], str(r.equal).lower(), r.mode.value]
            for r in rep.rows]


def cmd_table(args, out) -> int:
    try:
        ident = IdentityId(args.identity)
    except ValueError:
        raise UsageError(f"unknown identity {args.identity!r}; expected one of "
                         f"{', '.join(i.value for i in IdentityId)}") from None
    rep = check_identity(ident, args.max_n, Mode(args.mode))
    if args.output == "json":
        out.write(_json(rep.to_dict()))
    elif args.output == "csv":
        out.write(_csv(["n", "lhs", "rhs", "equal", "mode"], _report_rows(rep)))
    else:
        out.write(f"{rep.identity}: {rep.description}\n")
        out.write(_table(["n", "lhs", "rhs", "equal", "mode"], _report_rows(rep)))
    return EXIT_OK if rep.all_pass else EXIT_FAIL


# ---------------------------------------------------------------------------
# map

_MAPS: dict[str, tuple[Callable, bool, bool]] = {
    # name: (function, input is an overpartition, output is monochrome)
    "phi": (phi, False, False),
    "to_overpartition": (to_overpartition, False, False),
    "from_overpartition": (from_overpartition, True, False),
    "strip_colors": (strip_colors, False, True),
    "paint_colors": (paint_colors, False, False),
    "theta": (theta, False, False),
    "pair_merge": (pair_merge, False, True),
    "pair_split": (pair_split, False, False),
    "modular4": (modular4_transform, False, True),
}


def _format_result(result, mono: bool) -> str:
    if isinstance(result, FixedStaircase):
        return f"fixed:{result.kind.value}:k={result.k}"
    if isinstance(result, Moved):
        result = result.result
    if isinstance(result, Overpartition):
        return result.spec()
    return result.spec(colored=not mono)


def cmd_map(args, out) -> int:
    name = args.map_id.lower()
    if name not in _MAPS:
        raise UsageError(f"unknown map {args.map_id!r}; expected one of {', '.join(_MAPS)}")
    fn, over_in, mono = _MAPS[name]
    source = (Overpartition.from_spec(args.partition) if over_in
              else ColoredPartition.from_spec(args.partition))
    text = _format_result(fn(source), mono)
    given = source.spec()
    if args.output == "json":
        out.write(_json({"map": name, "input": given, "output": text}))
    elif args.output == "csv":
        out.write(_csv(["map", "input", "output"], [[name, given, text]]))
    else:
        out.write(text + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# diagram


def cmd_diagram(args, out) -> int:
    mu = ColoredPartition.from_spec(args.partition)
    if not member(Family.N, mu):
        raise UsageError(f"{args.partition!r} is not a partition into distinct parts "
                         "with even parts divisible by 4")
    d = to_modular_diagram(mu)
    picture = render_diagram(d, args.format)
    if args.output == "json":
        out.write(_json({"lambda_e": list(d.lambda_e), "lambda_c1": list(d.lambda_c1),
                         "lambda_c3": list(d.lambda_c3), "format": args.format,
                         "render": picture}))
    else:
        out.write(picture)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args, out) -> int:
    report = full_suite(args.max_enum, args.max_series)
    ok = report.strict_passed if args.strict else report.passed
    if args.output == "json":
        out.write(_json(report.to_dict()))
        return EXIT_OK if ok else EXIT_FAIL

    summary = []
    for section, reps in (("identity", report.identities), ("cross_check", report.cross_checks),
                          ("display", report.displays), ("consistency", report.consistency),
                          ("composite", report.composites)):
        for rep in reps:
            summary.append([section, rep.identity, rep.mode.value, str(rep.all_pass).lower(),
                            len(rep.failures())])
    for m in report.maps:
        summary.append(["map", m.map, "enum", str(m.all_pass).lower(), len(m.findings)])
    header = ["section", "check", "mode", "pass", "failures"]
    if args.output == "csv":
        out.write(_csv(header, summary))
    else:
        out.write(_table(header, summary))
        anomalies = report.anomalies()
        out.write(f"\nanomalies (documented, not failures): {len(anomalies)}\n")
        out.write(f"pass: {str(report.passed).lower()}  "
                  f"strict_pass: {str(report.strict_passed).lower()}\n")
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=["json", "csv", "ascii"], default=argparse.SUPPRESS,
                        help="output format (default: ascii)")

    parser = argparse.ArgumentParser(
        prog="partition-lab", parents=[common],
        description="Enumerate and verify two-color partition identities and their maps.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="count a partition family")
    p.add_argument("family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--filter", default="all",
                   help="all, or <stat>-<even|odd> with stat in even-parts, parts, "
                        "blue-parts, blue-even")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", parents=[common], help="tabulate an identity")
    p.add_argument("identity")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--mode", choices=["enum", "series"], default="enum")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("map", parents=[common], help="apply a map to one partition")
    p.add_argument("map_id")
    p.add_argument("--partition", required=True,
                   help="e.g. 8b,1b; bare values are blue; overpartitions use 3o for overlined")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("diagram", parents=[common], help="draw a 4-modular diagram")
    p.add_argument("partition", help="distinct parts, evens divisible by 4, e.g. 12,8,5,4,3,1")
    p.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("verify", parents=[common], help="run the full verification suite")
    p.add_argument("--max-enum", type=int, default=20)
    p.add_argument("--max-series", type=int, default=200)
    p.add_argument("--strict", action="store_true",
                   help="also fail on documented anomalies of the source text")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    if not hasattr(args, "output"):
        args.output = "ascii"
    try:
        return args.func(args, out)
    except (UsageError, ValueError) as exc:
        err.write(f"partition-lab: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
