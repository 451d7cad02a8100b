"""Command line interface: ``sexrecip <command> ...``.

Exit status is 0 on success, 1 for usage, I/O and parse errors, and 2 for
domain failures (non-regular input, a pair that does not multiply to a
power of 60, or a reconstruction that misses its targets).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from .reconstruct import (
    entry_to_dict,
    load_golden,
    reconstruct,
    render_text,
    report_to_dict,
    summary_lines,
)
from .regular import NotRegular, ReciprocalPair, reciprocal, verify_pair
from .sexcore import ParseError, SexagesimalError, SexNumber, format_number, parse
from .tables import FamilySpec, InvalidFamily, generate_family, table_one

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2
FORMATS = ("text", "csv", "jsonl", "json")


class UsageError(Exception):
    pass


def _row_dict(pair):
    family, n = pair.provenance
    return {"n": n, "head": str(pair.head), "tail": str(pair.tail), "family": family}


def render_family(table, fmt):
    rows = table.rows
    if fmt == "text":
        return "".join(f"{p.head} {p.tail}\n" for p in rows)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "head", "tail", "family"])
        for p in rows:
            d = _row_dict(p)
            writer.writerow([d["n"], d["head"], d["tail"], d["family"]])
        return buf.getvalue()
    if fmt == "jsonl":
        return "".join(json.dumps(_row_dict(p)) + "\n" for p in rows)
    body = {"family": table.spec.family_id, "rows": [_row_dict(p) for p in rows]}
    return json.dumps(body, indent=2) + "\n"


def render_report(report, fmt):
    if fmt == "text":
        return render_text(report)
    if fmt == "json":
        return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n"
    if fmt == "jsonl":
        return "".join(json.dumps(entry_to_dict(e)) + "\n" for e in report.entries)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["head", "tail", "provenance"])
    for e in report.entries:
        prov = " ".join(f"{f}@{n}:{c}" for f, n, c in e.provenance)
        writer.writerow([str(e.head), str(e.tail), prov])
    return buf.getvalue()


_MULTIPLIER = re.compile(r"(\d+)(?:\^(\d+))?")


def parse_multiplier(text):
    """``"5^3"`` -> ``(5, 3)``; ``"5"`` -> ``(5, 1)``; ``"1"`` -> ``(1, 0)``."""
    m = _MULTIPLIER.fullmatch(text.strip())
    if not m:
        raise UsageError(f"bad multiplier {text!r}; expected BASE or BASE^EXP")
    base = int(m.group(1))
    exp = int(m.group(2)) if m.group(2) is not None else (0 if base == 1 else 1)
    return base, exp


def cmd_recip(args, out):
    x = parse(args.number)
    pair = ReciprocalPair(x, reciprocal(x))
    if args.format == "json":
        out.write(json.dumps({"head": str(pair.head), "tail": str(pair.tail)}) + "\n")
    else:
        out.write(f"igi {pair.head} {pair.tail}\n")
    return EXIT_OK


def cmd_family(args, out):
    base, exp = parse_multiplier(args.multiplier)
    try:
        spec = FamilySpec(args.generator, base, exp, args.n)
    except InvalidFamily as exc:
        raise UsageError(str(exc)) from exc
    if not spec.is_standard() and not args.unsafe:
        raise UsageError(f"{spec.family_id} is not a catalogued family (use --unsafe)")
    out.write(render_family(generate_family(spec), args.format))
    return EXIT_OK


def cmd_table1(args, out):
    out.write(render_family(table_one(), args.format))
    return EXIT_OK


def cmd_reconstruct(args, out):
    golden = None
    if args.golden:
        try:
            golden = load_golden(args.golden)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot read golden file {args.golden}: {exc}") from exc
    report = reconstruct(golden)
    out.write(render_report(report, args.format))
    for line in summary_lines(report):
        print(line, file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_DOMAIN


def cmd_parse(args, out):
    x = parse(args.number)
    if args.format == "json":
        out.write(json.dumps({"digits": list(x.digits), "point": x.point}) + "\n")
    else:
        out.write(f"{format_number(x)} digits={','.join(map(str, x.digits))} point={x.point}\n")
    return EXIT_OK


def cmd_format(args, out):
    try:
        digits = [int(d) for d in args.digits.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad digit list {args.digits!r}") from exc
    x = SexNumber.from_parts(digits, args.point)
    out.write(format_number(x, args.style) + "\n")
    return EXIT_OK


def cmd_verify_pair(args, out):
    pair = ReciprocalPair(parse(args.head), parse(args.tail))
    ok = verify_pair(pair)
    if args.format == "json":
        out.write(json.dumps({"head": str(pair.head), "tail": str(pair.tail), "ok": ok}) + "\n")
    else:
        out.write(f"igi {pair.head} {pair.tail}: {'ok' if ok else 'not a reciprocal pair'}\n")
    return EXIT_OK if ok else EXIT_DOMAIN


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sexrecip", description="Exact sexagesimal reciprocal tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, formats=("text", "json")):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=formats, default="text")
        p.set_defaults(func=func)
        return p

    p = add("recip", cmd_recip, "reciprocal of a regular number")
    p.add_argument("number")

    p = add("family", cmd_family, "one basic doubling/tripling table", FORMATS)
    p.add_argument("generator", type=int)
    p.add_argument("multiplier", help="1, 3^j or 5^j")
    p.add_argument("--n", type=int, default=30)
    p.add_argument("--unsafe", action="store_true", help="allow uncatalogued families")

    add("table1", cmd_table1, "the 2^n*5^3 doubling table", FORMATS)

    p = add("reconstruct", cmd_reconstruct, "rebuild the 1-to-3 table", FORMATS)
    p.add_argument("--golden", help="JSON file of reference pairs (report schema)")

    p = add("parse", cmd_parse, "show digits and point of a number")
    p.add_argument("number")

    p = add("format", cmd_format, "render digits and point", ("text",))
    p.add_argument("digits", help="comma-separated decimal digits, e.g. 1,6,40")
    p.add_argument("--point", type=int, default=0)
    p.add_argument("--style", choices=("pointed", "integer"), default="pointed")

    p = add("verify-pair", cmd_verify_pair, "check head * tail is a power of 60")
    p.add_argument("head")
    p.add_argument("tail")
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except NotRegular as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (UsageError, ParseError, SexagesimalError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
