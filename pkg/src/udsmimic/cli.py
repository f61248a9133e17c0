"""Command-line entry point: validate, place, combine, chart, table, diff."""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from .benefits import ALL_BENEFITS
from .catalog import Catalog, CatalogError, UnknownSchemeError, load_catalog, reference_catalog
from .chart import ChartConfig, render_svg
from .combiner import combine_profiles
from .placement import combine_markers, place
from .report import TableSpec, render_diff, render_placements, render_table
from .validator import count_errors, validate

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _add_source(p: argparse.ArgumentParser, positional: bool = True) -> None:
    if positional:
        p.add_argument("catalog", nargs="?", help="catalog file")
    p.add_argument("--builtin", action="store_true", help="use the embedded reference catalog")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="udsmimic",
        description="Evaluate web-authentication schemes on the exposure/mimicry chart.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("validate", help="lint a catalog")
    _add_source(p)

    p = sub.add_parser("place", help="print chart placements")
    _add_source(p)
    p.add_argument("--scheme", metavar="ID", help="only this scheme")

    p = sub.add_parser("combine", help="derive a multi-factor scheme")
    _add_source(p)
    p.add_argument("--schemes", required=True, metavar="A,B[,...]")
    p.add_argument("--name", metavar="N")
    p.add_argument("--emit-record", action="store_true", help="also print a [combined] record")

    p = sub.add_parser("chart", help="render the chart as SVG")
    _add_source(p)
    p.add_argument("-o", "--output", metavar="FILE", default="-", help="output path ('-' = stdout)")
    p.add_argument("--ascii-labels", action="store_true")
    p.add_argument("--include-combined", action="store_true", help="also draw combined schemes")

    p = sub.add_parser("table", help="render the benefit matrix")
    _add_source(p)
    p.add_argument("--format", choices=("text", "csv", "md", "markdown"), default="text")
    p.add_argument("--ascii", action="store_true", help="ASCII rating symbols")

    p = sub.add_parser("diff", help="list benefits where two schemes differ")
    p.add_argument("args", nargs="+", metavar="[CATALOG] A B")
    _add_source(p, positional=False)
    return parser


def _load(args: argparse.Namespace, path: str | None) -> Catalog:
    if args.builtin and path:
        raise UsageError("give either a catalog path or --builtin, not both")
    if args.builtin:
        return reference_catalog()
    if not path:
        raise UsageError("a catalog path or --builtin is required")
    return load_catalog(path)


def _cmd_validate(args, catalog: Catalog, out: TextIO, err: TextIO) -> int:
    findings = validate(catalog)
    for f in findings:
        print(f.render(), file=err)
    errors = count_errors(findings)
    warnings = sum(f.severity == "warning" for f in findings)
    print(f"{errors} error(s), {warnings} warning(s), {len(findings) - errors - warnings} info", file=out)
    return EXIT_FAIL if errors else EXIT_OK


def _cmd_place(args, catalog: Catalog, out: TextIO, err: TextIO) -> int:
    if args.scheme is not None and args.scheme not in catalog:
        raise UnknownSchemeError(args.scheme)
    out.write(render_placements(catalog, args.scheme))
    return EXIT_OK


def _cmd_combine(args, catalog: Catalog, out: TextIO, err: TextIO) -> int:
    ids = [s.strip() for s in args.schemes.split(",") if s.strip()]
    if len(ids) < 2:
        raise UsageError("--schemes needs at least two ids")
    parts = [catalog.profile(i) for i in ids]
    combined = combine_profiles(parts, name=args.name)
    pl = place(combined)
    mx, my = combine_markers(*(place(p) for p in parts))
    print(f"{combined.id}: {combined.name}", file=out)
    for benefit in ALL_BENEFITS:
        print(f"{benefit}={combined.vector[benefit].word}", file=out)
    print(
        f"placement (vector rule): {pl.vseg.name} {pl.vsub} {pl.hseg.token} {pl.hsub} "
        f"x={pl.x:g} y={pl.y:g}",
        file=out,
    )
    print(f"placement (marker rule): x={mx:g} y={my:g}", file=out)
    if args.emit_record:
        print(file=out)
        print(f"[combined {combined.id}]", file=out)
        print(f"parts = {','.join(ids)}", file=out)
        if args.name:
            print(f"name = {args.name}", file=out)
    return EXIT_OK


def _cmd_chart(args, catalog: Catalog, out: TextIO, err: TextIO) -> int:
    config = ChartConfig(ascii_labels=args.ascii_labels, include_combined=args.include_combined)
    svg = render_svg(catalog, config)
    if args.output == "-":
        out.write(svg)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return EXIT_OK


def _cmd_table(args, catalog: Catalog, out: TextIO, err: TextIO) -> int:
    out.write(render_table(catalog, TableSpec(args.format, ascii=args.ascii)))
    return EXIT_OK


def _cmd_diff(args, catalog: Catalog, out: TextIO, err: TextIO) -> int:
    a, b = args.args[-2:]
    out.write(render_diff(catalog.profile(a), catalog.profile(b)))
    return EXIT_OK


_COMMANDS = {
    "validate": _cmd_validate,
    "place": _cmd_place,
    "combine": _cmd_combine,
    "chart": _cmd_chart,
    "table": _cmd_table,
    "diff": _cmd_diff,
}


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.command == "diff":
        expected = 2 if args.builtin else 3
        if len(args.args) != expected:
            parser.print_usage(err)
            print(f"udsmimic diff: expected {'A B' if args.builtin else 'CATALOG A B'}", file=err)
            return EXIT_USAGE
        path = None if args.builtin else args.args[0]
    else:
        path = args.catalog

    try:
        catalog = _load(args, path)
        return _COMMANDS[args.command](args, catalog, out, err)
    except UsageError as exc:
        parser.print_usage(err)
        print(f"udsmimic: {exc}", file=err)
        return EXIT_USAGE
    except CatalogError as exc:
        print(str(exc), file=err)
        return EXIT_USAGE
    except OSError as exc:
        print(f"udsmimic: {exc}", file=err)
        return EXIT_USAGE
    except UnknownSchemeError as exc:
        print(f"udsmimic: {exc}", file=err)
        return EXIT_FAIL


def main() -> None:
    sys.exit(run())
