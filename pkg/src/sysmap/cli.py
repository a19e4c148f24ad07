"""Command-line interface: analyze, report, serve."""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .bundle import read_bundle
from .errors import InputError, SysmapError
from .log import ScanLog
from .models import AnalysisConfig, LayoutConfig
from .pipeline import run_analyze
from .server import run_serve


def _parse_version_input(raw: str) -> tuple[str, str]:
    label, sep, root = raw.partition("=")
    if not sep or not label or not root:
        raise InputError(f"--version expects LABEL=PATH, got '{raw}'")
    return label, root


def _cmd_analyze(args: argparse.Namespace) -> int:
    layout = LayoutConfig(min_loc_for_building=args.min_loc)
    config = AnalysisConfig(
        version_inputs=[_parse_version_input(raw) for raw in args.version],
        layout=layout,
        output_path=args.output,
        project_name=args.project,
        include_timestamp=not args.no_timestamp,
    )
    bundle = run_analyze(config, ScanLog())
    total = sum(s.aggregates.class_count for s in bundle.snapshots)
    print(
        f"wrote {args.output}: {len(bundle.snapshots)} snapshot(s), "
        f"{total} class(es)"
    )
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    bundle = read_bundle(args.bundle)
    headers = ("Version", "Packages", "Classes", "LOC", "WMC", "Skyscrapers", "Heavy")
    rows = [headers]
    detections = {d.version_label: d for d in bundle.evolution.detections}
    for agg in bundle.evolution.versions:
        det = detections[agg.version_label]
        rows.append(
            (
                agg.version_label,
                str(agg.package_count),
                str(agg.class_count),
                str(agg.total_loc),
                str(agg.total_wmc),
                str(len(det.skyscrapers)),
                str(len(det.heavy_classes)),
            )
        )
    widths = [max(len(row[col]) for row in rows) for col in range(len(headers))]
    for idx, row in enumerate(rows):
        line = "  ".join(cell.ljust(widths[col]) for col, cell in enumerate(row))
        print(line.rstrip())
        if idx == 0:
            print("  ".join("-" * widths[col] for col in range(len(headers))))
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    return run_serve(args.bundle, args.port, args.assets, host=args.host)


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sysmap",
        description="Java metrics analyzer with a 3D city view of each version.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="analyze source trees into a city bundle")
    analyze.add_argument("--project", default="project", help="project name for the bundle")
    analyze.add_argument(
        "--version",
        action="append",
        required=True,
        metavar="LABEL=PATH",
        help="a version to analyze; repeat for evolution (order preserved)",
    )
    analyze.add_argument("-o", "--output", required=True, help="bundle output path")
    analyze.add_argument(
        "--min-loc",
        type=int,
        default=LayoutConfig().min_loc_for_building,
        help="minimum class LOC to draw a building (default %(default)s)",
    )
    analyze.add_argument(
        "--no-timestamp",
        action="store_true",
        help="omit generatedAt for byte-reproducible output",
    )
    analyze.set_defaults(func=_cmd_analyze)

    report = sub.add_parser("report", help="print the evolution table from a bundle")
    report.add_argument("bundle", help="path to a bundle written by analyze")
    report.set_defaults(func=_cmd_report)

    serve = sub.add_parser("serve", help="serve a bundle (and viewer assets) over HTTP")
    serve.add_argument("bundle", help="path to a bundle written by analyze")
    serve.add_argument("--port", type=int, default=8080)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--assets", default=None, help="directory with the built viewer")
    serve.set_defaults(func=_cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SysmapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
