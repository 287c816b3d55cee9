"""Command-line front-end: ``circproto {bounds,findpugs,verify,render,chart}``."""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from circproto import bounds
from circproto.errors import ContractViolation
from circproto.findpugs import PrototypeSolution, SearchExhaustedError, find_pugs
from circproto.oracle import rasterize_regions, verify_separation
from circproto.render import FigureStyle, line_chart_svg, render_figure


class CliError(Exception):
    """Reported as ``error: ...`` with exit status 2."""


def _fmt(value):
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        if not math.isfinite(value):
            return str(value)
        return float(f"{value:.12g}")
    if isinstance(value, dict):
        return {str(k): _fmt(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_fmt(v) for v in value]
    if hasattr(value, "item"):
        return _fmt(value.item())
    raise TypeError(f"cannot serialize {type(value).__name__}")


def dumps(data) -> str:
    """Sorted-key JSON with floats fixed at 12 significant digits."""
    return json.dumps(_fmt(data), sort_keys=True, indent=2) + "\n"


def _emit(args, payload: bytes | str) -> None:
    data = payload.encode("utf-8") if isinstance(payload, str) else payload
    if args.output in (None, "-"):
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
        return
    try:
        Path(args.output).write_bytes(data)
    except OSError as exc:
        raise CliError(f"cannot write {args.output}: {exc.strerror or exc}") from exc


def load_solution(path: str) -> PrototypeSolution:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise CliError(f"{path}:1:1: expected a JSON object")
    try:
        return PrototypeSolution.from_dict(data)
    except (ContractViolation, ValueError, TypeError) as exc:
        raise CliError(f"{path}: {exc}") from exc


def bounds_table(T: int) -> dict:
    rows = []
    for t in range(T):
        row = bounds.bounds_row(t)
        rows.append(
            {
                "t": t,
                "upper": row.upper,
                "upper_count": 1 if t == 0 else bounds.strict_count(row.upper),
                "lower": row.lower,
                "lower_count": 1 if t == 0 else bounds.strict_count(row.lower),
                "equal_exact": row.equal_exact,
                "first_order": row.first_order,
                "second_order": row.second_order,
            }
        )
    theory = bounds.theory_sequence(T)
    outer = T - 1
    # every total includes the single prototype at the origin
    totals = {
        "worst_case": sum(r["upper_count"] for r in rows),
        "theory": sum(theory),
        "second_order": sum(r["second_order"] for r in rows),
        "equal_count": 1 + (bounds.equal_count_exact(outer) if outer >= 1 else 0),
        "closed_form": 1 + bounds.theory_closed_form(outer),
    }
    return {"circles": T, "rows": rows, "theory": theory, "totals": totals}


def cmd_bounds(args) -> int:
    _emit(args, dumps(bounds_table(args.circles)))
    return 0


def cmd_findpugs(args) -> int:
    try:
        sol = find_pugs(args.circles, args.c, strict=not args.relaxed, threads=args.threads)
    except SearchExhaustedError as exc:
        raise CliError(str(exc)) from exc
    _emit(args, dumps({**sol.to_dict(), "circles": len(sol)}))
    return 0


def cmd_verify(args) -> int:
    sol = load_solution(args.solution)
    report = verify_separation(sol, args.samples, threads=args.threads)
    _emit(args, dumps(report.to_dict()))
    return 0 if report.perfect else 1


def cmd_render(args) -> int:
    sol = load_solution(args.solution)
    fmt = args.format if args.format in ("svg", "ppm") else "svg"
    grid = rasterize_regions(sol, args.width, args.height, args.extent, threads=args.threads)
    _emit(args, render_figure(grid, sol, FigureStyle.for_classes(len(sol)), fmt))
    return 0


def cmd_chart(args) -> int:
    ts = list(range(1, args.circles + 1))
    series = {
        "first order": [bounds.first_order_count(t) for t in ts],
        "second order": [bounds.second_order_count(t) for t in ts],
    }
    _emit(args, line_chart_svg(ts, series, title="Prototypes required on circle t"))
    return 0


COMMANDS = {
    "bounds": cmd_bounds,
    "findpugs": cmd_findpugs,
    "verify": cmd_verify,
    "render": cmd_render,
    "chart": cmd_chart,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--circles", type=int, default=14, help="number of circles T (default 14)")
    common.add_argument("--c", type=float, default=1.0, help="radius step (default 1.0)")
    common.add_argument("--relaxed", action="store_true", help="accept equality in the separation test")
    common.add_argument("--samples", type=int, default=10_000, help="oracle samples per circle")
    common.add_argument("--width", type=int, default=1024)
    common.add_argument("--height", type=int, default=1024)
    common.add_argument("--extent", type=float, default=None, help="half-width of the rendered square")
    common.add_argument("--output", "-o", default=None, help="output file (default stdout)")
    common.add_argument("--format", choices=("json", "svg", "ppm"), default=None)
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1)

    parser = argparse.ArgumentParser(
        prog="circproto",
        description="Minimal 1-NN prototypes for concentric circular classes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("bounds", parents=[common], help="analytic per-circle counts as JSON")
    sub.add_parser("findpugs", parents=[common], help="greedy prototype search as JSON")
    p = sub.add_parser("verify", parents=[common], help="brute-force 1-NN check of a solution file")
    p.add_argument("solution")
    p = sub.add_parser("render", parents=[common], help="decision-region figure of a solution file")
    p.add_argument("solution")
    sub.add_parser("chart", parents=[common], help="first- vs second-order counts as an SVG chart")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.circles < 1:
        parser.error("--circles must be >= 1")
    if not (math.isfinite(args.c) and args.c > 0):
        parser.error("--c must be positive")
    if args.samples < 8:
        parser.error("--samples must be >= 8")
    if args.width < 1 or args.height < 1:
        parser.error("--width and --height must be positive")
    if args.extent is not None and not args.extent > 0:
        parser.error("--extent must be positive")
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    if args.command in ("bounds", "findpugs", "verify") and args.format not in (None, "json"):
        parser.error(f"{args.command} only writes json")
    try:
        return COMMANDS[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
