"""Command line front end.

Exit codes: 0 success, 2 usage error (argparse), 1 solver/runtime error.
JSON bodies are produced by the same serializer the HTTP service uses, so
identical requests print identical bytes.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .geometry import GridSpec, Region, as_rational, verify_coverage
from .optimize import pareto_report, solve
from .oracle import OracleLimits, exact_pareto
from .render import path_svg, write_report
from .serialize import (
    dumps,
    frontier_to_json,
    parse_objective,
    path_from_json,
    report_to_json,
    solution_to_json,
    verify_to_json,
)
from .variants import VariantKind, classify


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gridcover",
        description="Covering-path planning on a grid: solve, sweep, verify, render.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def grid_flags(p: argparse.ArgumentParser, k_help="coverage radius (accepts 3/2 or 1.5)"):
        p.add_argument("--m", type=int, required=True, help="grid height (taller side)")
        p.add_argument("--n", type=int, required=True, help="grid width")
        p.add_argument("--k", required=True, help=k_help)

    def objective_flags(p: argparse.ArgumentParser):
        p.add_argument("--alpha", help="weight on path length")
        p.add_argument("--beta", help="weight on stop count")
        p.add_argument("--min", dest="minimum", choices=("length", "stops"),
                       help="minimize a single coordinate instead of a weighted sum")
        p.add_argument("--relaxed", action="store_true",
                       help="allow non-integer stops (continuous relaxation)")

    p = sub.add_parser("solve", help="solve one instance and print the solution JSON")
    grid_flags(p)
    objective_flags(p)
    p.add_argument("--svg", type=Path, help="also write an SVG rendering here")
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("frontier", help="lower/upper curves plus a construction sweep")
    grid_flags(p)
    p.add_argument("--samples", type=int, default=9)
    p.set_defaults(handler=_cmd_frontier)

    p = sub.add_parser("verify", help="check a path JSON file for coverage and the trade-off")
    grid_flags(p)
    p.add_argument("--path", type=Path, required=True, help="path JSON file")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("oracle", help="exact Pareto frontier of a tiny instance")
    grid_flags(p, k_help="coverage radius (positive integer)")
    p.add_argument("--variant", choices=("C", "D"), required=True)
    p.add_argument("--max-points", type=int, default=25)
    p.add_argument("--max-stops", type=int, default=9)
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("svg", help="solve and write the SVG rendering")
    grid_flags(p)
    objective_flags(p)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--no-diamonds", action="store_true")
    p.set_defaults(handler=_cmd_svg)

    p = sub.add_parser("report", help="write frontier.csv and figures to a directory")
    grid_flags(p)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--samples", type=int, default=9)
    p.set_defaults(handler=_cmd_report)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(handler=_cmd_serve)
    return parser


def _grid(args) -> GridSpec:
    return GridSpec(args.m, args.n, as_rational(args.k))


def _cmd_solve(args) -> int:
    grid = _grid(args)
    objective = parse_objective(args.alpha, args.beta, args.minimum)
    solution = solve(grid, grid.k_raw, objective, relax=args.relaxed)
    if args.svg:
        radius = solution.variant.k_effective
        args.svg.write_text(path_svg(solution.path, grid, radius=radius))
    sys.stdout.write(dumps(solution_to_json(solution)))
    return 0


def _cmd_frontier(args) -> int:
    grid = _grid(args)
    report = pareto_report(grid, grid.k_raw, args.samples)
    sys.stdout.write(dumps(report_to_json(report)))
    return 0


def _cmd_verify(args) -> int:
    grid = _grid(args)
    path = path_from_json(json.loads(args.path.read_text()))
    variant = classify(grid.k_raw)
    if variant.kind is VariantKind.C:
        region, radius = Region.RECTANGLE, variant.k_effective
    elif variant.kind is VariantKind.D:
        region, radius = Region.LATTICE, variant.k_effective
    else:
        region, radius = Region.LATTICE, grid.k_raw
    covered = verify_coverage(path.stops, grid, region, radius)
    sys.stdout.write(dumps(verify_to_json(covered, path.cost(), grid, variant)))
    return 0


def _cmd_oracle(args) -> int:
    grid = _grid(args)
    k = as_rational(args.k)
    if not isinstance(k, int):
        raise ValueError("oracle radius must be a positive integer")
    limits = OracleLimits(max_lattice_points=args.max_points, max_stops=args.max_stops)
    frontier = exact_pareto(grid, args.variant, k, limits)
    sys.stdout.write(dumps(frontier_to_json(frontier)))
    return 0


def _cmd_svg(args) -> int:
    grid = _grid(args)
    objective = parse_objective(args.alpha, args.beta, args.minimum)
    solution = solve(grid, grid.k_raw, objective, relax=args.relaxed)
    radius = None if args.no_diamonds else solution.variant.k_effective
    args.out.write_text(path_svg(solution.path, grid, radius=radius))
    sys.stdout.write(dumps({"written": str(args.out)}))
    return 0


def _cmd_report(args) -> int:
    grid = _grid(args)
    files = write_report(grid, grid.k_raw, args.out, args.samples)
    sys.stdout.write(dumps({name: str(p) for name, p in files.items()}))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ValueError, TypeError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
