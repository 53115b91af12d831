"""HTTP facade over the solver.

Handlers are stateless; sync endpoints run on the framework's bounded worker
pool.  Bodies come from the same serializer as the CLI, byte for byte.
Validation failures return 400 with {error, field}; oracle limit hits return
422.
"""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response

from .geometry import GridSpec, as_rational
from .optimize import pareto_report, solve
from .oracle import LIMIT_MESSAGE, OracleLimits, exact_pareto
from .render import path_svg
from .serialize import (
    dumps,
    frontier_to_json,
    parse_objective,
    report_to_json,
    solution_to_json,
)

MEDIA_JSON = "application/json"


class ParamError(ValueError):
    def __init__(self, field: str, message: str):
        super().__init__(message)
        self.field = field


def _positive_int(params, field: str) -> int:
    raw = params.get(field)
    if raw is None:
        raise ParamError(field, f"{field} is required")
    try:
        value = int(raw)
    except ValueError:
        raise ParamError(field, f"{field} must be an integer") from None
    if value <= 0:
        raise ParamError(field, f"{field} must be positive")
    return value


def _optional_int(params, field: str, default: int) -> int:
    if params.get(field) is None:
        return default
    return _positive_int(params, field)


def _positive_rational(params, field: str):
    raw = params.get(field)
    if raw is None:
        raise ParamError(field, f"{field} is required")
    try:
        value = as_rational(raw)
    except (ValueError, TypeError, ZeroDivisionError):
        raise ParamError(field, f"{field} must be a rational number") from None
    if value <= 0:
        raise ParamError(field, f"{field} must be positive")
    return value


def _rational_or_none(params, field: str):
    raw = params.get(field)
    if raw is None:
        return None
    try:
        return as_rational(raw)
    except (ValueError, TypeError, ZeroDivisionError):
        raise ParamError(field, f"{field} must be a rational number") from None


def _grid_of(params) -> GridSpec:
    m = _positive_int(params, "m")
    n = _positive_int(params, "n")
    k = _positive_rational(params, "k")
    try:
        return GridSpec(m, n, k)
    except ValueError as exc:
        raise ParamError("m", str(exc)) from None


def _objective_of(params):
    alpha = _rational_or_none(params, "alpha")
    beta = _rational_or_none(params, "beta")
    minimum = params.get("min")
    try:
        return parse_objective(alpha, beta, minimum)
    except ValueError as exc:
        raise ParamError("objective", str(exc)) from None


def create_app() -> FastAPI:
    app = FastAPI(title="gridcover", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    @app.exception_handler(ParamError)
    async def on_param_error(request: Request, exc: ParamError):
        return JSONResponse(status_code=400, content={"error": str(exc), "field": exc.field})

    @app.get("/api/solve")
    def api_solve(request: Request):
        params = request.query_params
        grid = _grid_of(params)
        objective = _objective_of(params)
        relax = params.get("relaxed") in ("1", "true", "yes")
        solution = solve(grid, grid.k_raw, objective, relax=relax)
        return Response(dumps(solution_to_json(solution)), media_type=MEDIA_JSON)

    @app.get("/api/frontier")
    def api_frontier(request: Request):
        params = request.query_params
        grid = _grid_of(params)
        samples = _optional_int(params, "samples", 9)
        if samples < 2:
            raise ParamError("samples", "samples must be at least 2")
        report = pareto_report(grid, grid.k_raw, samples)
        return Response(dumps(report_to_json(report)), media_type=MEDIA_JSON)

    @app.get("/api/path.svg")
    def api_path_svg(request: Request):
        params = request.query_params
        grid = _grid_of(params)
        objective = _objective_of(params)
        relax = params.get("relaxed") in ("1", "true", "yes")
        solution = solve(grid, grid.k_raw, objective, relax=relax)
        radius = None if params.get("diamonds") == "0" else solution.variant.k_effective
        return Response(path_svg(solution.path, grid, radius=radius),
                        media_type="image/svg+xml")

    @app.get("/api/oracle")
    def api_oracle(request: Request):
        params = request.query_params
        grid = _grid_of(params)
        k = _positive_int(params, "k")
        variant = params.get("variant")
        if variant not in ("C", "D"):
            raise ParamError("variant", "variant must be C or D")
        limits = OracleLimits(
            max_lattice_points=_optional_int(params, "max_points", 25),
            max_stops=_optional_int(params, "max_stops", 9),
        )
        try:
            frontier = exact_pareto(grid, variant, k, limits)
        except ValueError as exc:
            if str(exc) == LIMIT_MESSAGE:
                return JSONResponse(status_code=422, content={"error": LIMIT_MESSAGE})
            raise
        return Response(dumps(frontier_to_json(frontier)), media_type=MEDIA_JSON)

    return app
