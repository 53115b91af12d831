"""One serialization path for CLI and HTTP.

Exact rationals go over the wire as a float field plus a string "p/q"
companion under "<name>_exact", so consumers keep full precision without a
custom number format.  Integers stay plain integers.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .curves import CostPair, tradeoff_holds
from .geometry import GridSpec, Point, as_point
from .optimize import Solution
from .paths import CoveringPath
from .variants import Variant


def put_scalar(obj: dict, key: str, value) -> None:
    if value is None or isinstance(value, (str, bool, int)):
        obj[key] = value
        return
    if isinstance(value, Fraction):
        if value.denominator == 1:
            obj[key] = int(value)
        else:
            obj[key] = float(value)
            obj[key + "_exact"] = f"{value.numerator}/{value.denominator}"
        return
    obj[key] = float(value)


def point_to_json(p: Point) -> list:
    return [_coord(p.x), _coord(p.y)]


def _coord(v):
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return float(v)


def path_to_json(path: CoveringPath) -> dict:
    doc: dict = {"construction": path.construction}
    doc["waypoints"] = [point_to_json(p) for p in path.waypoints]
    doc["stops"] = [point_to_json(p) for p in path.stops]
    put_scalar(doc, "L", path.L)
    doc["T"] = path.T
    return doc


def path_from_json(doc: dict) -> CoveringPath:
    waypoints = [as_point(tuple(p)) for p in doc["waypoints"]]
    stops = [as_point(tuple(p)) for p in doc["stops"]]
    return CoveringPath.from_waypoints(waypoints, stops, doc.get("construction", "UAD"))


def solution_to_json(solution: Solution) -> dict:
    doc: dict = {"variant": solution.variant.kind.value}
    # k_effective is None for the all-stops variant (radius below 1).
    put_scalar(doc, "k_effective", solution.variant.k_effective)
    put_scalar(doc, "d_star", solution.d_star)
    doc["construction"] = solution.path.construction
    put_scalar(doc, "L", solution.cost.L)
    doc["T"] = solution.cost.T
    put_scalar(doc, "lower_bound_cost", solution.lower_bound_cost)
    put_scalar(doc, "observed_ratio", solution.observed_ratio)
    put_scalar(doc, "guarantee", solution.guarantee)
    doc["stops"] = [point_to_json(p) for p in solution.path.stops]
    doc["waypoints"] = [point_to_json(p) for p in solution.path.waypoints]
    return doc


def report_to_json(report: dict) -> dict:
    doc: dict = {"variant": report["variant"].kind.value}
    doc["lower"] = report["lower"].to_jsonable() if report["lower"] else None
    doc["upper"] = report["upper"].to_jsonable() if report["upper"] else None
    points = []
    for construction, L, T in report["points"]:
        entry: dict = {"construction": construction}
        put_scalar(entry, "L", L)
        entry["T"] = int(T)
        points.append(entry)
    doc["points"] = points
    return doc


def frontier_to_json(pairs: list[CostPair]) -> list[dict]:
    out = []
    for pair in pairs:
        entry: dict = {}
        put_scalar(entry, "L", pair.L)
        entry["T"] = int(pair.T)
        out.append(entry)
    return out


def verify_to_json(covered: bool, cost: CostPair, grid: GridSpec, variant: Variant) -> dict:
    try:
        tradeoff_ok = tradeoff_holds(cost, grid, variant)
    except ValueError:
        tradeoff_ok = True  # single-stop paths: the constraint is vacuous
    return {"covered": covered, "tradeoff_ok": tradeoff_ok}


def dumps(obj) -> str:
    """The one wire format: compact separators, stable key order as built,
    trailing newline."""
    return json.dumps(obj, separators=(",", ":"), allow_nan=False) + "\n"


def parse_objective(alpha, beta, minimum):
    """Build an objective from request fields: either weights or a
    single-coordinate minimum, weights (1, 1) when nothing is given."""
    from .optimize import Objective

    if minimum is not None:
        if alpha is not None or beta is not None:
            raise ValueError("give either weights or a minimum, not both")
        if minimum == "length":
            return Objective.min_length()
        if minimum == "stops":
            return Objective.min_stops()
        raise ValueError("minimum must be 'length' or 'stops'")
    if alpha is None and beta is None:
        return Objective.linear(1, 1)
    return Objective.linear(alpha if alpha is not None else 0,
                            beta if beta is not None else 0)
