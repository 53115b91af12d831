"""Covering-path planning on unit grids.

Given an m x n grid and a coverage radius k, pick stops so that every point
of the coverage region lies within l1 distance k of some stop, and route a
short path through the stops.  The package provides certified lower-bound
curves on the (length, stop-count) plane, near-optimal constructive paths,
a desk-scale exact oracle, and CLI / HTTP frontends.
"""
from .geometry import (
    DiamondBall,
    GridSpec,
    Point,
    Region,
    ball_overlap_area,
    ball_overlap_count,
    dist_to_stops,
    l1_distance,
    verify_coverage,
)
from .variants import Variant, VariantKind, classify, trivial_solution
from .curves import (
    CostPair,
    TradeoffCurve,
    RelaxedBoundary,
    f,
    f_LB_C,
    f_UB_C,
    f_LB_D,
    f_UB_D,
    lower_bound_curve,
    upper_bound_curve,
    min_length,
    min_stops,
    polyline_from_f,
    tradeoff_holds,
)
from .paths import (
    CoveringPath,
    TessellationLattice,
    build_discrete_up_down,
    build_mixed_discrete,
    build_mixed_up_down,
    build_up_down,
    build_zigzag,
    path_cost,
)
from .optimize import (
    Objective,
    Solution,
    minimize_on_curve,
    pareto_report,
    select_construction,
    solve,
)
from .oracle import (
    OracleLimits,
    brute_ball_overlap_count,
    brute_coverage_max_dist,
    exact_pareto,
)

__version__ = "0.1.0"

__all__ = [
    "DiamondBall",
    "GridSpec",
    "Point",
    "Region",
    "ball_overlap_area",
    "ball_overlap_count",
    "dist_to_stops",
    "l1_distance",
    "verify_coverage",
    "Variant",
    "VariantKind",
    "classify",
    "trivial_solution",
    "CostPair",
    "TradeoffCurve",
    "RelaxedBoundary",
    "f",
    "f_LB_C",
    "f_UB_C",
    "f_LB_D",
    "f_UB_D",
    "lower_bound_curve",
    "upper_bound_curve",
    "min_length",
    "min_stops",
    "polyline_from_f",
    "tradeoff_holds",
    "CoveringPath",
    "TessellationLattice",
    "build_discrete_up_down",
    "build_mixed_discrete",
    "build_mixed_up_down",
    "build_up_down",
    "build_zigzag",
    "path_cost",
    "Objective",
    "Solution",
    "minimize_on_curve",
    "pareto_report",
    "select_construction",
    "solve",
    "OracleLimits",
    "brute_ball_overlap_count",
    "brute_coverage_max_dist",
    "exact_pareto",
]
