"""End-to-end solver.

classify the radius -> build the certified lower-bound curve -> minimize the
objective over it -> translate the optimizing consecutive-stop distance d*
into a constructive plan -> build the path -> report exact costs, the curve
optimum, their ratio, and the a-priori guarantee for the variant.

Linear objectives are minimized by an exact vertex scan: over a convex
polyline a linear functional attains its minimum at a vertex (the terminal
constant-T ray can only beat the last vertex in T, never strictly).  Ties
break toward the smaller distance abscissa.  General convex objectives use
golden-section search on the distance parameter; the boundary is monotone in
(L, T), so a convex increasing objective is unimodal along it.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Optional

from .curves import (
    CostPair,
    RelaxedBoundary,
    TradeoffCurve,
    lower_bound_curve,
    min_length,
    min_stops,
    upper_bound_curve,
)
from .geometry import GridSpec, Point, Rational, as_rational, verify_coverage, Region
from .paths import (
    CoveringPath,
    build_discrete_up_down,
    build_mixed_discrete,
    build_mixed_up_down,
    build_up_down,
    build_zigzag,
    discrete_bounds,
    mixed_bounds,
    mixed_discrete_bounds,
    up_down_bounds,
    zigzag_bounds,
)
from .variants import Variant, VariantKind, classify, relaxed, trivial_solution

GOLDEN_TOL = 1e-9
GOLDEN_MAX_ITER = 200
# Pragmatic floor when the optimizer drives d toward 0 on the smooth relaxed
# boundary (minimum length is an infimum there, not attained).
RC_MIN_DISTANCE = Fraction(1, 2)


@dataclass(frozen=True)
class Objective:
    """Increasing cost of (L, T): linear weights, a single-coordinate
    minimum, or a caller-supplied convex increasing callback."""

    kind: str  # "linear" | "min_length" | "min_stops" | "convex"
    alpha: Rational = 0
    beta: Rational = 0
    fn: Optional[Callable] = None

    @classmethod
    def linear(cls, alpha, beta) -> "Objective":
        alpha, beta = as_rational(alpha), as_rational(beta)
        if alpha < 0 or beta < 0 or (alpha == 0 and beta == 0):
            raise ValueError("linear weights must be nonnegative and not both zero")
        return cls("linear", alpha, beta)

    @classmethod
    def min_length(cls) -> "Objective":
        return cls("min_length", 1, 0)

    @classmethod
    def min_stops(cls) -> "Objective":
        return cls("min_stops", 0, 1)

    @classmethod
    def convex(cls, fn: Callable) -> "Objective":
        return cls("convex", fn=fn)

    def value(self, L, T):
        if self.kind == "convex":
            return self.fn(L, T)
        return self.alpha * L + self.beta * T


@dataclass(frozen=True)
class ConstructionPlan:
    kind: str  # UAD | MIXED | DISCRETE | ZIGZAG | MIXED_DISCRETE | SINGLE
    d: Rational | None = None
    d2: Rational | None = None
    gamma: Rational | None = None

    def describe(self) -> str:
        if self.kind == "UAD":
            return f"UAD(d={self.d})"
        if self.kind == "MIXED":
            return f"MIXED(d={self.d},gamma={self.gamma})"
        if self.kind == "DISCRETE":
            return f"DISCRETE(d={self.d})"
        if self.kind == "ZIGZAG":
            return "ZIGZAG"
        if self.kind == "MIXED_DISCRETE":
            return f"MIXED_DISCRETE(d1={self.d},d2={self.d2},gamma={self.gamma})"
        return self.kind


@dataclass
class Solution:
    """A solve result: the path, its exact cost, the curve optimum it is
    measured against, and the variant's proven approximation ratio."""

    variant: Variant
    path: CoveringPath
    cost: CostPair
    lower_bound_cost: Rational | float | None
    observed_ratio: Rational | float | None
    guarantee: Rational | float | str
    d_star: Rational | float | None
    params: dict


def minimize_on_curve(curve, objective: Objective):
    """Minimize the objective over a boundary curve; returns (L*, T*, d*)."""
    if getattr(curve, "degenerate", False):
        raise ValueError("curve is degenerate: a single stop suffices")
    if isinstance(curve, RelaxedBoundary):
        return _minimize_relaxed(curve, objective)
    if not isinstance(curve, TradeoffCurve):
        raise TypeError("expected a trade-off curve")
    if objective.kind == "min_length":
        (L, T), d = curve.vertices[0], curve.abscissae[0]
        return L, T, d
    if objective.kind == "min_stops":
        (L, T), d = curve.vertices[-1], curve.abscissae[-1]
        return L, T, d
    if objective.kind == "linear":
        if objective.alpha == 0 and objective.beta == 0:
            raise ValueError("objective weights are both zero")
        best = None
        for (L, T), d in zip(curve.vertices, curve.abscissae):
            value = objective.value(L, T)
            if best is None or value < best[0]:
                best = (value, L, T, d)
        _, L, T, d = best
        return L, T, d
    if objective.kind == "convex":
        _check_increasing(objective)
        lo, hi = float(curve.abscissae[0]), float(curve.abscissae[-1])
        d = _golden_section(
            lambda x: float(objective.value(*_point_on(curve, x))), lo, hi
        )
        L, T = _point_on(curve, d)
        return L, T, as_rational(d)
    raise ValueError(f"unknown objective kind {objective.kind!r}")


def _point_on(curve: TradeoffCurve, d_float: float):
    p = curve.point_at_d(as_rational(d_float))
    return p.L, p.T


def _minimize_relaxed(curve: RelaxedBoundary, objective: Objective):
    k = curve.k
    if objective.kind == "min_stops" or (objective.kind == "linear" and objective.alpha == 0):
        d = 2 * k
        return curve.L_of(d), curve.T_of(d), d
    if objective.kind == "min_length" or (objective.kind == "linear" and objective.beta == 0):
        # L decreases toward d -> 0; the infimum is rhs/(2k) and is not attained.
        return curve.min_L, math.inf, 0
    if objective.kind == "linear":
        # stationary point of alpha*L(d) + beta*T(d):  alpha*d^2/2 = beta*(2k - d)
        a, b = float(objective.alpha), float(objective.beta)
        d = (-b + math.sqrt(b * b + 4 * float(k) * a * b)) / a
        d = min(max(d, 0.0), float(2 * k))
        if d <= 0:
            return curve.min_L, math.inf, 0
        d = as_rational(d)
        return curve.L_of(d), curve.T_of(d), d
    if objective.kind == "convex":
        _check_increasing(objective)
        lo, hi = float(2 * k) * 1e-12, float(2 * k)
        d = _golden_section(
            lambda x: float(objective.value(curve.L_of(as_rational(x)), curve.T_of(as_rational(x)))),
            lo,
            hi,
        )
        d = as_rational(d)
        return curve.L_of(d), curve.T_of(d), d
    raise ValueError(f"unknown objective kind {objective.kind!r}")


def _check_increasing(objective: Objective):
    probes = [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)]
    values = [objective.value(L, T) for L, T in probes]
    if any(b < a for a, b in zip(values, values[1:])):
        raise ValueError("objective must be increasing")


def _golden_section(fn, lo: float, hi: float) -> float:
    inv_phi = (math.sqrt(5) - 1) / 2
    a, b = lo, hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = fn(c), fn(d)
    for _ in range(GOLDEN_MAX_ITER):
        if b - a <= GOLDEN_TOL * max(1.0, abs(a) + abs(b)):
            break
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = fn(d)
    candidates = [(fn(lo), lo), (fc, c), (fd, d), (fn(hi), hi)]
    return min(candidates)[1]


def select_construction(variant, d_star, k) -> ConstructionPlan:
    """Map the optimizing consecutive-stop distance to a buildable plan.

    The relaxed variant builds the up-and-down path at d* directly.  The C
    variant realizes d* by mixing the even types bracketing it (gamma chosen
    so the strip widths interpolate d* linearly); distances below 2 fall back
    to the pure type-2 path and distances at or above 2k to pure type-2k.
    The D variant does the same over the discrete family {1, 2, 4, ..., 2k,
    2k+1}, with the zigzag as the last member.
    """
    kind = variant.kind if isinstance(variant, Variant) else VariantKind(variant)
    d_star = as_rational(d_star)
    if kind is VariantKind.RC:
        d = min(max(d_star, RC_MIN_DISTANCE), 2 * as_rational(k))
        return ConstructionPlan("UAD", d=d)
    if kind is VariantKind.C:
        if k < 2 or d_star < 2:
            return ConstructionPlan("UAD", d=min(2, 2 * k))
        if d_star >= 2 * k:
            return ConstructionPlan("UAD", d=2 * k)
        lo = 2 * (_floor(d_star) // 2)
        if d_star == lo:
            return ConstructionPlan("UAD", d=lo)
        gamma = Fraction(lo + 2 - d_star, 2)
        return ConstructionPlan("MIXED", d=lo, gamma=gamma)
    if kind is VariantKind.D:
        abscissae = [1] + list(range(2, 2 * k + 1, 2)) + [2 * k + 1]
        if d_star <= 1:
            return ConstructionPlan("DISCRETE", d=1)
        if d_star >= 2 * k + 1:
            return ConstructionPlan("ZIGZAG", d=2 * k + 1)
        for d1, d2 in zip(abscissae, abscissae[1:]):
            if d_star == d1:
                return _pure_discrete(d1, k)
            if d1 < d_star < d2:
                gamma = Fraction(d2 - d_star, d2 - d1)
                return ConstructionPlan("MIXED_DISCRETE", d=d1, d2=d2, gamma=gamma)
        return _pure_discrete(2 * k, k)
    raise ValueError("construction selection applies to RC, C, or D")


def _pure_discrete(d: int, k: int) -> ConstructionPlan:
    if d == 2 * k + 1:
        return ConstructionPlan("ZIGZAG", d=d)
    return ConstructionPlan("DISCRETE", d=d)


def build_plan(plan: ConstructionPlan, grid: GridSpec, k) -> CoveringPath:
    if plan.kind == "UAD":
        return build_up_down(plan.d, grid, k)
    if plan.kind == "MIXED":
        return build_mixed_up_down(plan.d, plan.gamma, grid, k)
    if plan.kind == "DISCRETE":
        return build_discrete_up_down(plan.d, grid, k)
    if plan.kind == "ZIGZAG":
        return build_zigzag(grid, k)
    if plan.kind == "MIXED_DISCRETE":
        return build_mixed_discrete(plan.d, plan.d2, plan.gamma, grid, k)
    raise ValueError(f"cannot build plan {plan.kind!r}")


def plan_cost_bounds(plan: ConstructionPlan, grid: GridSpec, k):
    """Documented a-priori (L, T) upper bounds for a plan, and the leading
    terms they add their explicit constants to."""
    m, n = grid.m, grid.n
    if plan.kind == "UAD":
        bounds = up_down_bounds(plan.d, n, m, k)
        r = 2 * as_rational(k) - Fraction(as_rational(plan.d), 2)
        lead = (Fraction(grid.N, r), Fraction(grid.N, as_rational(plan.d) * r))
    elif plan.kind == "MIXED":
        bounds = mixed_bounds(plan.d, plan.gamma, n, m, k)
        r1 = 2 * k - Fraction(plan.d, 2)
        r2 = 2 * k - Fraction(plan.d + 2, 2)
        g = as_rational(plan.gamma)
        lead = (
            g * Fraction(grid.N, r1) + (1 - g) * Fraction(grid.N, r2),
            g * Fraction(grid.N, plan.d * r1) + (1 - g) * Fraction(grid.N, (plan.d + 2) * r2),
        )
    elif plan.kind == "DISCRETE":
        bounds = discrete_bounds(plan.d, n, m, k)
        lead = _discrete_lead(plan.d, grid.N, k)
    elif plan.kind == "ZIGZAG":
        bounds = zigzag_bounds(n, m, k)
        lead = _discrete_lead(2 * k + 1, grid.N, k)
    elif plan.kind == "MIXED_DISCRETE":
        bounds = mixed_discrete_bounds(plan.d, plan.d2, plan.gamma, n, m, k)
        g = as_rational(plan.gamma)
        L1, T1 = _discrete_lead(plan.d, grid.N, k)
        L2, T2 = _discrete_lead(plan.d2, grid.N, k)
        lead = (g * L1 + (1 - g) * L2, g * T1 + (1 - g) * T2)
    else:
        raise ValueError(f"no cost bounds for plan {plan.kind!r}")
    return bounds, lead


def _discrete_lead(d: int, N: int, k: int):
    # Leading cost terms of the discrete family: L = d * N / overlap(d),
    # T = N / overlap(d) with overlap 2k+1 (d=1), d(2k+1-d/2) (even),
    # 2k^2+2k+1 (zigzag).
    if d == 1:
        g = 2 * k + 1
    elif d == 2 * k + 1:
        g = 2 * k * k + 2 * k + 1
    else:
        g = d * (2 * k + 1) - d * d // 2
    return (Fraction(d * N, g), Fraction(N, g))


def solve(grid: GridSpec, k_raw, objective: Objective, relax: bool = False) -> Solution:
    """Full pipeline: classify, bound, minimize, construct, verify, report."""
    grid = GridSpec(grid.m, grid.n, k_raw)
    variant = relaxed(k_raw) if relax else classify(k_raw)
    if variant.kind is VariantKind.TRIVIAL_ALL_STOPS:
        solution = trivial_solution(grid)
        solution.lower_bound_cost = objective.value(solution.cost.L, solution.cost.T)
        return solution

    curve = lower_bound_curve(grid, variant)
    if curve.degenerate:
        return _solve_degenerate(grid, variant, objective)

    L_star, T_star, d_star = minimize_on_curve(curve, objective)
    if objective.kind == "min_stops":
        # The direct counting bound is slightly stronger than the curve's ray.
        T_star = min_stops(grid, variant)
        lower = T_star
    elif objective.kind == "min_length" and not isinstance(T_star, (int, Fraction)):
        lower = L_star  # relaxed-variant infimum; T diverges there
    else:
        lower = objective.value(L_star, T_star)

    plan = select_construction(variant, d_star, variant.k_effective)
    path = build_plan(plan, grid, variant.k_effective)
    if not _covers(path, grid, variant):
        raise AssertionError("constructed path failed its exact coverage check")
    cost = path.cost()
    observed = objective.value(cost.L, cost.T)
    ratio = _ratio(observed, lower)
    guarantee = _guarantee(grid, variant, objective, plan, lower)
    return Solution(
        variant=variant,
        path=path,
        cost=cost,
        lower_bound_cost=lower,
        observed_ratio=ratio,
        guarantee=guarantee,
        d_star=d_star,
        params={"plan": plan.describe(), "curve_point": (L_star, T_star)},
    )


def _covers(path: CoveringPath, grid: GridSpec, variant: Variant) -> bool:
    if variant.kind is VariantKind.D:
        return verify_coverage(path.stops, grid, Region.LATTICE, variant.k_effective)
    if variant.kind is VariantKind.C:
        return verify_coverage(path.stops, grid, Region.RECTANGLE, variant.k_effective)
    # Relaxed stops may be non-integer; the lattice check accepts rationals
    # and is the strongest exact check available for them.
    return verify_coverage(path.stops, grid, Region.LATTICE, variant.k_effective)


def _solve_degenerate(grid: GridSpec, variant: Variant, objective: Objective) -> Solution:
    # The trade-off constraint is vacuous (one ball measures at least the
    # whole grid).  A centered stop is optimal whenever it reaches the far
    # corners; otherwise fall back to the densest pure construction.
    cx, cy = grid.n // 2, grid.m // 2
    best = min(
        (Point(x, y) for x in {cx, grid.n - cx} for y in {cy, grid.m - cy}),
        key=lambda p: max(p.x, grid.n - p.x) + max(p.y, grid.m - p.y),
    )
    reach = max(best.x, grid.n - best.x) + max(best.y, grid.m - best.y)
    if reach <= variant.k_effective:
        path = CoveringPath.from_waypoints([best], [best], "SINGLE")
        lower = objective.value(0, 1)
        return Solution(
            variant=variant,
            path=path,
            cost=path.cost(),
            lower_bound_cost=lower,
            observed_ratio=1,
            guarantee=1,
            d_star=None,
            params={"plan": "SINGLE"},
        )
    k = variant.k_effective
    d_star = 2 * k + 1 if variant.kind is VariantKind.D else 2 * k
    plan = select_construction(variant, d_star, k)
    path = build_plan(plan, grid, k)
    cost = path.cost()
    lower = objective.value(0, 1)
    return Solution(
        variant=variant,
        path=path,
        cost=cost,
        lower_bound_cost=lower,
        observed_ratio=_ratio(objective.value(cost.L, cost.T), lower),
        guarantee="unguaranteed (degenerate)",
        d_star=d_star,
        params={"plan": plan.describe()},
    )


def _ratio(observed, lower):
    if lower is None:
        return None
    if lower == 0:
        return 1 if observed == 0 else None
    if isinstance(observed, float) or isinstance(lower, float):
        return float(observed) / float(lower)
    return Fraction(observed, lower)


def _guarantee(grid: GridSpec, variant: Variant, objective: Objective,
               plan: ConstructionPlan, lower):
    if objective.kind == "convex":
        return "unguaranteed (custom objective)"
    k = variant.k_effective
    if variant.kind is VariantKind.RC:
        eps = Fraction(16 * as_rational(k), grid.n)
        return 1 + eps if eps <= 1 else "unguaranteed (small grid)"
    if variant.kind is VariantKind.C:
        base = {1: Fraction(3, 2), 2: Fraction(7, 6)}.get(k, Fraction(9, 8))
        eps = Fraction(100 * k * k, grid.n)
        return base + eps if eps <= 1 else "unguaranteed (small grid)"
    if variant.kind is VariantKind.D:
        ball = 2 * k * k + 2 * k + 1
        if grid.N <= ball or lower is None or lower <= 0:
            return "unguaranteed (degenerate)"
        (L_bound, T_bound), (L_lead, T_lead) = plan_cost_bounds(plan, grid, k)
        slack = Fraction(
            objective.value(L_bound, T_bound) - objective.value(L_lead, T_lead)
        ) / Fraction(lower)
        return Fraction(11, 10) * Fraction(grid.N, grid.N - ball) + slack
    return "unguaranteed"


def pareto_report(grid: GridSpec, k_raw, samples: int) -> dict:
    """Lower and upper boundary curves plus a sweep of constructed-path cost
    points across the buildable distance range."""
    if samples < 2:
        raise ValueError("samples must be at least 2")
    grid = GridSpec(grid.m, grid.n, k_raw)
    variant = classify(k_raw)
    if variant.kind is VariantKind.TRIVIAL_ALL_STOPS:
        solution = trivial_solution(grid)
        return {
            "variant": variant,
            "lower": None,
            "upper": None,
            "points": [("TRIVIAL", solution.cost.L, solution.cost.T)],
        }
    lower = lower_bound_curve(grid, variant)
    if lower.degenerate:
        return {"variant": variant, "lower": lower, "upper": None, "points": [("SINGLE", 0, 1)]}
    upper = upper_bound_curve(grid, variant)
    k = variant.k_effective
    if variant.kind is VariantKind.C:
        d_lo, d_hi = min(2, 2 * k), 2 * k
    else:
        d_lo, d_hi = 1, 2 * k + 1
    plans = []
    for i in range(samples):
        d = Fraction(d_lo) + Fraction((d_hi - d_lo) * i, samples - 1)
        plan = select_construction(variant, d, k)
        if plan not in plans:
            plans.append(plan)
    points = []
    for plan in plans:
        path = build_plan(plan, grid, k)
        points.append((plan.describe(), path.L, path.T))
    return {"variant": variant, "lower": lower, "upper": upper, "points": points}


def _floor(value) -> int:
    value = as_rational(value)
    if isinstance(value, int):
        return value
    return int(value.numerator // value.denominator)
