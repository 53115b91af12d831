"""Radius rounding and problem-variant classification.

The raw radius k is rounded down to the nearest half-integer without changing
which stop sets cover the grid edges.  An integer result asks for coverage of
the full rectangle (continuous variant C); a proper half-integer reduces to
covering the integer points with radius k - 1/2 (discrete variant D); k < 1
makes every lattice point a stop.  The continuous relaxation RC (stops
anywhere in the rectangle) is an analysis device and is never produced here;
callers opt into it explicitly.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .geometry import GridSpec, Point, Rational, as_rational


class VariantKind(enum.Enum):
    TRIVIAL_ALL_STOPS = "trivial"
    RC = "RC"
    C = "C"
    D = "D"


@dataclass(frozen=True)
class Variant:
    """Rounded radius and the reduction it selects."""

    kind: VariantKind
    k_rounded: Rational
    k_effective: Rational | None

    @property
    def ball_measure(self) -> Rational:
        """Covered measure of one stop: area for RC/C, lattice count for D."""
        k = self.k_effective
        if self.kind is VariantKind.D:
            return 2 * k * k + 2 * k + 1
        return 2 * k * k

    @property
    def coverage_radius(self) -> Rational:
        """Radius used by the variant's exact coverage check."""
        return self.k_effective


def classify(k_raw) -> Variant:
    """Round k down to a half-integer and pick the matching variant."""
    k_raw = as_rational(k_raw)
    if k_raw <= 0:
        raise ValueError("coverage radius must be positive")
    k_rounded = as_rational(Fraction(int(2 * k_raw), 2))
    if k_raw < 1:
        return Variant(VariantKind.TRIVIAL_ALL_STOPS, k_rounded, None)
    if isinstance(k_rounded, int):
        return Variant(VariantKind.C, k_rounded, k_rounded)
    return Variant(VariantKind.D, k_rounded, int(k_rounded - Fraction(1, 2)))


def relaxed(k_raw) -> Variant:
    """The continuous relaxation: stops anywhere in the rectangle, cover it all."""
    k_raw = as_rational(k_raw)
    if k_raw < 1:
        raise ValueError("relaxation requires k >= 1")
    return Variant(VariantKind.RC, k_raw, k_raw)


def trivial_path(grid: GridSpec):
    """Boustrophedon walk through every lattice point; all of them are stops."""
    from .paths import CoveringPath  # local import keeps module layering simple

    waypoints = []
    stops = []
    for x in range(grid.n + 1):
        ys = range(grid.m + 1) if x % 2 == 0 else range(grid.m, -1, -1)
        column = [Point(x, y) for y in ys]
        stops.extend(column)
        waypoints.extend((column[0], column[-1]))
    return CoveringPath.from_waypoints(waypoints, stops, construction="TRIVIAL")


def trivial_solution(grid: GridSpec):
    """All (m+1)(n+1) lattice points as stops, joined by a spanning lattice walk."""
    from .optimize import Solution  # Solution lives with the solver pipeline

    variant = classify(grid.k_raw)
    if variant.kind is not VariantKind.TRIVIAL_ALL_STOPS:
        raise ValueError("trivial solution applies only when k < 1")
    path = trivial_path(grid)
    cost = path.cost()
    # A spanning path over all lattice points cannot beat #points - 1 edges,
    # so the walk is optimal and the guarantee is exact.
    return Solution(
        variant=variant,
        path=path,
        cost=cost,
        lower_bound_cost=None,
        observed_ratio=1,
        guarantee=1,
        d_star=None,
        params={},
    )
