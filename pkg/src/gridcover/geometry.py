"""l1-metric primitives on the unit grid.

Distances, diamond balls, overlap measures (continuous area and lattice
counts), and exact coverage verification.  Coverage checks reduce to finitely
many critical points: the maximum of the distance-to-nearest-stop function
over grid edges or over the full rectangle is attained at integer points,
edge midpoints, or cell centers, and the cell-center condition is implied by
the midpoint one.  All checks run in exact integer arithmetic on a doubled
lattice; floating point appears only in `ball_overlap_area`.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

import numpy as np

Rational = Union[int, Fraction]

_FAR = np.int64(1) << 40


def as_rational(value) -> Rational:
    """Coerce to an exact number; floats convert via their binary expansion."""
    if isinstance(value, bool):
        raise TypeError("boolean is not a coordinate")
    if isinstance(value, int):
        return value
    if isinstance(value, (float, str)):
        value = Fraction(value)
    if not isinstance(value, Fraction):
        raise TypeError(f"not a rational value: {value!r}")
    return int(value) if value.denominator == 1 else value


@dataclass(frozen=True)
class Point:
    """A point of the plane with exact rational coordinates."""

    x: Rational
    y: Rational

    def __post_init__(self):
        object.__setattr__(self, "x", as_rational(self.x))
        object.__setattr__(self, "y", as_rational(self.y))

    @property
    def is_integer(self) -> bool:
        return isinstance(self.x, int) and isinstance(self.y, int)


def as_point(p) -> Point:
    if isinstance(p, Point):
        return p
    x, y = p
    return Point(x, y)


@dataclass(frozen=True)
class GridSpec:
    """Problem instance: an m x n unit grid (m is the taller side) and raw radius."""

    m: int
    n: int
    k_raw: Rational = 1

    def __post_init__(self):
        if not (isinstance(self.m, int) and isinstance(self.n, int)):
            raise ValueError("grid dimensions must be integers")
        if not self.m >= self.n > 0:
            raise ValueError("grid requires m >= n > 0")
        object.__setattr__(self, "k_raw", as_rational(self.k_raw))
        if self.k_raw <= 0:
            raise ValueError("coverage radius must be positive")

    @property
    def N(self) -> int:
        return self.m * self.n

    def contains(self, p: Point) -> bool:
        return 0 <= p.x <= self.n and 0 <= p.y <= self.m

    def lattice_points(self) -> Iterable[Point]:
        for x in range(self.n + 1):
            for y in range(self.m + 1):
                yield Point(x, y)


@dataclass(frozen=True)
class DiamondBall:
    """The l1 ball: a diamond of the given radius around a center point."""

    center: Point
    radius: Rational

    def __post_init__(self):
        object.__setattr__(self, "radius", as_rational(self.radius))
        if self.radius <= 0:
            raise ValueError("ball radius must be positive")

    def area(self) -> Rational:
        return 2 * self.radius * self.radius

    def lattice_count(self) -> int:
        # 2k^2 + 2k + 1 integer points for integer radius and integer center.
        if not (isinstance(self.radius, int) and self.center.is_integer):
            raise ValueError("lattice count requires integer radius and center")
        k = self.radius
        return 2 * k * k + 2 * k + 1

    def contains(self, p: Point) -> bool:
        return l1_distance(self.center, p) <= self.radius


class Region(enum.Enum):
    """Which point set a stop placement must cover."""

    EDGES = "edges"          # every point on every grid edge
    RECTANGLE = "rectangle"  # every point of the full m x n rectangle
    LATTICE = "lattice"      # the integer points only


def l1_distance(p, q) -> Rational:
    p, q = as_point(p), as_point(q)
    return abs(p.x - q.x) + abs(p.y - q.y)


def dist_to_stops(x, stops: Sequence) -> Rational:
    """Distance from x to its nearest stop."""
    if not stops:
        raise ValueError("no stops")
    x = as_point(x)
    return min(l1_distance(x, s) for s in stops)


def ball_overlap_area(d, k) -> float:
    """Area of the intersection of two radius-k diamonds with centers d apart."""
    d, k = float(d), float(k)
    if d < 0 or k <= 0:
        raise ValueError("ball_overlap_area requires d >= 0 and k > 0")
    if d >= 2 * k:
        return 0.0
    return 2 * (k - d / 2) ** 2


def ball_overlap_count(d: int, k: int) -> int:
    """Number of integer points shared by two radius-k diamonds with integer
    centers d apart on a common axis."""
    if isinstance(d, bool) or isinstance(k, bool) or not (isinstance(d, int) and isinstance(k, int)):
        raise ValueError("ball_overlap_count requires integer d and k")
    if k < 1 or d < 0:
        raise ValueError("ball_overlap_count requires k >= 1 and d >= 0")
    if d >= 2 * k + 1:
        return 0
    if d % 2 == 1:
        return (2 * k - d + 1) ** 2 // 2
    return ((2 * k - d + 2) ** 2 + (2 * k - d) ** 2) // 4


def lattice_distance_field(seeds: Sequence[tuple], width: int, height: int) -> np.ndarray:
    """Exact l1 distance from every node of a width x height lattice to the
    nearest seed, as an int64 array indexed [y, x].

    Two raster sweeps of the sequential distance transform; exact for the
    4-neighbor metric, which coincides with l1 on a box containing the seeds.
    """
    dist = np.full((height, width), _FAR, dtype=np.int64)
    for sx, sy in seeds:
        dist[sy, sx] = 0
    col = np.arange(width, dtype=np.int64)
    prev = None
    for row in dist:  # propagate down and right
        if prev is not None:
            np.minimum(row, prev + 1, out=row)
        np.minimum(row, np.minimum.accumulate(row - col) + col, out=row)
        prev = row
    prev = None
    for row in dist[::-1]:  # propagate up and left
        if prev is not None:
            np.minimum(row, prev + 1, out=row)
        np.minimum(row, np.minimum.accumulate((row + col)[::-1])[::-1] - col, out=row)
        prev = row
    return dist


def _common_scale(stops: Sequence[Point], grid: GridSpec):
    """Smallest factor putting every stop coordinate on an integer lattice,
    or None when the refined field would be unreasonably large."""
    scale = 1
    for s in stops:
        for v in (s.x, s.y):
            if isinstance(v, Fraction):
                scale = scale * v.denominator // math.gcd(scale, v.denominator)
    if (scale * grid.n + 1) * (scale * grid.m + 1) > 25_000_000:
        return None
    return scale


def _doubled_distance_field(stops: Sequence[Point], grid: GridSpec) -> np.ndarray:
    # Integer stops on the lattice doubled in both axes: node (2x, 2y) per
    # lattice point, odd nodes are edge midpoints / cell centers.  Distances
    # come out in half-units, so every comparison below is pure integer.
    seeds = [(2 * int(s.x), 2 * int(s.y)) for s in stops]
    return lattice_distance_field(seeds, 2 * grid.n + 1, 2 * grid.m + 1)


def verify_coverage(stops: Sequence, grid: GridSpec, region: Region, radius) -> bool:
    """Exact coverage decision via critical-point checks.

    LATTICE: all integer points within `radius`.
    EDGES: all integer points and all edge midpoints within `radius`.
    RECTANGLE: integer points within k and edge midpoints within k - 1/2;
    cell centers are implied because their distance exceeds the nearest
    midpoint's by at most 1/2.
    """
    stops = [as_point(s) for s in stops]
    radius = as_rational(radius)
    if radius <= 0:
        raise ValueError("radius must be positive")
    for s in stops:
        if not grid.contains(s):
            raise ValueError(f"stop outside grid: ({s.x}, {s.y})")
    if not stops:
        return False

    integral = all(s.is_integer for s in stops)
    if region is Region.LATTICE:
        if not integral:
            scale = _common_scale(stops, grid)
            if scale is None:
                # Exact fallback for arbitrary rational stop placements.
                return all(
                    dist_to_stops(p, stops) <= radius for p in grid.lattice_points()
                )
            # Chamfer on the refined lattice is exact in 1/scale units, and
            # only the coarse nodes are coverage targets.
            field = lattice_distance_field(
                [(int(scale * s.x), int(scale * s.y)) for s in stops],
                scale * grid.n + 1,
                scale * grid.m + 1,
            )
            return bool(field[::scale, ::scale].max() <= _floor(scale * radius))
        field = lattice_distance_field(
            [(int(s.x), int(s.y)) for s in stops], grid.n + 1, grid.m + 1
        )
        return bool(field.max() <= _floor(radius))

    if not integral:
        raise ValueError("exact check requires integer radius/stops")
    field = _doubled_distance_field(stops, grid)
    odd_x = np.zeros(2 * grid.n + 1, dtype=bool)
    odd_x[1::2] = True
    odd_y = np.zeros(2 * grid.m + 1, dtype=bool)
    odd_y[1::2] = True
    on_edges = ~(odd_y[:, None] & odd_x[None, :])  # excludes cell centers

    if region is Region.EDGES:
        return bool(field[on_edges].max() <= _floor(2 * radius))

    if region is Region.RECTANGLE:
        if not isinstance(radius, int):
            raise ValueError("exact check requires integer radius/stops")
        even = ~odd_y[:, None] & ~odd_x[None, :]
        midpoints = on_edges & ~even
        if field[even].max() > 2 * radius:
            return False
        if midpoints.any() and field[midpoints].max() > 2 * radius - 1:
            return False
        return True

    raise ValueError(f"unknown region {region!r}")


def _floor(value: Rational) -> int:
    return value if isinstance(value, int) else int(value.numerator // value.denominator)
