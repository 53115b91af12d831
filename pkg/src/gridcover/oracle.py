"""Desk-scale ground truth.

Exhaustive Pareto enumeration for tiny instances plus brute-force geometric
counters.  The enumeration branches on the first uncovered critical point and
tries every stop that can cover it (with a forbidden set so each cover is
visited once).  Every minimal cover is reached this way; non-minimal covers
that slip through are harmless because shortcutting a shortest path over a
superset never beats the subset's shortest path, so they are dominated in the
final filter.  Shortest visiting order is exact Held-Karp over subsets,
pruned by a spanning-tree lower bound.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .curves import CostPair
from .geometry import GridSpec, Point, Rational, Region, as_point, l1_distance
from .variants import VariantKind

LIMIT_MESSAGE = "instance too large for oracle"


@dataclass(frozen=True)
class OracleLimits:
    max_lattice_points: int = 25
    max_stops: int = 9
    time_budget: Optional[float] = None  # seconds


def exact_pareto(grid: GridSpec, variant, k: int, limits: OracleLimits = OracleLimits()):
    """Non-dominated (L, T) pairs over all covering stop sets of size up to
    max_stops, sorted by T then L."""
    kind = variant if isinstance(variant, VariantKind) else VariantKind(str(variant))
    if kind not in (VariantKind.C, VariantKind.D):
        raise ValueError("oracle handles the C and D variants only")
    if not isinstance(k, int) or k <= 0:
        raise ValueError("oracle radius must be a positive integer")
    if (grid.m + 1) * (grid.n + 1) > limits.max_lattice_points:
        raise ValueError(LIMIT_MESSAGE)
    deadline = None
    if limits.time_budget is not None:
        deadline = time.monotonic() + limits.time_budget

    items = _critical_items(grid, kind, k)
    stops = list(grid.lattice_points())
    # stop index -> set of item indices it covers
    covers = []
    for s in stops:
        covers.append(
            frozenset(
                i for i, (p, radius) in enumerate(items) if l1_distance(s, p) <= radius
            )
        )
    all_items = frozenset(range(len(items)))

    found: list[tuple[Point, ...]] = []
    seen_canonical: set[tuple] = set()

    def recurse(chosen: list[int], covered: frozenset, forbidden: set[int]):
        if deadline is not None and time.monotonic() > deadline:
            raise ValueError(LIMIT_MESSAGE)
        if covered == all_items:
            combo = tuple(stops[i] for i in chosen)
            canon = _canonical(combo, grid)
            if canon not in seen_canonical:
                seen_canonical.add(canon)
                found.append(combo)
            return
        if len(chosen) == limits.max_stops:
            return
        target = min(all_items - covered)
        candidates = [
            i
            for i, c in enumerate(covers)
            if target in c and i not in forbidden and i not in chosen
        ]
        blocked = set(forbidden)
        for i in candidates:
            recurse(chosen + [i], covered | covers[i], blocked)
            blocked.add(i)

    recurse([], frozenset(), set())

    best: dict[int, Rational] = {}
    for combo in sorted(found, key=lambda c: (len(c), _mst_weight(c))):
        T = len(combo)
        bound = _mst_weight(combo)
        if T in best and bound >= best[T]:
            continue
        L = shortest_path_length(combo)
        if T not in best or L < best[T]:
            best[T] = L
    frontier: list[CostPair] = []
    limit = None
    for T in sorted(best):
        if limit is None or best[T] < limit:
            frontier.append(CostPair(best[T], T))
            limit = best[T]
    return frontier


def _critical_items(grid: GridSpec, kind: VariantKind, k: int):
    """(point, allowed radius) pairs whose coverage decides the region's."""
    items: list[tuple[Point, Rational]] = []
    for p in grid.lattice_points():
        items.append((p, k))
    if kind is VariantKind.C:
        half = Fraction(1, 2)
        for x in range(grid.n + 1):
            for y in range(grid.m):
                items.append((Point(x, y + half), k - half))
        for y in range(grid.m + 1):
            for x in range(grid.n):
                items.append((Point(x + half, y), k - half))
    return items


def _canonical(combo: Sequence[Point], grid: GridSpec) -> tuple:
    """Least image of the stop set under the grid's symmetries (axis flips,
    plus the diagonal ones when the grid is square)."""
    m, n = grid.m, grid.n
    images = [
        lambda p: (p.x, p.y),
        lambda p: (n - p.x, p.y),
        lambda p: (p.x, m - p.y),
        lambda p: (n - p.x, m - p.y),
    ]
    if m == n:
        images += [
            lambda p: (p.y, p.x),
            lambda p: (n - p.y, p.x),
            lambda p: (p.y, m - p.x),
            lambda p: (n - p.y, m - p.x),
        ]
    return min(tuple(sorted(img(p) for p in combo)) for img in images)


def _mst_weight(points: Sequence[Point]) -> Rational:
    """Spanning-tree weight: a lower bound on any path visiting all points."""
    if len(points) <= 1:
        return 0
    in_tree = [False] * len(points)
    dist = [None] * len(points)
    dist[0] = 0
    total = 0
    for _ in range(len(points)):
        u = min(
            (i for i in range(len(points)) if not in_tree[i] and dist[i] is not None),
            key=lambda i: dist[i],
        )
        in_tree[u] = True
        total += dist[u]
        for v in range(len(points)):
            if not in_tree[v]:
                w = l1_distance(points[u], points[v])
                if dist[v] is None or w < dist[v]:
                    dist[v] = w
    return total


def shortest_path_length(points: Sequence[Point]) -> Rational:
    """Exact shortest open path visiting every point, by subset DP.

    A single point has length 0 (a stationary visit counts as a path)."""
    t = len(points)
    if t <= 1:
        return 0
    dist = [[l1_distance(a, b) for b in points] for a in points]
    full = (1 << t) - 1
    dp = [[None] * t for _ in range(1 << t)]
    for i in range(t):
        dp[1 << i][i] = 0
    for mask in range(1 << t):
        row = dp[mask]
        for last in range(t):
            base = row[last]
            if base is None:
                continue
            for nxt in range(t):
                if mask & (1 << nxt):
                    continue
                cand = base + dist[last][nxt]
                cell = dp[mask | (1 << nxt)]
                if cell[nxt] is None or cand < cell[nxt]:
                    cell[nxt] = cand
    return min(v for v in dp[full] if v is not None)


def brute_ball_overlap_count(p: int, q: int, k: int) -> int:
    """Lattice points within l1 radius k of both (0,0) and (p,q), by loops."""
    count = 0
    for x in range(-k, k + 1):
        for y in range(-(k - abs(x)), k - abs(x) + 1):
            if abs(x - p) + abs(y - q) <= k:
                count += 1
    return count


def brute_coverage_max_dist(stops, grid: GridSpec, region: Region) -> Rational:
    """Max distance-to-stops over the region's finite critical set."""
    stops = [as_point(s) for s in stops]
    if not stops:
        raise ValueError("no stops")
    half = Fraction(1, 2)
    points: list[Point] = list(grid.lattice_points())
    if region in (Region.EDGES, Region.RECTANGLE):
        for x in range(grid.n + 1):
            for y in range(grid.m):
                points.append(Point(x, y + half))
        for y in range(grid.m + 1):
            for x in range(grid.n):
                points.append(Point(x + half, y))
    if region is Region.RECTANGLE:
        for x in range(grid.n):
            for y in range(grid.m):
                points.append(Point(x + half, y + half))
    return max(min(l1_distance(p, s) for s in stops) for p in points)
