"""Constructive paths: frozen shapes, coverage, documented cost bounds."""
from __future__ import annotations

from fractions import Fraction

import pytest

from gridcover.geometry import GridSpec, Point, Region, verify_coverage
from gridcover.paths import (
    CoveringPath,
    TessellationLattice,
    build_discrete_up_down,
    build_mixed_discrete,
    build_mixed_up_down,
    build_up_down,
    build_zigzag,
    discrete_bounds,
    mixed_bounds,
    mixed_discrete_bounds,
    path_cost,
    up_down_bounds,
    zigzag_bounds,
)


def test_covering_path_recomputes_length_and_dedups():
    path = CoveringPath.from_waypoints(
        [Point(0, 0), Point(0, 0), Point(0, 3), Point(2, 3)],
        [Point(0, 0), Point(0, 3), Point(0, 3), Point(2, 3)],
        "UAD",
    )
    assert path.L == 5
    assert path.T == 3  # duplicate stop dropped, order kept
    assert path.cost().L == 5 and path.cost().T == 3


def test_path_cost_examples():
    single = CoveringPath.from_waypoints([Point(1, 1)], [Point(1, 1)], "SINGLE")
    assert path_cost(single).L == 0 and path_cost(single).T == 1
    line = CoveringPath.from_waypoints([Point(0, 0), Point(0, 4)], [Point(0, 0), Point(0, 4)], "UAD")
    assert path_cost(line).L == 4 and path_cost(line).T == 2


def test_up_down_6x6_frozen():
    grid = GridSpec(6, 6, 2)
    path = build_up_down(2, grid, 2)
    xs = sorted({p.x for p in path.stops})
    assert xs == [0, 3, 6]  # separation r = 2k - d/2 = 3
    assert path.L == 24
    assert set(path.stops) == {
        Point(0, 0), Point(0, 2), Point(0, 4), Point(0, 6),
        Point(3, 1), Point(3, 3), Point(3, 5), Point(3, 6),
        Point(6, 0), Point(6, 2), Point(6, 4), Point(6, 6),
    }
    assert path.T == 12  # T as constructed: the top stop of x=3 is distinct
    assert verify_coverage(path.stops, grid, Region.RECTANGLE, 2)


def test_up_down_clamped_rightmost_traversal():
    grid = GridSpec(2, 2, 1)
    path = build_up_down(2, grid, 1)
    xs = sorted({p.x for p in path.stops})
    # r = 1 forces three traversals; two would leave edge midpoints exposed
    assert xs == [0, 1, 2]
    assert verify_coverage(path.stops, grid, Region.RECTANGLE, 1)


def test_up_down_separation_at_d_2k():
    grid = GridSpec(12, 12, 3)
    path = build_up_down(6, grid, 3)
    xs = sorted({p.x for p in path.stops})
    assert xs == [0, 3, 6, 9, 12]  # r = k
    with pytest.raises(ValueError):
        build_up_down(7, grid, 3)
    with pytest.raises(ValueError):
        build_up_down(0, grid, 3)


def test_up_down_rational_d_covers_lattice():
    grid = GridSpec(8, 8, 1)
    path = build_up_down(Fraction(1, 2), grid, 1)
    assert verify_coverage(path.stops, grid, Region.LATTICE, 1)


def test_mixed_up_down():
    grid = GridSpec(20, 20, 2)
    path = build_mixed_up_down(2, Fraction(1, 2), grid, 2)
    assert path.construction == "MIXED"
    assert verify_coverage(path.stops, grid, Region.RECTANGLE, 2)
    bound_L, bound_T = mixed_bounds(2, Fraction(1, 2), 20, 20, 2)
    assert path.L <= bound_L and path.T <= bound_T
    with pytest.raises(ValueError):
        build_mixed_up_down(3, Fraction(1, 2), grid, 2)
    with pytest.raises(ValueError):
        build_mixed_up_down(4, Fraction(1, 2), grid, 2)  # d+2 exceeds 2k


def test_mixed_gamma_zero_is_pure():
    grid = GridSpec(20, 20, 3)
    mixed = build_mixed_up_down(2, 0, grid, 3)
    pure = build_up_down(4, grid, 3)
    assert mixed.waypoints == pure.waypoints


def test_mixed_k3_covers():
    grid = GridSpec(30, 30, 3)
    path = build_mixed_up_down(2, Fraction(3, 10), grid, 3)
    assert verify_coverage(path.stops, grid, Region.RECTANGLE, 3)


def test_discrete_type1_frozen():
    grid = GridSpec(6, 6, 1)
    path = build_discrete_up_down(1, grid, 1)
    xs = sorted({p.x for p in path.stops})
    assert xs == [0, 3, 6]  # separation 2k+1
    assert path.T == 21  # every lattice point of each traversal
    assert path.L == 24
    assert verify_coverage(path.stops, grid, Region.LATTICE, 1)


def test_discrete_even_types():
    grid = GridSpec(12, 12, 2)
    path = build_discrete_up_down(2, grid, 2)  # t=1: separation 2k+1-t = 4
    xs = sorted({p.x for p in path.stops})
    assert xs == [0, 4, 8, 12]
    assert verify_coverage(path.stops, grid, Region.LATTICE, 2)
    with pytest.raises(ValueError, match="discrete type"):
        build_discrete_up_down(3, grid, 2)
    with pytest.raises(ValueError, match="discrete type"):
        build_discrete_up_down(6, grid, 2)  # 2k+1 handled by the zigzag


def test_tessellation_lattice_k1():
    lattice = TessellationLattice(1)
    assert lattice.modulus == 5
    assert lattice.is_member(0, 0) and lattice.is_member(2, 4)
    assert not lattice.is_member(1, 0)
    # (a + 2b) mod 5 == 0 exactly
    for a in range(-6, 7):
        for b in range(-6, 7):
            assert lattice.is_member(a, b) == ((a + 2 * b) % 5 == 0)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_tessellation_partitions_lattice(k):
    lattice = TessellationLattice(k)
    window = range(-3 * k, 3 * k + 1)
    owners = {}
    for a in range(-5 * k, 5 * k + 1):
        for b in range(-5 * k, 5 * k + 1):
            if not lattice.is_member(a, b):
                continue
            for dx in range(-k, k + 1):
                for dy in range(-(k - abs(dx)), k - abs(dx) + 1):
                    key = (a + dx, b + dy)
                    if key[0] in window and key[1] in window:
                        assert key not in owners, "ball overlap"
                        owners[key] = (a, b)
    assert len(owners) == len(window) ** 2  # exhaustive


def test_zigzag_member_spacing_k2():
    lattice = TessellationLattice(2)
    assert lattice.modulus == 13
    members = [(a, b) for a in range(0, 14) for b in range(0, 14) if lattice.is_member(a, b)]
    for i, p in enumerate(members):
        for q in members[i + 1:]:
            assert abs(p[0] - q[0]) + abs(p[1] - q[1]) >= 5


def test_zigzag_covers_and_bounds():
    for k, m, n in ((1, 10, 10), (2, 20, 14), (3, 25, 25)):
        grid = GridSpec(m, n, k)
        path = build_zigzag(grid, k)
        assert path.construction == "ZIGZAG"
        assert verify_coverage(path.stops, grid, Region.LATTICE, k)
        bound_L, bound_T = zigzag_bounds(n, m, k)
        assert path.T <= bound_T
        assert path.L <= bound_L


def test_mixed_discrete():
    grid = GridSpec(20, 20, 1)
    path = build_mixed_discrete(2, 3, Fraction(1, 2), grid, 1)
    assert path.construction == "MIXED_DISCRETE"
    assert verify_coverage(path.stops, grid, Region.LATTICE, 1)
    bound_L, bound_T = mixed_discrete_bounds(2, 3, Fraction(1, 2), 20, 20, 1)
    assert path.L <= bound_L and path.T <= bound_T
    with pytest.raises(ValueError):
        build_mixed_discrete(1, 4, Fraction(1, 2), GridSpec(20, 20, 2), 2)


def test_construction_determinism():
    grid = GridSpec(17, 13, 2)
    a = build_zigzag(grid, 2)
    b = build_zigzag(grid, 2)
    assert a.waypoints == b.waypoints and a.stops == b.stops
    c = build_mixed_up_down(2, Fraction(1, 4), grid, 2)
    d = build_mixed_up_down(2, Fraction(1, 4), grid, 2)
    assert c.waypoints == d.waypoints


def test_stops_lie_on_polyline():
    for path in (
        build_up_down(2, GridSpec(9, 7, 2), 2),
        build_discrete_up_down(2, GridSpec(9, 7, 1), 1),
        build_zigzag(GridSpec(9, 7, 1), 1),
        build_mixed_discrete(1, 2, Fraction(1, 3), GridSpec(9, 7, 1), 1),
    ):
        assert path.stops_on_polyline()


def test_cost_bounds_moderate_sweep():
    # spot-check the documented bounds off the acceptance sweep
    for m, n in ((7, 5), (12, 9), (16, 16)):
        for k in (1, 2):
            grid = GridSpec(m, n, k)
            for d in range(1, 2 * k + 1):
                path = build_up_down(d, grid, k)
                bound_L, bound_T = up_down_bounds(d, n, m, k)
                assert path.L <= bound_L and path.T <= bound_T
            path = build_discrete_up_down(1, grid, k)
            bound_L, bound_T = discrete_bounds(1, n, m, k)
            assert path.L <= bound_L and path.T <= bound_T
