"""Trade-off boundaries: coverage-rate functions, polylines, gap lemmas."""
from __future__ import annotations

import random
from fractions import Fraction

import pytest

from gridcover.curves import (
    CostPair,
    f,
    f_LB_C,
    f_LB_D,
    f_UB_C,
    f_UB_D,
    gap_candidates,
    lower_bound_curve,
    min_length,
    min_stops,
    polyline_from_f,
    tradeoff_holds,
    upper_bound_curve,
)
from gridcover.geometry import GridSpec
from gridcover.variants import VariantKind, classify, relaxed

HALF = Fraction(1, 2)


def test_f_frozen():
    assert f(4, 2) == 8  # d=2k
    assert f(2, 2) == 6
    assert f(5, 1) == 2  # saturation
    assert f(1, 2) == Fraction(7, 2)
    with pytest.raises(ValueError):
        f(0, 2)


def test_f_LB_C_frozen():
    assert f_LB_C(1, 2) == Fraction(7, 2)
    assert f_LB_C(Fraction(3, 2), 2) == Fraction(19, 4)  # midpoint of 3.5 and 6
    assert f_LB_C(7, 2) == 8
    with pytest.raises(ValueError):
        f_LB_C(HALF, 2)


def test_f_UB_C_frozen():
    assert f_UB_C(2, 2) == 6
    assert f_UB_C(3, 2) == 7
    assert f_UB_C(10, 3) == 18
    with pytest.raises(ValueError):
        f_UB_C(1, 2)


def test_f_LB_D_frozen():
    assert f_LB_D(1, 1) == 3
    assert f_LB_D(2, 1) == 4
    assert f_LB_D(3, 1) == 5
    assert f_LB_D(Fraction(5, 2), 1) == Fraction(9, 2)
    assert f_LB_D(9, 1) == 5
    with pytest.raises(ValueError):
        f_LB_D(HALF, 1)


def test_f_UB_D_frozen():
    assert f_UB_D(1, 2) == 5
    assert f_UB_D(4, 2) == 12
    assert f_UB_D(5, 2) == 13
    assert f_UB_D(Fraction(3, 2), 2) == Fraction(13, 2)  # between d=1 and d=2
    with pytest.raises(ValueError):
        f_UB_D(HALF, 2)


def test_family_concavity_and_ordering():
    step = Fraction(1, 4)
    for k in range(1, 11):
        for fn, lo in ((lambda d: f(d, k), step), (lambda d: f_LB_C(d, k), 1),
                       (lambda d: f_LB_D(d, k), 1), (lambda d: f_UB_D(d, k), 1),
                       (lambda d: f_UB_C(d, k), 2)):
            ds = [lo + i * step for i in range(int((2 * k + 3 - lo) / step))]
            vals = [fn(d) for d in ds]
            for a, b, c in zip(vals, vals[1:], vals[2:]):
                assert c - b <= b - a  # second difference nonpositive
        for j in range(1, 2 * k + 2):
            assert f_LB_C(j, k) <= f(j, k) + 0
            # necessary-condition rate dominates the constructive rate, so the
            # lower curve T = C/f_LB_D sits below the upper curve
            assert f_LB_D(j, k) >= f_UB_D(j, k)
            if j == 1 or j % 2 == 0 or j == 2 * k + 1:
                assert f_LB_D(j, k) == f_UB_D(j, k)
        for j in range(2, 2 * k + 1, 2):
            assert f_UB_C(j, k) == f(j, k)
        # both D families pass through (1, 2k+1)
        assert f_UB_D(1, k) == 2 * k + 1 and f_LB_D(1, k) == 2 * k + 1


def test_tradeoff_holds_examples():
    g = GridSpec(10, 10, 1)
    assert not tradeoff_holds(CostPair(49, 2), g, relaxed(1))
    g2 = GridSpec(2, 2, Fraction(3, 2))
    assert tradeoff_holds(CostPair(2, 3), g2, classify(Fraction(3, 2)))
    tiny = GridSpec(1, 1, 1)  # N=1 <= 2k^2: nonpositive rhs
    assert tradeoff_holds(CostPair(100, 5), tiny, relaxed(1))
    with pytest.raises(ValueError, match="constraint defined for T>1"):
        tradeoff_holds(CostPair(0, 1), g, classify(1))


def test_tradeoff_short_segments_still_binding():
    # d = L/(T-1) < 1 goes below the first abscissa; the chord through the
    # origin keeps the constraint necessary there
    g = GridSpec(10, 10, 1)
    variant = classify(1)
    assert not tradeoff_holds(CostPair(10, 40), g, variant)
    assert not tradeoff_holds(CostPair(40, 70), g, variant)  # 40*f(1) = 60 < 98
    assert tradeoff_holds(CostPair(66, 100), g, variant)  # 66*f(1) = 99 >= 98


def test_polyline_from_f_c_variant():
    curve = lower_bound_curve(GridSpec(10, 10, 1), classify(1))
    assert curve.rhs == 98
    assert list(curve.vertices) == [
        (Fraction(196, 3), Fraction(196, 3)),
        (98, 49),
    ]
    assert curve.ray_T == 49
    assert curve.to_jsonable()["vertices"][0] == [pytest.approx(65.3333333), pytest.approx(65.3333333)]


def test_polyline_from_f_d_variant():
    curve = lower_bound_curve(GridSpec(10, 10, Fraction(3, 2)), classify(Fraction(3, 2)))
    assert curve.rhs == 95
    assert list(curve.vertices) == [
        (Fraction(95, 3), Fraction(95, 3)),
        (Fraction(95, 2), Fraction(95, 4)),
        (57, 19),
    ]
    assert curve.ray_T == 19


def test_polyline_single_abscissa():
    curve = polyline_from_f([2], [5], 5, VariantKind.C, "lower", 1)
    assert list(curve.vertices) == [(2, 1)]


def test_polyline_rejects_non_concave():
    with pytest.raises(ValueError, match="non-concave"):
        polyline_from_f([1, 2, 3], [1, 2, 4], 10, VariantKind.C, "lower", 1)


def test_upper_bound_curve_d():
    curve = upper_bound_curve(GridSpec(10, 10, Fraction(3, 2)), classify(Fraction(3, 2)))
    assert curve.rhs == 100  # the constructions pay for every unit of area
    assert list(curve.vertices) == [
        (Fraction(100, 3), Fraction(100, 3)),
        (50, 25),
        (60, 20),
    ]
    assert curve.ray_T == 20


def test_rc_boundary():
    curve = lower_bound_curve(GridSpec(10, 10, 1), relaxed(1))
    assert curve.min_L == 49
    assert curve.T_of(2) == Fraction(98, 2) + 1
    samples = curve.sample()
    assert len(samples) == 256
    # L increases along the parametrization toward d -> 2k
    assert samples[0][0] < samples[-1][0]


def test_degenerate_curve_flag():
    tiny = GridSpec(1, 1, 1)
    curve = lower_bound_curve(tiny, classify(1))
    assert curve.degenerate and curve.single_stop_feasible


def test_min_length_min_stops():
    rc = relaxed(1)
    g = GridSpec(10, 10, 1)
    assert min_length(g, rc) == 49
    assert min_stops(g, rc) == 50
    d_grid = GridSpec(10, 10, Fraction(3, 2))
    dv = classify(Fraction(3, 2))
    assert min_stops(d_grid, dv) == 20
    assert min_length(d_grid, dv) == Fraction(95, 3)
    cv = classify(1)
    lo, hi = min_length(g, cv)
    assert lo == Fraction(98, Fraction(3, 2)) and hi == Fraction(98, 1)
    assert min_stops(g, cv) == 50


def test_convex_region_property():
    rng = random.Random(11)
    g = GridSpec(12, 12, 2)
    for variant in (classify(2), classify(Fraction(5, 2)), relaxed(2)):
        feasible = []
        while len(feasible) < 12:
            pair = CostPair(Fraction(rng.randint(1, 4000), 8), rng.randint(2, 300))
            if tradeoff_holds(pair, g, variant):
                feasible.append(pair)
        for _ in range(40):
            a, b = rng.choice(feasible), rng.choice(feasible)
            lam = Fraction(rng.randint(0, 16), 16)
            mid = CostPair(lam * a.L + (1 - lam) * b.L, lam * a.T + (1 - lam) * b.T)
            assert tradeoff_holds(mid, g, variant)


def _gap_ok(lower, upper, bound_L, bound_T):
    tol = Fraction(1, 10**9)
    for (L1, T1), d1 in zip(lower.vertices, lower.abscissae):
        candidates = gap_candidates((L1, T1), d1, upper)
        assert any(
            rl <= bound_L + tol and rt <= bound_T + tol for rl, rt in candidates
        ), (d1, [(float(a), float(b)) for a, b in candidates])


def test_gap_lemma_c():
    level = 10**6  # one shared constant; the ratios are scale-invariant
    for k in range(1, 26):
        abscissae = list(range(1, 2 * k + 1))
        lower = polyline_from_f(abscissae, [f(d, k) for d in abscissae], level, VariantKind.C, "lower", k)
        evens = list(range(2, 2 * k + 1, 2))
        upper = polyline_from_f(evens, [f(d, k) for d in evens], level, VariantKind.C, "upper", k)
        bound_L = {1: Fraction(3, 2), 2: Fraction(7, 6)}.get(k, Fraction(11, 10))
        _gap_ok(lower, upper, bound_L, Fraction(9, 8))


def test_gap_lemma_d():
    level = 10**6
    for k in range(1, 26):
        abscissae = list(range(1, 2 * k + 2))
        lower = polyline_from_f(abscissae, [f_LB_D(d, k) for d in abscissae], level, VariantKind.D, "lower", k)
        ub_abscissae = [1] + list(range(2, 2 * k + 1, 2)) + [2 * k + 1]
        upper = polyline_from_f(ub_abscissae, [f_UB_D(d, k) for d in ub_abscissae], level, VariantKind.D, "upper", k)
        _gap_ok(lower, upper, Fraction(11, 10), Fraction(11, 10))


def test_gap_identity_d():
    # radial gap at odd vertices: 1 + 1/(f_LB_D(d) - 1)
    level = 10**6
    for k in range(1, 11):
        ub_abscissae = [1] + list(range(2, 2 * k + 1, 2)) + [2 * k + 1]
        upper = polyline_from_f(ub_abscissae, [f_UB_D(d, k) for d in ub_abscissae], level, VariantKind.D, "upper", k)
        # interior odd vertices only: d = 2k+1 is shared, ratio exactly 1
        for t in range(1, k):
            d = 2 * t + 1
            point = (Fraction(level * d, f_LB_D(d, k)), Fraction(level, f_LB_D(d, k)))
            candidates = gap_candidates(point, d, upper)
            expected = 1 + Fraction(1, f_LB_D(d, k) - 1)
            assert any(rl == rt == expected for rl, rt in candidates), (k, d)


def test_curve_point_lookup():
    curve = lower_bound_curve(GridSpec(10, 10, 1), classify(1))
    p = curve.point_at_d(1)
    assert (p.L, p.T) == (Fraction(196, 3), Fraction(196, 3))
    mid = curve.point_at_d(Fraction(3, 2))
    assert mid.T == curve.T_at_L(mid.L)
