"""Length / stop-count trade-off curves.

A covering path with T stops and length L has average consecutive-stop
distance d = L/(T-1), and each additional stop can newly cover only a bounded
measure that depends concavely on d.  That yields a family of concave overlap
functions (f, f_LB_C, f_UB_C, f_LB_D, f_UB_D) and the necessary condition

    (T - 1) * f_variant(L / (T - 1)) >= covered measure outside one ball.

Mapping a concave piecewise-linear overlap function g through
(a_i, b_i) -> (a_i * C / b_i, C / b_i) turns the level set Y*g(X/Y) = C into a
convex polyline in the (L, T) plane: the lower (or upper) boundary curve.
Everything here is exact rational arithmetic; the relaxed-variant boundary is
the only smooth curve and gets a parametric representation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .geometry import GridSpec, Rational, as_rational
from .variants import Variant, VariantKind, classify, relaxed


@dataclass(frozen=True)
class CostPair:
    """A (path length, stop count) pair; T need not be integral on curves."""

    L: Rational
    T: Rational

    def __post_init__(self):
        object.__setattr__(self, "L", as_rational(self.L))
        object.__setattr__(self, "T", as_rational(self.T))
        if self.L < 0:
            raise ValueError("path length cannot be negative")
        if self.T < 1:
            raise ValueError("stop count is at least 1")


def f(d, k) -> Rational:
    """New area a stop covers when placed d beyond its predecessor (radius k)."""
    d, k = as_rational(d), as_rational(k)
    if d <= 0:
        raise ValueError("f requires d > 0")
    if k <= 0:
        raise ValueError("f requires k > 0")
    if d > 2 * k:
        return 2 * k * k
    return _norm(d * (2 * k - Fraction(d, 2)))


def f_LB_C(d, k: int) -> Rational:
    """Piecewise-linear interpolation of f at integer distances (lower bound)."""
    d = as_rational(d)
    _check_int_k(k)
    if d < 1:
        raise ValueError("f_LB_C requires d >= 1")
    if d >= 2 * k:
        return 2 * k * k
    t = _floor(d)
    return _norm((t + 1 - d) * f(t, k) + (d - t) * f(t + 1, k))


def f_UB_C(d, k: int) -> Rational:
    """Interpolation of f at even distances 2, 4, ..., 2k (upper bound)."""
    d = as_rational(d)
    _check_int_k(k)
    if d < 2:
        raise ValueError("f_UB_C requires d >= 2")
    if d >= 2 * k:
        return 2 * k * k
    lo = 2 * (_floor(d) // 2)
    hi = lo + 2
    w = Fraction(d - lo, 2)
    return _norm((1 - w) * f(lo, k) + w * f(hi, k))


def _f_LB_D_at_int(j: int, k: int) -> Rational:
    if j >= 2 * k + 1:
        return 2 * k * k + 2 * k + 1
    value = j * (2 * k + 1) - Fraction(j * j, 2)
    if j % 2 == 1:
        value += Fraction(1, 2)
    return _norm(value)


def f_LB_D(d, k: int) -> Rational:
    """New lattice points a stop covers at distance d from its predecessor,
    interpolated linearly between integer distances (lower bound)."""
    d = as_rational(d)
    _check_int_k(k)
    if d < 1:
        raise ValueError("f_LB_D requires d >= 1")
    if d >= 2 * k + 1:
        return 2 * k * k + 2 * k + 1
    t = _floor(d)
    lo, hi = _f_LB_D_at_int(t, k), _f_LB_D_at_int(t + 1, k)
    return _norm((t + 1 - d) * lo + (d - t) * hi)


def _discrete_abscissae(k: int) -> list[int]:
    # Distances realizable by the discrete path family: 1, the evens, 2k+1.
    return [1] + list(range(2, 2 * k + 1, 2)) + [2 * k + 1]


def _f_UB_D_at(j: int, k: int) -> Rational:
    if j == 1:
        return 2 * k + 1
    if j == 2 * k + 1:
        return 2 * k * k + 2 * k + 1
    return j * (2 * k + 1) - j * j // 2


def f_UB_D(d, k: int) -> Rational:
    """Overlap function matched by the discrete constructions (upper bound):
    interpolation over distances {1, 2, 4, ..., 2k, 2k+1}."""
    d = as_rational(d)
    _check_int_k(k)
    if d < 1:
        raise ValueError("f_UB_D requires d >= 1")
    if d >= 2 * k + 1:
        return 2 * k * k + 2 * k + 1
    points = _discrete_abscissae(k)
    for lo, hi in zip(points, points[1:]):
        if d <= hi:
            w = Fraction(d - lo, hi - lo)
            return _norm((1 - w) * _f_UB_D_at(lo, k) + w * _f_UB_D_at(hi, k))
    raise AssertionError("unreachable")


def tradeoff_holds(cost: CostPair, grid: GridSpec, variant) -> bool:
    """Necessary feasibility condition linking length and stop count.

    Distances below 1 cannot occur between distinct integer stops, so for the
    C and D variants the overlap function is extended below d = 1 by its chord
    through the origin, which keeps the condition necessary.
    """
    variant = _as_variant(variant, grid)
    L, T = as_rational(cost.L), as_rational(cost.T)
    if T <= 1:
        raise ValueError("constraint defined for T>1")
    k = variant.k_effective
    rhs = grid.N - variant.ball_measure
    if L == 0:
        return 0 >= rhs
    d = _norm(Fraction(L, T - 1))
    if variant.kind is VariantKind.RC:
        lhs = (T - 1) * f(d, k)
    elif variant.kind is VariantKind.C:
        lhs = (T - 1) * (f_LB_C(d, k) if d >= 1 else d * f_LB_C(1, k))
    elif variant.kind is VariantKind.D:
        lhs = (T - 1) * (f_LB_D(d, k) if d >= 1 else d * f_LB_D(1, k))
    else:
        raise ValueError("trade-off constraint applies to RC, C, or D")
    return lhs >= rhs


@dataclass(frozen=True)
class TradeoffCurve:
    """Convex piecewise-linear boundary in the (L, T) plane.

    Stores the overlap-function samples it came from, so points on the curve
    can be addressed either by L or by the distance abscissa d.  The final
    vertex continues as a constant-T ray toward L = +infinity.
    """

    variant: VariantKind
    role: str  # "lower" or "upper"
    abscissae: tuple
    values: tuple
    rhs: Rational
    k: Rational
    single_stop_feasible: bool = False

    def __post_init__(self):
        if self.single_stop_feasible:
            return
        if len(self.abscissae) != len(self.values) or not self.abscissae:
            raise ValueError("abscissae and values must align")
        slopes = None
        for (a0, b0), (a1, b1) in zip(
            zip(self.abscissae, self.values), zip(self.abscissae[1:], self.values[1:])
        ):
            if a1 <= a0:
                raise ValueError("abscissae must increase")
            if b1 <= b0:
                raise ValueError("overlap values must increase")
            s = Fraction(b1 - b0, a1 - a0)
            if slopes is not None and s > slopes:
                raise ValueError("non-concave input sequence")
            slopes = s

    @property
    def degenerate(self) -> bool:
        return self.single_stop_feasible

    @property
    def vertices(self) -> tuple:
        if self.single_stop_feasible:
            return ((0, 1),)
        return tuple(
            (_norm(Fraction(a * self.rhs, b)), _norm(Fraction(self.rhs, b)))
            for a, b in zip(self.abscissae, self.values)
        )

    @property
    def ray_T(self) -> Rational:
        return self.vertices[-1][1]

    def overlap_at(self, d) -> Rational:
        """The piecewise-linear overlap value g(d) backing this curve."""
        d = as_rational(d)
        a, v = self.abscissae, self.values
        if d <= a[0]:
            # chord through the origin below the first sample
            return _norm(Fraction(d * v[0], a[0]))
        if d >= a[-1]:
            return v[-1]
        for (a0, b0), (a1, b1) in zip(zip(a, v), zip(a[1:], v[1:])):
            if d <= a1:
                w = Fraction(d - a0, a1 - a0)
                return _norm((1 - w) * b0 + w * b1)
        raise AssertionError("unreachable")

    def point_at_d(self, d) -> CostPair:
        """Curve point with consecutive-stop distance d (vertex for sampled d)."""
        g = self.overlap_at(d)
        return CostPair(_norm(Fraction(as_rational(d) * self.rhs, g)), _norm(Fraction(self.rhs, g)))

    def T_at_L(self, L) -> Rational:
        """Height of the curve at length L (ray value beyond the last vertex)."""
        L = as_rational(L)
        verts = self.vertices
        if L <= verts[0][0]:
            return verts[0][1]
        for (L0, T0), (L1, T1) in zip(verts, verts[1:]):
            if L <= L1:
                w = Fraction(L - L0, L1 - L0)
                return _norm((1 - w) * T0 + w * T1)
        return verts[-1][1]

    def to_jsonable(self) -> dict:
        return {
            "variant": self.variant.value,
            "role": self.role,
            "rhs": float(self.rhs),
            "vertices": [[float(L), float(T)] for L, T in self.vertices],
            "ray_T": float(self.ray_T),
        }


@dataclass(frozen=True)
class RelaxedBoundary:
    """Smooth lower boundary of the relaxed variant, parametrized by the
    consecutive-stop distance d in (0, 2k]."""

    grid: GridSpec
    k: Rational
    rhs: Rational

    @property
    def degenerate(self) -> bool:
        return self.rhs <= 0

    def L_of(self, d) -> Rational:
        d = as_rational(d)
        return _norm(Fraction(self.rhs, 2 * self.k - Fraction(d, 2)))

    def T_of(self, d) -> Rational:
        d = as_rational(d)
        return _norm(Fraction(self.rhs, f(d, self.k)) + 1)

    def point_at_d(self, d) -> CostPair:
        return CostPair(self.L_of(d), self.T_of(d))

    @property
    def min_L(self) -> Rational:
        """Infimum of L on the boundary (approached as d -> 0)."""
        return _norm(Fraction(self.rhs, 2 * self.k))

    @property
    def ray_T(self) -> Rational:
        return self.T_of(2 * self.k)

    def sample(self, count: int = 256) -> list:
        ds = [Fraction(2 * self.k * i, count) for i in range(1, count + 1)]
        return [(float(self.L_of(d)), float(self.T_of(d))) for d in ds]

    def to_jsonable(self) -> dict:
        return {
            "variant": VariantKind.RC.value,
            "role": "lower",
            "rhs": float(self.rhs),
            "vertices": [[L, T] for L, T in self.sample()],
            "ray_T": float(self.ray_T),
        }


def polyline_from_f(abscissae: Sequence, f_values: Sequence, C, variant=VariantKind.C,
                    role: str = "lower", k=None) -> TradeoffCurve:
    """Map overlap samples (a_i, b_i) at level C to the polyline with vertices
    (a_i*C/b_i, C/b_i).  Trailing samples sharing the maximal value collapse
    into the terminal constant-T ray."""
    C = as_rational(C)
    if C <= 0:
        raise ValueError("level constant must be positive")
    a = [as_rational(v) for v in abscissae]
    b = [as_rational(v) for v in f_values]
    if len(a) != len(b) or not a:
        raise ValueError("abscissae and values must align")
    while len(b) >= 2 and b[-1] == b[-2]:
        a.pop(), b.pop()
    return TradeoffCurve(variant=variant, role=role, abscissae=tuple(a),
                         values=tuple(b), rhs=C, k=k)


def lower_bound_curve(grid: GridSpec, variant):
    """Certified lower boundary: every feasible (L, T) lies on or above it."""
    variant = _as_variant(variant, grid)
    k = variant.k_effective
    rhs = grid.N - variant.ball_measure
    if variant.kind is VariantKind.RC:
        return RelaxedBoundary(grid=grid, k=k, rhs=rhs)
    if rhs <= 0:
        return TradeoffCurve(variant=variant.kind, role="lower", abscissae=(),
                             values=(), rhs=rhs, k=k, single_stop_feasible=True)
    if variant.kind is VariantKind.C:
        a = list(range(1, 2 * k + 1))
        return polyline_from_f(a, [f(j, k) for j in a], rhs, variant.kind, "lower", k)
    if variant.kind is VariantKind.D:
        a = list(range(1, 2 * k + 2))
        return polyline_from_f(a, [_f_LB_D_at_int(j, k) for j in a], rhs,
                               variant.kind, "lower", k)
    raise ValueError("lower bound curve applies to RC, C, or D")


def upper_bound_curve(grid: GridSpec, variant) -> TradeoffCurve:
    """Costs achievable by the constructive path family, as a polyline.

    The discrete variant's constant is the full grid area N (not the reduced
    N - ball measure): the constructions pay for every unit of area.
    """
    variant = _as_variant(variant, grid)
    k = variant.k_effective
    if variant.kind is VariantKind.C:
        rhs = grid.N - variant.ball_measure
        if rhs <= 0:
            return TradeoffCurve(variant=variant.kind, role="upper", abscissae=(),
                                 values=(), rhs=rhs, k=k, single_stop_feasible=True)
        a = list(range(2, 2 * k + 1, 2))
        return polyline_from_f(a, [f(j, k) for j in a], rhs, variant.kind, "upper", k)
    if variant.kind is VariantKind.D:
        rhs = grid.N
        a = _discrete_abscissae(k)
        return polyline_from_f(a, [_f_UB_D_at(j, k) for j in a], rhs,
                               variant.kind, "upper", k)
    raise ValueError("upper bound curve applies to C or D")


def min_length(grid: GridSpec, variant):
    """Exact lower bound on path length; the C variant is only bracketed, so
    it reports the (low, high) interval of candidate bound values."""
    variant = _as_variant(variant, grid)
    k = variant.k_effective
    if variant.kind is VariantKind.RC:
        rhs = grid.N - 2 * k * k
        return _norm(Fraction(max(rhs, 0), 2 * k))
    if variant.kind is VariantKind.C:
        rhs = grid.N - 2 * k * k
        if rhs <= 0:
            return (0, 0)
        return (_norm(Fraction(rhs, f(1, k))), _norm(Fraction(2 * rhs, f(2, k))))
    if variant.kind is VariantKind.D:
        rhs = grid.N - (2 * k * k + 2 * k + 1)
        return _norm(Fraction(max(rhs, 0), 2 * k + 1))
    raise ValueError("min_length applies to RC, C, or D")


def min_stops(grid: GridSpec, variant) -> Rational:
    """Exact lower bound on the number of stops."""
    variant = _as_variant(variant, grid)
    k = variant.k_effective
    if variant.kind in (VariantKind.RC, VariantKind.C):
        return _norm(Fraction(grid.N, 2 * k * k))
    if variant.kind is VariantKind.D:
        return _norm(Fraction(grid.N, 2 * k * k + 2 * k + 1))
    raise ValueError("min_stops applies to RC, C, or D")


def gap_candidates(lower_point, d1, upper: TradeoffCurve) -> list:
    """Candidate (L-ratio, T-ratio) pairs comparing a lower-curve vertex
    against nearby points of the upper curve: the same-abscissa point, the
    equal-T point, the equal-L point, and the first upper vertex."""
    L1, T1 = (as_rational(lower_point[0]), as_rational(lower_point[1]))
    d1 = as_rational(d1)
    out = []
    a, v, C = upper.abscissae, upper.values, upper.rhs

    def ratios(L2, T2):
        out.append((_norm(Fraction(L2, L1)), _norm(Fraction(T2, T1))))

    if a[0] <= d1 <= a[-1]:
        p = upper.point_at_d(d1)
        ratios(p.L, p.T)
    # equal T: invert g(x) = C / T1 on the increasing piecewise-linear g
    target = Fraction(C, T1)
    if v[0] <= target <= v[-1]:
        for (a0, b0), (a1, b1) in zip(zip(a, v), zip(a[1:], v[1:])):
            if b0 <= target <= b1:
                x = a0 + Fraction((target - b0) * (a1 - a0), b1 - b0)
                ratios(_norm(x * T1), T1)
                break
    # equal L: solve x*C = L1*g(x) per segment
    for (a0, b0), (a1, b1) in zip(zip(a, v), zip(a[1:], v[1:])):
        slope = Fraction(b1 - b0, a1 - a0)
        denom = C - L1 * slope
        if denom != 0:
            x = Fraction(L1 * (b0 - slope * a0), denom)
            if a0 <= x <= a1:
                g = b0 + slope * (x - a0)
                ratios(_norm(Fraction(x * C, g)), _norm(Fraction(C, g)))
                break
    first = upper.vertices[0]
    ratios(first[0], first[1])
    return out


def _as_variant(variant, grid: GridSpec) -> Variant:
    if isinstance(variant, Variant):
        return variant
    if isinstance(variant, str):
        variant = VariantKind(variant)
    if variant is VariantKind.RC:
        return relaxed(grid.k_raw)
    derived = classify(grid.k_raw)
    if derived.kind is not variant:
        raise ValueError(
            f"radius {grid.k_raw} classifies as {derived.kind.value}, not {variant.value}"
        )
    return derived


def _check_int_k(k):
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError("requires a positive integer radius")


def _floor(value) -> int:
    if isinstance(value, int):
        return value
    return int(value.numerator // value.denominator)


def _norm(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value
