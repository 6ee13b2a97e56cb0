"""Closed-form tradeoff bounds, frontier curves, and inequality checks.

Conventions: r is the robustness budget (r >= 9), b_r the larger root of
b**2/(b-1) = (r-1)/2, and all bound formulas are exact closed forms except
the direction frontier, which minimizes consistency numerically over the
feasible (b, delta) rectangle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np
from scipy.optimize import minimize_scalar

from .model import (
    Strategy,
    base_for_robustness,
    rho,
    robust_base_interval,
)
from .ratios import TradeoffPoint

__all__ = [
    "FrontierPoint",
    "FrontierCurve",
    "LowerBound",
    "InequalityReport",
    "position_consistency_bound",
    "direction_tradeoff",
    "direction_frontier",
    "onebit_consistency_upper",
    "kbit_consistency_upper",
    "onebit_lower",
    "kbit_floor",
    "check_segment_growth_lemma",
    "check_prefix_sum_bound",
    "robust_base_grid",
    "growth_lemma_sweep",
    "prefix_bound_sweep",
    "build_frontiers",
    "frontier_to_csv",
]

_B_CAP = 50.0  # search ceiling for the frontier base; c grows ~2b past b_r
_B_FLOOR_PAD = 1e-6


class LowerBound(NamedTuple):
    """A lower bound together with the class of strategies it binds."""

    value: float
    scope: str  # "all_strategies" or "asymptotic_strategies"


@dataclass(frozen=True)
class FrontierPoint:
    """One point of a consistency-robustness frontier at budget r."""

    r: float
    c_upper: float
    c_lower: float
    b_star: Optional[float] = None
    delta_star: Optional[float] = None

    def __post_init__(self) -> None:
        if self.c_lower > self.c_upper + 1e-9:
            raise ValueError(
                f"c_lower {self.c_lower} exceeds c_upper {self.c_upper}"
            )


@dataclass(frozen=True)
class FrontierCurve:
    """Consistency bounds as a function of the robustness budget."""

    hint_class: str
    k: Optional[int]
    points: tuple[FrontierPoint, ...]
    metadata: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        rs = [p.r for p in self.points]
        if any(a >= b for a, b in zip(rs, rs[1:])):
            raise ValueError("frontier points must have strictly increasing r")
        uppers = [p.c_upper for p in self.points]
        for a, b in zip(uppers, uppers[1:]):
            if b > a + 1e-9:
                raise ValueError("c_upper must be non-increasing in r")


def position_consistency_bound(r: float) -> float:
    """Best consistency at robustness r for position hints: (b+1)/(b-1)."""
    b = base_for_robustness(r)
    return (b + 1.0) / (b - 1.0)


def direction_tradeoff(b: float, delta: float) -> TradeoffPoint:
    """Closed-form (consistency, robustness) of the direction family.

    c = 1 + 2(b**2 + delta*b**3)/(b**2 - 1),
    r = 1 + 2(b**2 + b**3/delta)/(b**2 - 1).
    """
    b = float(b)
    delta = float(delta)
    if not math.isfinite(b) or b <= 1.0:
        raise ValueError(f"b must be > 1, got {b!r}")
    if not 0.0 < delta <= 1.0:
        raise ValueError(f"delta must be in (0, 1], got {delta!r}")
    denom = b * b - 1.0
    c = 1.0 + 2.0 * (b * b + delta * b**3) / denom
    r = 1.0 + 2.0 * (b * b + b**3 / delta) / denom
    return TradeoffPoint(c, r, "closed_form", True)


def _delta_for_robustness(b: float, r: float) -> float:
    """Smallest delta keeping the direction family's robustness <= r at base
    b, or inf when no delta <= 1 works."""
    denom = (r - 1.0) * (b * b - 1.0) - 2.0 * b * b
    if denom <= 0.0:
        return math.inf
    return 2.0 * b**3 / denom


def _direction_point(r: float) -> FrontierPoint:
    """Minimize consistency subject to robustness <= r over b in the feasible
    base interval and delta in [1/b, 1] (delta >= 1/b keeps every segment at
    length >= 1)."""

    def cost(b: float) -> float:
        delta = max(_delta_for_robustness(b, r), 1.0 / b)
        if delta > 1.0:
            return math.inf
        return direction_tradeoff(b, delta).consistency

    b_lo, b_hi = robust_base_interval(r)
    b_lo = max(b_lo, 1.0 + _B_FLOOR_PAD)
    b_hi = min(b_hi, _B_CAP)
    if b_hi - b_lo < 1e-12:
        b_star = 0.5 * (b_lo + b_hi)
        delta_star = max(_delta_for_robustness(b_star, r), 1.0 / b_star)
        c = direction_tradeoff(b_star, min(delta_star, 1.0)).consistency
        return FrontierPoint(r, c, c, b_star, min(delta_star, 1.0))

    grid = np.linspace(b_lo, b_hi, 32)
    values = np.array([cost(b) for b in grid])
    seed = int(np.argmin(values))
    lo = grid[max(0, seed - 1)]
    hi = grid[min(len(grid) - 1, seed + 1)]
    result = minimize_scalar(
        cost, bounds=(lo, hi), method="bounded", options={"xatol": 1e-9}
    )
    candidates = [
        (cost(b_lo), b_lo),
        (cost(b_hi), b_hi),
        (float(result.fun), float(result.x)),
    ]
    c_star, b_star = min(candidates)
    delta_star = min(max(_delta_for_robustness(b_star, r), 1.0 / b_star), 1.0)
    return FrontierPoint(r, c_star, c_star, b_star, delta_star)


def direction_frontier(r_values: Sequence[float]) -> FrontierCurve:
    """Best-achievable consistency of the direction family per robustness
    budget; upper and lower coincide because the optimum is computed, not
    bounded."""
    points = tuple(_direction_point(float(r)) for r in r_values)
    return FrontierCurve("direction", None, points)


def onebit_consistency_upper(r: float) -> float:
    """1-bit consistency upper bound: the k-bit bound at k=1."""
    return kbit_consistency_upper(r, 1)


def kbit_consistency_upper(r: float, k: int) -> float:
    """k-bit consistency upper bound 1 + 2 a**(1 + 1/2**k) / (a - 1) with a
    the family base."""
    k = int(k)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k!r}")
    p = rho(r)
    threshold = (1.0 + 2.0**k) ** 2 / 2.0**k
    a = base_for_robustness(r) if p <= threshold else 1.0 + 2.0**k
    return 1.0 + 2.0 * a ** (1.0 + 1.0 / 2.0**k) / (a - 1.0)


def onebit_lower(r: float) -> LowerBound:
    """Consistency lower bound with one hint bit at robustness budget r.

    At r = 9 the bound 5 holds for every strategy; for r > 9 the bound
    1 + 2 b_r/(b_r - 1) binds asymptotic strategies only.
    """
    b = base_for_robustness(r)
    if r <= 9.0:
        return LowerBound(5.0, "all_strategies")
    return LowerBound(1.0 + 2.0 * b / (b - 1.0), "asymptotic_strategies")


def kbit_floor() -> LowerBound:
    """No finite hint string beats consistency 3 at any finite robustness."""
    return LowerBound(3.0, "all_strategies")


@dataclass(frozen=True)
class InequalityReport:
    """Per-index margins of an inequality check; holds when every margin is
    within tolerance."""

    label: str
    margins: tuple[float, ...]
    holds: bool
    violation_index: Optional[int]
    tolerance: float
    tail_index: Optional[int] = None


def check_segment_growth_lemma(
    strategy: Strategy, r: float, tolerance: float = 1e-9
) -> InequalityReport:
    """Margins x_i - (b_r + b_r/(i+1)) x_{i-1} (x_{-1} = 1) for a strategy
    whose competitive ratio is at most r; positive margin = violation."""
    b = base_for_robustness(r)
    x = strategy.lengths
    prev = np.concatenate(([1.0], x[:-1]))
    i = np.arange(len(x), dtype=float)
    margins = x - (b + b / (i + 1.0)) * prev
    return _report("segment_growth", margins, tolerance)


def check_prefix_sum_bound(
    strategy: Strategy, r: float, tolerance: float = 1e-9
) -> InequalityReport:
    """Margins of sum_{j<i} x_j >= x_i/(1 + 1/(i+1)) * ((i+2)/(i+1) - b_r/(b_r-1))
    rearranged so that positive margin = violation; the i = 0 margin is 0 by
    convention (empty sum, trivially holding).  tail_index is the largest i
    where the prefix sum still clears x_i/(b_r - 1) - 1e-2 slack."""
    b = base_for_robustness(r)
    x = strategy.lengths
    csum = np.concatenate(([0.0], np.cumsum(x)[:-1]))
    i = np.arange(len(x), dtype=float)
    scale = x / (1.0 + 1.0 / (i + 1.0))
    margins = scale * (b / (b - 1.0) - (i + 2.0) / (i + 1.0)) - csum
    margins[0] = 0.0
    tail_ok = csum >= (1.0 / (b - 1.0)) * x - 1e-2 * x
    tail_index = int(np.max(np.nonzero(~tail_ok)[0])) if np.any(~tail_ok) else None
    return _report("prefix_sum", margins, tolerance, tail_index)


def _report(
    label: str,
    margins: np.ndarray,
    tolerance: float,
    tail_index: Optional[int] = None,
) -> InequalityReport:
    bad = np.nonzero(margins > tolerance)[0]
    violation = int(bad[0]) if bad.size else None
    return InequalityReport(
        label=label,
        margins=tuple(float(m) for m in margins),
        holds=violation is None,
        violation_index=violation,
        tolerance=float(tolerance),
        tail_index=tail_index,
    )


def robust_base_grid(r: float, points: int = 20) -> np.ndarray:
    """Evenly spaced bases spanning the feasible interval at budget r."""
    lo, hi = robust_base_interval(r)
    return np.linspace(lo, hi, int(points))


def growth_lemma_sweep(
    rs: Sequence[float] = (9.0, 10.0, 13.0, 25.0),
    points: int = 20,
    horizon: int = 101,
) -> list[InequalityReport]:
    """Segment-growth margins for geometric strategies across the feasible
    base range of each budget."""
    from .model import make_geometric

    reports = []
    for r in rs:
        for b in robust_base_grid(r, points):
            reports.append(
                check_segment_growth_lemma(make_geometric(b, horizon), r)
            )
    return reports


def prefix_bound_sweep(
    rs: Sequence[float] = (9.0, 10.0, 13.0, 25.0),
    points: int = 20,
    horizon: int = 101,
) -> list[InequalityReport]:
    """Prefix-sum margins for geometric strategies across the feasible base
    range of each budget."""
    from .model import make_geometric

    reports = []
    for r in rs:
        for b in robust_base_grid(r, points):
            reports.append(check_prefix_sum_bound(make_geometric(b, horizon), r))
    return reports


def _monotone_curve(
    hint_class: str, k: Optional[int], pairs: list[tuple[float, float, float]]
) -> FrontierCurve:
    points = tuple(FrontierPoint(r, cu, cl) for r, cu, cl in pairs)
    return FrontierCurve(hint_class, k, points)


def build_frontiers(
    r_values: Sequence[float], ks: Sequence[int] = (2,)
) -> list[FrontierCurve]:
    """Frontier curves for every hint class at the given budgets: position
    (tight), direction (computed optimum), 1-bit and k-bit (upper bound with
    the class floor as lower)."""
    rs = [float(r) for r in r_values]
    position = _monotone_curve(
        "position",
        None,
        [(r, position_consistency_bound(r), position_consistency_bound(r)) for r in rs],
    )
    direction = direction_frontier(rs)
    onebit = _monotone_curve(
        "onebit",
        1,
        [(r, onebit_consistency_upper(r), onebit_lower(r).value) for r in rs],
    )
    curves = [position, direction, onebit]
    for k in ks:
        curves.append(
            _monotone_curve(
                "kbit",
                int(k),
                [(r, kbit_consistency_upper(r, k), kbit_floor().value) for r in rs],
            )
        )
    return curves


def frontier_to_csv(curves: Sequence[FrontierCurve]) -> str:
    """CSV with header hint_class,k,r,c_upper,c_lower,b_star,delta_star;
    numbers use 9 significant digits, '.' decimal separator, 'inf' for
    infinity, empty for absent fields."""

    def num(value: Optional[float]) -> str:
        if value is None:
            return ""
        if math.isinf(value):
            return "inf"
        return f"{value:.9g}"

    lines = ["hint_class,k,r,c_upper,c_lower,b_star,delta_star"]
    for curve in curves:
        k_str = "" if curve.k is None else str(curve.k)
        for p in curve.points:
            lines.append(
                f"{curve.hint_class},{k_str},{num(p.r)},{num(p.c_upper)},"
                f"{num(p.c_lower)},{num(p.b_star)},{num(p.delta_star)}"
            )
    return "\n".join(lines) + "\n"
