"""Hint-aware strategy families and the trusted-hint rules.

Three families, each mapping a hint to a member strategy:

* position: the hint names the exact target position; the member is a
  geometric strategy shrunk so one turn point lands exactly on it.
* direction: the hint names the target's branch; even iterations search the
  hinted branch with lengths b**i, odd ones the other with delta * b**i.
* k-bit: the hint is the index of the best member among 2**k phase-shifted
  geometric strategies a**(i + j/2**k), all starting on branch 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .model import (
    DEFAULT_HORIZON,
    BitStringHint,
    DirectionHint,
    Hint,
    HorizonTooShort,
    PositionHint,
    Strategy,
    Target,
    base_for_robustness,
    complement,
    rho,
    search_cost,
    strategy_from_lengths,
)

__all__ = [
    "HintedStrategy",
    "LabeledInterval",
    "LinePartition",
    "position_hint_strategy",
    "position_true_hint",
    "position_family",
    "direction_hint_strategy",
    "direction_true_hint",
    "direction_family",
    "kbit_base",
    "kbit_hint_strategy",
    "kbit_family",
    "best_hint_index",
    "preferred_partition",
    "family_to_json",
    "family_from_json",
    "partition_to_json",
    "partition_from_json",
]


@dataclass(frozen=True)
class HintedStrategy:
    """A strategy family keyed by hints.

    ``select`` maps a hint to a member strategy.  ``hint_space`` is the finite
    set of admissible hints (a grid when the true space is continuous).
    ``true_hint_of`` maps a target to its trusted hint(s); None means the
    correct hint is whichever member finds the target cheapest.
    """

    family: str
    horizon: int
    r: Optional[float] = None
    b: Optional[float] = None
    delta: Optional[float] = None
    k: Optional[int] = None
    select: Callable[[Hint], Strategy] = field(default=None, compare=False)
    hint_space: Optional[tuple[Hint, ...]] = field(default=None, compare=False)
    true_hint_of: Optional[Callable[[Target], object]] = field(
        default=None, compare=False
    )


def _check_horizon(horizon: int) -> int:
    horizon = int(horizon)
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon!r}")
    return horizon


def _anchor_index(base: float, distance: float) -> int:
    """Smallest j >= 0 with base**j >= distance."""
    j = max(0, math.ceil(math.log(distance, base) - 1e-12))
    while base**j < distance:
        j += 1
    while j > 0 and base ** (j - 1) >= distance:
        j -= 1
    return j


def position_hint_strategy(
    r: float, hint: PositionHint, horizon: int = DEFAULT_HORIZON
) -> Strategy:
    """Geometric base-b_r strategy shrunk so that turn point j_t (the smallest
    with b_r**j_t >= hint.distance) lands exactly on the hinted position, with
    segment j_t searching the hinted branch."""
    if not isinstance(hint, PositionHint):
        raise ValueError(f"position family needs a PositionHint, got {hint!r}")
    horizon = _check_horizon(horizon)
    base = base_for_robustness(r)
    j = _anchor_index(base, hint.distance)
    if horizon <= j:
        raise HorizonTooShort(
            f"horizon {horizon} must exceed the hinted iteration {j}"
        )
    shrink = base**j / hint.distance  # in [1, base)
    lengths = np.power(base, np.arange(horizon, dtype=float)) / shrink
    lengths[j] = hint.distance  # exact: rounding must not undershoot the hint
    first = hint.branch if j % 2 == 0 else complement(hint.branch)
    return strategy_from_lengths(lengths, first)


def position_true_hint(target: Target) -> PositionHint:
    """The correct position hint simply names the target."""
    return PositionHint(target.distance, target.branch)


def position_family(
    r: float,
    horizon: int = DEFAULT_HORIZON,
    max_hint_distance: float = 2.0**20,
    hints_per_decade: int = 128,
) -> HintedStrategy:
    """Position-hint family with a log-spaced hint grid standing in for the
    continuous hint space."""
    base_for_robustness(r)  # validate r early
    horizon = _check_horizon(horizon)
    if max_hint_distance < 1.0:
        raise ValueError("max_hint_distance must be >= 1")
    decades = math.log10(max_hint_distance)
    count = max(2, int(round(decades * hints_per_decade)) + 1)
    distances = np.logspace(0.0, decades, count)
    hint_space = tuple(
        PositionHint(float(d), branch) for branch in (0, 1) for d in distances
    )
    return HintedStrategy(
        family="position",
        horizon=horizon,
        r=float(r),
        select=lambda hint: position_hint_strategy(r, hint, horizon),
        hint_space=hint_space,
        true_hint_of=position_true_hint,
    )


def direction_hint_strategy(
    b: float, delta: float, hint: DirectionHint, horizon: int = DEFAULT_HORIZON
) -> Strategy:
    """Even iterations search the hinted branch to b**i, odd iterations the
    complement to delta * b**i."""
    if not isinstance(hint, DirectionHint):
        raise ValueError(f"direction family needs a DirectionHint, got {hint!r}")
    b = float(b)
    delta = float(delta)
    if not math.isfinite(b) or b <= 1.0:
        raise ValueError(f"b must be > 1, got {b!r}")
    if not 0.0 < delta <= 1.0:
        raise ValueError(f"delta must be in (0, 1], got {delta!r}")
    horizon = _check_horizon(horizon)
    lengths = np.power(b, np.arange(horizon, dtype=float))
    lengths[1::2] *= delta
    return strategy_from_lengths(lengths, hint.branch)


def direction_true_hint(target: Target) -> DirectionHint:
    """The correct direction hint names the target's branch."""
    return DirectionHint(target.branch)


def direction_family(
    b: float, delta: float, horizon: int = DEFAULT_HORIZON
) -> HintedStrategy:
    """Direction-hint family: one member per branch."""
    return HintedStrategy(
        family="direction",
        horizon=_check_horizon(horizon),
        b=float(b),
        delta=float(delta),
        select=lambda hint: direction_hint_strategy(b, delta, hint, horizon),
        hint_space=(DirectionHint(0), DirectionHint(1)),
        true_hint_of=direction_true_hint,
    )


def kbit_base(r: float, k: int) -> float:
    """Growth base of the k-bit family: b_r while rho(r) stays below
    (1+2**k)**2 / 2**k, then the constant 1 + 2**k."""
    k = int(k)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k!r}")
    p = rho(r)
    threshold = (1.0 + 2.0**k) ** 2 / 2.0**k
    if p <= threshold:
        return base_for_robustness(r)
    return 1.0 + 2.0**k


def kbit_hint_strategy(
    r: float, k: int, hint: BitStringHint, horizon: int = DEFAULT_HORIZON
) -> Strategy:
    """Member j of the k-bit family: lengths a**(i + j/2**k), first branch 0."""
    if not isinstance(hint, BitStringHint):
        raise ValueError(f"k-bit family needs a BitStringHint, got {hint!r}")
    if hint.k != int(k):
        raise ValueError(f"hint has k={hint.k}, family has k={k}")
    horizon = _check_horizon(horizon)
    a = kbit_base(r, k)
    exponents = np.arange(horizon, dtype=float) + hint.index / 2.0**k
    return strategy_from_lengths(np.power(a, exponents), 0)


def kbit_family(r: float, k: int, horizon: int = DEFAULT_HORIZON) -> HintedStrategy:
    """k-bit family: 2**k phase-shifted members; the correct hint is the
    index of the member that finds the target cheapest."""
    kbit_base(r, k)  # validate r, k early
    return HintedStrategy(
        family="kbit",
        horizon=_check_horizon(horizon),
        r=float(r),
        k=int(k),
        select=lambda hint: kbit_hint_strategy(r, k, hint, horizon),
        hint_space=tuple(BitStringHint(j, int(k)) for j in range(2 ** int(k))),
        true_hint_of=None,
    )


def best_hint_index(
    r: float, k: int, target: Target, horizon: int = DEFAULT_HORIZON
) -> BitStringHint:
    """Index of the member that finds the target cheapest (ties go to the
    smallest index)."""
    best: Optional[int] = None
    best_cost = math.inf
    for j in range(2 ** int(k)):
        member = kbit_hint_strategy(r, k, BitStringHint(j, int(k)), horizon)
        cost = search_cost(member, target)
        if cost is not None and cost < best_cost:
            best = j
            best_cost = cost
    if best is None:
        raise HorizonTooShort(
            f"no member finds target (d={target.distance}, branch="
            f"{target.branch}) within horizon {horizon}"
        )
    return BitStringHint(best, int(k))


@dataclass(frozen=True)
class LabeledInterval:
    """Half-open interval (lo, hi] labeled with a member index."""

    lo: float
    hi: float
    label: int

    def __post_init__(self) -> None:
        lo = float(self.lo)
        hi = float(self.hi)
        label = int(self.label)
        if not (math.isfinite(lo) and math.isfinite(hi)) or lo > hi:
            raise ValueError(f"bad interval ({self.lo!r}, {self.hi!r}]")
        if label < 0:
            raise ValueError(f"label must be >= 0, got {self.label!r}")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "label", label)


@dataclass(frozen=True)
class LinePartition:
    """Per branch, contiguous labeled intervals covering (1, max distance]."""

    branch0: tuple[LabeledInterval, ...]
    branch1: tuple[LabeledInterval, ...]

    def __post_init__(self) -> None:
        for name in ("branch0", "branch1"):
            intervals = tuple(getattr(self, name))
            for left, right in zip(intervals, intervals[1:]):
                if left.hi != right.lo:
                    raise ValueError(
                        f"{name} intervals must be contiguous: "
                        f"({left.lo}, {left.hi}] then ({right.lo}, {right.hi}]"
                    )
            object.__setattr__(self, name, intervals)

    def intervals(self, branch: int) -> tuple[LabeledInterval, ...]:
        return self.branch0 if branch == 0 else self.branch1

    def label_at(self, distance: float, branch: int) -> int:
        """Label of the interval containing (distance, branch)."""
        for interval in self.intervals(branch):
            if interval.lo < distance <= interval.hi or (
                distance == interval.lo == 1.0
            ):
                return interval.label
        raise ValueError(f"distance {distance} outside the partition")


def preferred_partition(
    r: float, k: int, max_distance: float, horizon: int = DEFAULT_HORIZON
) -> LinePartition:
    """Which member is cheapest where: sweep the members' turn points and
    label each cell with the best member at its midpoint (cell costs are all
    C + d, so the midpoint decides the whole cell); same-label neighbors are
    merged."""
    max_distance = float(max_distance)
    if not math.isfinite(max_distance) or max_distance < 1.0:
        raise ValueError(f"max_distance must be >= 1, got {max_distance!r}")
    members = [
        kbit_hint_strategy(r, k, BitStringHint(j, int(k)), horizon)
        for j in range(2 ** int(k))
    ]
    reach = min(m.last_turn_point(branch) for m in members for branch in (0, 1))
    if max_distance > reach:
        raise HorizonTooShort(
            f"max_distance {max_distance} exceeds the family reach {reach}"
        )
    breakpoints = np.unique(np.concatenate([m.lengths for m in members]))
    breakpoints = breakpoints[(breakpoints > 1.0) & (breakpoints < max_distance)]
    bounds = [1.0, *breakpoints.tolist(), max_distance]
    per_branch: dict[int, list[LabeledInterval]] = {0: [], 1: []}
    for branch in (0, 1):
        merged = per_branch[branch]
        for lo, hi in zip(bounds[:-1], bounds[1:]):
            mid = max(1.0, 0.5 * (lo + hi))
            label = best_hint_index(r, k, Target(mid, branch), horizon).index
            if merged and merged[-1].label == label:
                merged[-1] = LabeledInterval(merged[-1].lo, hi, label)
            else:
                merged.append(LabeledInterval(lo, hi, label))
    return LinePartition(tuple(per_branch[0]), tuple(per_branch[1]))


def family_to_json(family: HintedStrategy) -> dict:
    """Descriptor form: {"family": .., "r": .., "b": .., "delta": .., "k": ..}
    with only the parameters the family uses."""
    out: dict = {"family": family.family}
    for key in ("r", "b", "delta", "k"):
        value = getattr(family, key)
        if value is not None:
            out[key] = value
    return out


def family_from_json(obj: object, horizon: int = DEFAULT_HORIZON) -> HintedStrategy:
    """Parse a family descriptor; errors name the offending field."""
    if not isinstance(obj, dict):
        raise ValueError("family JSON must be an object")
    if "family" not in obj:
        raise ValueError("family JSON is missing field 'family'")
    name = obj["family"]

    def need(key: str) -> float:
        if key not in obj or obj[key] is None:
            raise ValueError(f"family '{name}' needs field '{key}'")
        value = obj[key]
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ValueError(f"field '{key}' must be a number, got {value!r}")
        return value

    if name == "position":
        return position_family(float(need("r")), horizon)
    if name == "direction":
        return direction_family(float(need("b")), float(need("delta")), horizon)
    if name == "kbit":
        return kbit_family(float(need("r")), int(need("k")), horizon)
    raise ValueError(
        f"field 'family' must be 'position', 'direction' or 'kbit', got {name!r}"
    )


def partition_to_json(partition: LinePartition) -> dict:
    """JSON form: {"branch0": [{"lo": .., "hi": .., "label": ..}, ..], ..}."""
    return {
        f"branch{branch}": [
            {"lo": iv.lo, "hi": iv.hi, "label": iv.label}
            for iv in partition.intervals(branch)
        ]
        for branch in (0, 1)
    }


def partition_from_json(obj: object) -> LinePartition:
    """Parse the partition JSON form; errors name the offending field."""
    if not isinstance(obj, dict):
        raise ValueError("partition JSON must be an object")
    sides = []
    for name in ("branch0", "branch1"):
        if name not in obj or not isinstance(obj[name], list):
            raise ValueError(f"partition JSON needs list field '{name}'")
        intervals = []
        for i, entry in enumerate(obj[name]):
            if not isinstance(entry, dict):
                raise ValueError(f"{name}[{i}] must be an object")
            for key in ("lo", "hi", "label"):
                if key not in entry:
                    raise ValueError(f"{name}[{i}] is missing field '{key}'")
            intervals.append(
                LabeledInterval(entry["lo"], entry["hi"], entry["label"])
            )
        sides.append(tuple(intervals))
    return LinePartition(sides[0], sides[1])
