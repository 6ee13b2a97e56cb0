"""Core data model: search strategies on two rays, targets, hints, search cost.

The searcher starts at the origin of two half-lines (branches 0 and 1).
Iteration i walks out to distance ``lengths[i]`` on ``branches[i]`` and back.
A target hides at distance d >= 1 on one branch; the cost of finding it is
the total distance walked up to the moment the target is first reached.

All types are immutable and all operations are pure functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence, Union

import numpy as np

__all__ = [
    "DEFAULT_HORIZON",
    "DEFAULT_TOLERANCE",
    "HorizonTooShort",
    "Segment",
    "Strategy",
    "Target",
    "PositionHint",
    "DirectionHint",
    "BitStringHint",
    "Hint",
    "complement",
    "strategy_from_lengths",
    "make_geometric",
    "make_periodic_geometric",
    "scale_strategy",
    "search_cost",
    "search_costs",
    "rho",
    "base_for_robustness",
    "robust_base_interval",
    "growth_rate_estimate",
    "strategy_to_json",
    "strategy_from_json",
    "target_to_json",
    "target_from_json",
]

DEFAULT_HORIZON = 64
DEFAULT_TOLERANCE = 1e-9

# Relative slack for float comparisons inside structural invariants.
_REL_TOL = 1e-9


class HorizonTooShort(Exception):
    """A required target lies beyond every candidate's finite segment prefix."""


def complement(branch: int) -> int:
    """The other branch: complement(0) == 1, complement(1) == 0."""
    return 1 - _check_branch(branch)


def _check_branch(branch: int) -> int:
    if branch is True or branch is False or branch not in (0, 1):
        raise ValueError(f"branch must be 0 or 1, got {branch!r}")
    return int(branch)


def _check_distance(distance: float) -> float:
    d = float(distance)
    if not math.isfinite(d) or d < 1.0:
        raise ValueError(f"distance must be finite and >= 1, got {distance!r}")
    return d


@dataclass(frozen=True)
class Segment:
    """One excursion: walk to ``length`` on ``branch`` and back to the origin."""

    length: float
    branch: int

    def __post_init__(self) -> None:
        length = float(self.length)
        if not math.isfinite(length) or length <= 0.0:
            raise ValueError(
                f"segment length must be positive and finite, got {self.length!r}"
            )
        object.__setattr__(self, "length", length)
        object.__setattr__(self, "branch", _check_branch(self.branch))


@dataclass(frozen=True)
class Strategy:
    """A finite prefix of search iterations.

    Lengths two steps apart may never shrink (lengths[i+2] >= lengths[i]);
    for alternating strategies this keeps each branch's turn points monotone.
    Branch alternation itself is not required here, only by the constructors.
    """

    segments: tuple[Segment, ...]

    def __post_init__(self) -> None:
        segments = tuple(self.segments)
        if not segments:
            raise ValueError("strategy needs at least one segment")
        for i, seg in enumerate(segments):
            if not isinstance(seg, Segment):
                raise ValueError(f"segments[{i}] is not a Segment: {seg!r}")
        for i in range(len(segments) - 2):
            lo, hi = segments[i].length, segments[i + 2].length
            if hi < lo * (1.0 - _REL_TOL):
                raise ValueError(
                    f"lengths[{i + 2}]={hi} < lengths[{i}]={lo}: every other "
                    "segment must not shrink"
                )
        object.__setattr__(self, "segments", segments)

    def __len__(self) -> int:
        return len(self.segments)

    @cached_property
    def lengths(self) -> np.ndarray:
        return np.array([seg.length for seg in self.segments], dtype=float)

    @cached_property
    def branches(self) -> np.ndarray:
        return np.array([seg.branch for seg in self.segments], dtype=np.int64)

    @cached_property
    def prefix_sums(self) -> np.ndarray:
        """prefix_sums[i] = sum of lengths[0:i]; length N+1."""
        out = np.zeros(len(self.segments) + 1)
        np.cumsum(self.lengths, out=out[1:])
        return out

    def turn_points(self, branch: int) -> np.ndarray:
        """Distances of this strategy's turn points on ``branch``, in order."""
        return self.lengths[self.branches == _check_branch(branch)]

    def last_turn_point(self, branch: int) -> float:
        """Farthest reach on ``branch`` (0.0 when the branch is never searched)."""
        points = self.turn_points(branch)
        return float(points[-1]) if points.size else 0.0

    @cached_property
    def _per_branch(self) -> dict:
        """Per branch: (segment indices, their lengths, lengths monotone?)."""
        out = {}
        for branch in (0, 1):
            idx = np.flatnonzero(self.branches == branch)
            lens = self.lengths[idx]
            monotone = bool(np.all(np.diff(lens) >= 0.0)) if lens.size > 1 else True
            out[branch] = (idx, lens, monotone)
        return out


def strategy_from_lengths(
    lengths: Sequence[float], first_branch: int = 0
) -> Strategy:
    """Alternating-branch strategy with the given excursion lengths."""
    first = _check_branch(first_branch)
    return Strategy(
        tuple(Segment(float(x), (first + i) % 2) for i, x in enumerate(lengths))
    )


def make_geometric(
    base: float,
    count: int,
    first_branch: int = 0,
    scale: float = 1.0,
) -> Strategy:
    """Geometric strategy: lengths scale * base**i, branches alternating."""
    base = float(base)
    scale = float(scale)
    if not math.isfinite(base) or base <= 1.0:
        raise ValueError(f"base must be > 1, got {base!r}")
    if not math.isfinite(scale) or scale <= 0.0:
        raise ValueError(f"scale must be > 0, got {scale!r}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count!r}")
    lengths = scale * np.power(base, np.arange(int(count), dtype=float))
    return strategy_from_lengths(lengths, first_branch)


def make_periodic_geometric(
    base: float,
    gammas: Sequence[float],
    count: int,
    first_branch: int = 0,
) -> Strategy:
    """Lengths gammas[i mod p] * base**i with alternating branches."""
    base = float(base)
    if not math.isfinite(base) or base <= 1.0:
        raise ValueError(f"base must be > 1, got {base!r}")
    gam = [float(g) for g in gammas]
    if not gam:
        raise ValueError("gammas must be non-empty")
    for j, g in enumerate(gam):
        if not math.isfinite(g) or g <= 0.0:
            raise ValueError(f"gammas[{j}] must be > 0, got {g!r}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count!r}")
    p = len(gam)
    lengths = [gam[i % p] * base**i for i in range(int(count))]
    return strategy_from_lengths(lengths, first_branch)


def scale_strategy(strategy: Strategy, factor: float) -> Strategy:
    """Multiply every segment length by ``factor`` (branches unchanged)."""
    factor = float(factor)
    if not math.isfinite(factor) or factor <= 0.0:
        raise ValueError(f"factor must be > 0, got {factor!r}")
    return Strategy(
        tuple(Segment(seg.length * factor, seg.branch) for seg in strategy.segments)
    )


@dataclass(frozen=True)
class Target:
    """A hiding position: distance >= 1 on one branch."""

    distance: float
    branch: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "distance", _check_distance(self.distance))
        object.__setattr__(self, "branch", _check_branch(self.branch))


@dataclass(frozen=True)
class PositionHint:
    """Claims the target sits exactly at (distance, branch)."""

    distance: float
    branch: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "distance", _check_distance(self.distance))
        object.__setattr__(self, "branch", _check_branch(self.branch))


@dataclass(frozen=True)
class DirectionHint:
    """Claims the target lies on ``branch``."""

    branch: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "branch", _check_branch(self.branch))


@dataclass(frozen=True)
class BitStringHint:
    """A k-bit answer: the index of the recommended member among 2**k."""

    index: int
    k: int

    def __post_init__(self) -> None:
        k = int(self.k)
        index = int(self.index)
        if k < 1:
            raise ValueError(f"k must be >= 1, got {self.k!r}")
        if not 0 <= index < 2**k:
            raise ValueError(f"index must be in [0, 2**{k}), got {self.index!r}")
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "k", k)


Hint = Union[PositionHint, DirectionHint, BitStringHint]


def search_cost(strategy: Strategy, target: Target) -> Optional[float]:
    """Distance walked until the target is first reached, or None if the
    finite prefix never covers it.

    The walk visits turn points in segment order, returning to the origin
    after each excursion, so the cost is 2 * (sum of earlier lengths) + d.
    """
    d = target.distance
    walked = 0.0
    for seg in strategy.segments:
        if seg.branch == target.branch and seg.length >= d:
            return 2.0 * walked + d
        walked += seg.length
    return None


def search_costs(
    strategy: Strategy, distances: np.ndarray, branch: int
) -> np.ndarray:
    """Vectorized search_cost for many distances on one branch.

    Returns an array of costs with NaN where the prefix never covers the
    target.  Distances must all be >= 1.
    """
    branch = _check_branch(branch)
    d = np.asarray(distances, dtype=float)
    if d.size and float(np.min(d)) < 1.0:
        raise ValueError("target distances must be >= 1")
    out = np.full(d.shape, np.nan)
    idx, lens, monotone = strategy._per_branch[branch]
    if idx.size == 0:
        return out
    if monotone:
        pos = np.searchsorted(lens, d, side="left")
        found = pos < lens.size
        seg_idx = idx[pos[found]]
    else:
        # Rare path: hand-built strategies whose per-branch lengths dip.
        covers = lens[None, :] >= d[:, None]
        found = covers.any(axis=1)
        seg_idx = idx[covers.argmax(axis=1)[found]]
    out[found] = 2.0 * strategy.prefix_sums[seg_idx] + d[found]
    return out


def rho(r: float) -> float:
    """Half the allowed overhead, (r - 1) / 2; defined for r >= 9."""
    r = float(r)
    if not math.isfinite(r) or r < 9.0:
        raise ValueError(f"r must be >= 9 (no base is r-robust below), got {r!r}")
    return (r - 1.0) / 2.0


def base_for_robustness(r: float) -> float:
    """Largest geometric base whose ratio 1 + 2*b^2/(b-1) still meets r.

    The identity b^2/(b-1) == rho(r) holds for the returned base.
    """
    p = rho(r)
    disc = p * p - 4.0 * p
    return (p + math.sqrt(max(disc, 0.0))) / 2.0


def robust_base_interval(r: float) -> tuple[float, float]:
    """Both roots of b^2/(b-1) = rho(r): the r-robust base interval."""
    p = rho(r)
    s = math.sqrt(max(p * p - 4.0 * p, 0.0))
    return ((p - s) / 2.0, (p + s) / 2.0)


def growth_rate_estimate(strategy: Strategy) -> float:
    """Finite-prefix growth estimate: max of lengths[n]**(1/n) over the last
    half of the indices."""
    n = len(strategy)
    if n < 2:
        raise ValueError("growth rate needs at least 2 segments")
    start = max(1, n // 2)
    idx = np.arange(start, n, dtype=float)
    return float(np.max(strategy.lengths[start:] ** (1.0 / idx)))


def strategy_to_json(strategy: Strategy) -> dict:
    """JSON object form: {"segments": [{"length": .., "branch": 0|1}, ..]}."""
    return {
        "segments": [
            {"length": seg.length, "branch": seg.branch} for seg in strategy.segments
        ]
    }


def strategy_from_json(obj: object) -> Strategy:
    """Parse the strategy JSON object form; errors name the offending field."""
    if not isinstance(obj, dict):
        raise ValueError("strategy JSON must be an object")
    if "segments" not in obj:
        raise ValueError("strategy JSON is missing field 'segments'")
    raw = obj["segments"]
    if not isinstance(raw, list):
        raise ValueError("field 'segments' must be a list")
    segments = []
    for i, entry in enumerate(raw):
        if not isinstance(entry, dict):
            raise ValueError(f"segments[{i}] must be an object")
        for key in ("length", "branch"):
            if key not in entry:
                raise ValueError(f"segments[{i}] is missing field '{key}'")
        try:
            segments.append(Segment(entry["length"], entry["branch"]))
        except (TypeError, ValueError) as exc:
            raise ValueError(f"segments[{i}]: {exc}") from exc
    return Strategy(tuple(segments))


def target_to_json(target: Target) -> dict:
    """JSON object form: {"distance": .., "branch": 0|1}."""
    return {"distance": target.distance, "branch": target.branch}


def target_from_json(obj: object) -> Target:
    """Parse the target JSON object form; errors name the offending field."""
    if not isinstance(obj, dict):
        raise ValueError("target JSON must be an object")
    for key in ("distance", "branch"):
        if key not in obj:
            raise ValueError(f"target JSON is missing field '{key}'")
    try:
        return Target(obj["distance"], obj["branch"])
    except (TypeError, ValueError) as exc:
        raise ValueError(f"target: {exc}") from exc
