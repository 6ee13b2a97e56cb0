"""Hint families: position-anchored, direction-asymmetric, k-bit indexed."""

import math

import numpy as np
import pytest

from cowpath.hints import (
    LabeledInterval,
    LinePartition,
    best_hint_index,
    direction_family,
    direction_hint_strategy,
    direction_true_hint,
    family_from_json,
    family_to_json,
    kbit_base,
    kbit_family,
    kbit_hint_strategy,
    partition_from_json,
    partition_to_json,
    position_family,
    position_hint_strategy,
    position_true_hint,
    preferred_partition,
)
from cowpath.model import (
    BitStringHint,
    DirectionHint,
    HorizonTooShort,
    PositionHint,
    Target,
    base_for_robustness,
    search_cost,
)


class TestPositionHintStrategy:
    def test_anchored_member_r9_d5(self):
        s = position_hint_strategy(9.0, PositionHint(5.0, 0))
        assert np.allclose(s.lengths[:5], [0.625, 1.25, 2.5, 5.0, 10.0])
        assert list(s.branches[:4]) == [1, 0, 1, 0]
        cost = search_cost(s, Target(5.0, 0))
        assert cost == 13.75
        assert cost / 5.0 == 2.75

    def test_anchor_lands_exactly_on_hint(self):
        for d in (1.0, 1.3, 2.0, 5.0, 77.7, 2.0**20):
            for branch in (0, 1):
                s = position_hint_strategy(9.0, PositionHint(d, branch))
                j = int(np.argmin(np.abs(s.lengths - d)))
                assert s.lengths[j] == d
                assert s.branches[j] == branch
                cost = search_cost(s, Target(d, branch))
                assert cost is not None and cost / d < 3.0

    def test_anchor_index_edges(self):
        # d exactly a power anchors at that power; just above moves one up
        s = position_hint_strategy(9.0, PositionHint(2.0, 0))
        assert s.lengths[1] == 2.0 and s.branches[1] == 0
        s = position_hint_strategy(9.0, PositionHint(2.0000001, 0))
        assert s.lengths[2] == 2.0000001 and s.branches[2] == 0

    def test_trusted_ratio_approaches_bound(self):
        # gap to (b+1)/(b-1) closes like 2/((b-1) d) as the hint grows
        for r in (9.0, 13.0):
            b = base_for_robustness(r)
            d = b**12
            s = position_hint_strategy(r, PositionHint(d, 0))
            ratio = search_cost(s, Target(d, 0)) / d
            bound = (b + 1.0) / (b - 1.0)
            assert ratio < bound
            assert bound - ratio <= 1e-3

    def test_wrong_hint_type(self):
        with pytest.raises(ValueError, match="PositionHint"):
            position_hint_strategy(9.0, DirectionHint(0))

    def test_horizon_too_short(self):
        with pytest.raises(HorizonTooShort):
            position_hint_strategy(9.0, PositionHint(2.0**70, 0), horizon=64)

    def test_family_descriptor(self):
        fam = position_family(9.0, max_hint_distance=2.0**10, hints_per_decade=16)
        assert fam.family == "position" and fam.r == 9.0
        assert fam.true_hint_of is position_true_hint
        hints = fam.hint_space
        assert {h.branch for h in hints} == {0, 1}
        assert min(h.distance for h in hints) == 1.0
        assert max(h.distance for h in hints) == pytest.approx(2.0**10)
        member = fam.select(hints[0])
        assert search_cost(member, Target(hints[0].distance, hints[0].branch))


class TestDirectionHintStrategy:
    def test_lengths_and_branches(self):
        s = direction_hint_strategy(2.0, 0.5, DirectionHint(1), horizon=6)
        assert np.allclose(s.lengths, [1.0, 1.0, 4.0, 4.0, 16.0, 16.0])
        assert list(s.branches) == [1, 0, 1, 0, 1, 0]

    def test_validation(self):
        with pytest.raises(ValueError, match="b must be > 1"):
            direction_hint_strategy(1.0, 0.5, DirectionHint(0))
        with pytest.raises(ValueError, match="delta"):
            direction_hint_strategy(2.0, 0.0, DirectionHint(0))
        with pytest.raises(ValueError, match="DirectionHint"):
            direction_hint_strategy(2.0, 0.5, PositionHint(1.0, 0))

    def test_family(self):
        fam = direction_family(2.0, 1.0)
        assert fam.hint_space == (DirectionHint(0), DirectionHint(1))
        assert fam.true_hint_of is direction_true_hint
        assert direction_true_hint(Target(7.0, 1)) == DirectionHint(1)


class TestKBit:
    def test_base_regimes(self):
        # below the threshold the base tracks b_r, past it the constant 1+2^k
        assert kbit_base(9.0, 1) == 2.0
        assert kbit_base(9.0, 2) == 2.0
        assert kbit_base(9.0, 3) == 2.0
        assert kbit_base(16.0, 1) == 3.0
        assert kbit_base(10.0, 1) == 3.0  # boundary: both regimes give 3
        assert kbit_base(13.5, 2) == 5.0  # boundary for k=2

    def test_base_validation(self):
        with pytest.raises(ValueError, match="k must be >= 1"):
            kbit_base(9.0, 0)
        with pytest.raises(ValueError):
            kbit_base(8.0, 1)

    def test_member_lengths(self):
        s = kbit_hint_strategy(9.0, 1, BitStringHint(1, 1), horizon=4)
        assert np.allclose(s.lengths, 2.0 ** (np.arange(4) + 0.5))
        assert list(s.branches) == [0, 1, 0, 1]

    def test_member_k_mismatch(self):
        with pytest.raises(ValueError, match="k=2"):
            kbit_hint_strategy(9.0, 1, BitStringHint(1, 2))

    def test_family_space(self):
        fam = kbit_family(9.0, 2)
        assert len(fam.hint_space) == 4
        assert fam.true_hint_of is None
        assert fam.k == 2

    @pytest.mark.parametrize("d,expected", [(1.2, 1), (3.0, 0), (1.0, 0)])
    def test_best_hint_index(self, d, expected):
        assert best_hint_index(9.0, 1, Target(d, 0)).index == expected

    def test_best_hint_is_argmin(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            d = float(np.exp(rng.uniform(0.0, 8.0)))
            branch = int(rng.integers(2))
            k = int(rng.integers(1, 4))
            best = best_hint_index(9.0, k, Target(d, branch))
            costs = [
                search_cost(
                    kbit_hint_strategy(9.0, k, BitStringHint(j, k)),
                    Target(d, branch),
                )
                for j in range(2**k)
            ]
            assert costs[best.index] == min(c for c in costs if c is not None)

    def test_best_hint_horizon(self):
        with pytest.raises(HorizonTooShort):
            best_hint_index(9.0, 1, Target(1e6, 0), horizon=4)


class TestPartition:
    def test_r9_k1_max16_branch0(self):
        part = preferred_partition(9.0, 1, 16.0)
        r2 = math.sqrt(2.0)
        got = [(iv.lo, iv.hi, iv.label) for iv in part.branch0]
        expect = [
            (1.0, r2, 1),
            (r2, 4.0, 0),
            (4.0, 4.0 * r2, 1),
            (4.0 * r2, 16.0, 0),
        ]
        for (lo, hi, lab), (elo, ehi, elab) in zip(got, expect):
            assert lo == pytest.approx(elo) and hi == pytest.approx(ehi)
            assert lab == elab
        assert len(got) == len(expect)

    def test_boundaries_on_half_power_lattice(self):
        part = preferred_partition(9.0, 1, 16.0)
        for branch in (0, 1):
            for iv in part.intervals(branch):
                for edge in (iv.lo, iv.hi):
                    doubled_log = 2.0 * math.log2(edge)
                    assert abs(doubled_log - round(doubled_log)) <= 1e-9

    def test_labels_match_best_hint(self):
        part = preferred_partition(9.0, 2, 64.0)
        rng = np.random.default_rng(3)
        for _ in range(300):
            d = float(np.exp(rng.uniform(0.01, math.log(64.0))))
            branch = int(rng.integers(2))
            assert part.label_at(d, branch) == best_hint_index(
                9.0, 2, Target(d, branch)
            ).index

    def test_coverage_contiguous(self):
        part = preferred_partition(9.0, 1, 32.0)
        for branch in (0, 1):
            ivs = part.intervals(branch)
            assert ivs[0].lo == 1.0 and ivs[-1].hi == 32.0
            for left, right in zip(ivs, ivs[1:]):
                assert left.hi == right.lo

    def test_max_one_single_interval(self):
        part = preferred_partition(9.0, 1, 1.0)
        assert len(part.branch0) == 1 and len(part.branch1) == 1
        assert part.label_at(1.0, 0) == part.branch0[0].label

    def test_reach_guard(self):
        with pytest.raises(HorizonTooShort):
            preferred_partition(9.0, 1, 1e30)

    def test_label_at_outside(self):
        part = preferred_partition(9.0, 1, 8.0)
        with pytest.raises(ValueError, match="outside"):
            part.label_at(9.0, 0)

    def test_interval_validation(self):
        with pytest.raises(ValueError, match="bad interval"):
            LabeledInterval(3.0, 2.0, 0)
        with pytest.raises(ValueError, match="label"):
            LabeledInterval(1.0, 2.0, -1)
        with pytest.raises(ValueError, match="contiguous"):
            LinePartition(
                (LabeledInterval(1.0, 2.0, 0), LabeledInterval(3.0, 4.0, 1)),
                (LabeledInterval(1.0, 4.0, 0),),
            )


class TestFamilyJson:
    def test_round_trip_descriptors(self):
        for fam in (
            position_family(9.0, max_hint_distance=4.0, hints_per_decade=8),
            direction_family(2.0, 0.5),
            kbit_family(9.0, 2),
        ):
            obj = family_to_json(fam)
            clone = family_from_json(obj)
            assert family_to_json(clone) == obj

    def test_descriptor_contents(self):
        assert family_to_json(direction_family(2.0, 0.5)) == {
            "family": "direction",
            "b": 2.0,
            "delta": 0.5,
        }
        assert family_to_json(kbit_family(9.0, 3)) == {
            "family": "kbit",
            "r": 9.0,
            "k": 3,
        }

    def test_errors_name_fields(self):
        with pytest.raises(ValueError, match="'family'"):
            family_from_json({})
        with pytest.raises(ValueError, match="needs field 'delta'"):
            family_from_json({"family": "direction", "b": 2.0})
        with pytest.raises(ValueError, match="must be a number"):
            family_from_json({"family": "kbit", "r": 9.0, "k": "two"})
        with pytest.raises(ValueError, match="'position', 'direction' or 'kbit'"):
            family_from_json({"family": "mystery"})
        with pytest.raises(ValueError, match="must be an object"):
            family_from_json([1, 2])


class TestPartitionJson:
    def test_round_trip(self):
        part = preferred_partition(9.0, 2, 32.0)
        assert partition_from_json(partition_to_json(part)) == part

    def test_errors_name_fields(self):
        with pytest.raises(ValueError, match="'branch1'"):
            partition_from_json({"branch0": []})
        with pytest.raises(ValueError, match=r"branch0\[0\] is missing field 'hi'"):
            partition_from_json(
                {"branch0": [{"lo": 1.0, "label": 0}], "branch1": []}
            )
