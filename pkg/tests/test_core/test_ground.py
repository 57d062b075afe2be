"""Tests for ground sets, subset masks and weightings."""

import pytest

from matroid_oracles.core.errors import ConstructionError, ContractError
from matroid_oracles.core.ground import (
    GroundSet,
    Weighting,
    bit,
    elements,
    format_mask,
    mask_of,
    popcount,
)


class TestMasks:
    """Tests for the subset mask helpers."""

    def test_mask_round_trip(self) -> None:
        """Test that elements and mask_of are inverse."""
        assert mask_of([0, 2, 5]) == 0b100101
        assert elements(0b100101) == [0, 2, 5]
        assert elements(0) == []

    def test_popcount_and_bit(self) -> None:
        """Test singleton masks and cardinality."""
        assert bit(3) == 8
        assert popcount(mask_of(range(7))) == 7
        assert popcount(0) == 0

    def test_format_mask(self) -> None:
        """Test the set rendering used in logs and tables."""
        assert format_mask(0) == "{}"
        assert format_mask(0b1011) == "{0,1,3}"


class TestGroundSet:
    """Tests for GroundSet."""

    def test_full_and_complement(self) -> None:
        """Test the full mask and complements."""
        ground = GroundSet(4)
        assert ground.full == 0b1111
        assert ground.complement(0b0101) == 0b1010
        assert len(ground) == 4
        assert list(ground) == [0, 1, 2, 3]

    def test_subsets_in_ascending_order(self) -> None:
        """Test that every subset is enumerated once, ascending."""
        assert list(GroundSet(3).subsets()) == list(range(8))

    @pytest.mark.parametrize("n", [0, 65, -1])
    def test_size_out_of_range(self, n: int) -> None:
        """Test that sizes outside 1..64 are rejected."""
        with pytest.raises(ConstructionError):
            GroundSet(n)

    def test_largest_ground_set(self) -> None:
        """Test that 64 elements are accepted."""
        assert GroundSet(64).full == 2**64 - 1

    def test_validate_rejects_foreign_bits(self) -> None:
        """Test that masks with bits beyond n are contract violations."""
        ground = GroundSet(4)
        ground.validate(0b1111)
        with pytest.raises(ContractError):
            ground.validate(0b10000)
        with pytest.raises(ContractError):
            ground.validate(-1)


class TestWeighting:
    """Tests for Weighting."""

    def test_total_weight(self) -> None:
        """Test w(X) for a few subsets."""
        weights = Weighting((5, 1, -1, 4))
        assert weights.of(0) == 0
        assert weights.of(0b1001) == 9
        assert weights.of(0b0110) == 0
        assert weights[2] == -1

    def test_unit_and_zero(self) -> None:
        """Test the constant weightings."""
        assert Weighting.unit(3).values == (1, 1, 1)
        assert Weighting.zero(2).values == (0, 0)

    def test_out_of_int64_range(self) -> None:
        """Test that weights beyond signed 64 bits are rejected."""
        Weighting((2**63 - 1, -(2**63)))
        with pytest.raises(ConstructionError):
            Weighting((2**63,))

    def test_check_ground_length(self) -> None:
        """Test that a weighting must cover the ground set exactly."""
        Weighting.unit(4).check_ground(GroundSet(4))
        with pytest.raises(ContractError):
            Weighting.unit(3).check_ground(GroundSet(4))
