"""Tests for split representation validation."""

import pytest

from matroid_oracles.core.errors import ConstructionError, RepresentationError
from matroid_oracles.core.ground import GroundSet, mask_of
from matroid_oracles.zoo import SplitRepresentation, make_split


class TestSplitRepresentation:
    """Tests for the (H1) and (H2) hypergraph conditions."""

    def test_valid_representation(self) -> None:
        """Test that disjoint hyperedges with room outside validate."""
        rep = SplitRepresentation(2, (mask_of([0, 1]), mask_of([2, 3])), (1, 1))
        rep.validate(GroundSet(4))

    def test_h2_violation(self) -> None:
        """Test r=3, H={0,1,2}, b=1 on four elements: too little room outside H."""
        rep = SplitRepresentation(3, (mask_of([0, 1, 2]),), (1,))
        with pytest.raises(RepresentationError, match=r"\(H2\)") as info:
            make_split(4, rep)
        assert info.value.details["index"] == 0

    def test_h1_violation(self) -> None:
        """Test two hyperedges overlapping beyond their bounds."""
        rep = SplitRepresentation(2, (mask_of([0, 1, 2]), mask_of([1, 2, 3])), (1, 1))
        with pytest.raises(RepresentationError, match=r"\(H1\)") as info:
            rep.validate(GroundSet(4))
        assert info.value.details["pair"] == (0, 1)

    def test_bound_count_mismatch(self) -> None:
        """Test that each hyperedge needs exactly one bound."""
        rep = SplitRepresentation(2, (mask_of([0, 1]),), ())
        with pytest.raises(RepresentationError):
            rep.validate(GroundSet(4))

    def test_rank_bound_out_of_range(self) -> None:
        """Test that r must lie in 0..n."""
        with pytest.raises(RepresentationError):
            SplitRepresentation(5).validate(GroundSet(4))

    def test_loops_rejected(self) -> None:
        """Test that r = 0 is a valid hypergraph but creates loops."""
        with pytest.raises(ConstructionError):
            make_split(3, SplitRepresentation(0))

    def test_representation_error_is_construction_error(self) -> None:
        """Test the exception hierarchy."""
        assert issubclass(RepresentationError, ConstructionError)
