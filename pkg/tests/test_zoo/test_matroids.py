"""Tests for the concrete matroid constructions."""

import pytest

from matroid_oracles.core.errors import ConstructionError
from matroid_oracles.core.ground import elements, mask_of, popcount
from matroid_oracles.core.matroid import Matroid
from matroid_oracles.instances import GeneratorConfig, corpus
from matroid_oracles.zoo import (
    DisjointSet,
    GraphRepresentation,
    PartitionRepresentation,
    SplitMatroid,
    SplitRepresentation,
    direct_sum,
    make_free,
    make_graphic,
    make_partition,
    make_split,
    make_uniform,
    partition_from_labels,
    truncate,
)


class TestDisjointSet:
    """Tests for the union-find helper."""

    def test_union_detects_cycle(self) -> None:
        """Test that a repeated union reports the cycle."""
        dsu = DisjointSet(3)
        assert dsu.union(0, 1)
        assert dsu.union(1, 2)
        assert not dsu.union(0, 2)
        assert dsu.find(0) == dsu.find(2)


class TestUniform:
    """Tests for uniform and free matroids."""

    def test_free_matroid(self) -> None:
        """Test that every subset of a free matroid is independent."""
        m = make_free(5)
        assert all(m.is_independent(x) for x in m.ground.subsets())
        assert m.r == 5

    @pytest.mark.parametrize("r", [0, 5])
    def test_invalid_rank(self, r: int) -> None:
        """Test that rank 0 (loops) and r > n are rejected."""
        with pytest.raises(ConstructionError):
            make_uniform(4, r)


class TestPartition:
    """Tests for partition matroids."""

    def test_capacities(self) -> None:
        """Test independence against class capacities."""
        m = partition_from_labels([0, 0, 0, 1], [2, 1])
        assert m.is_independent(mask_of([0, 1, 3]))
        assert not m.is_independent(mask_of([0, 1, 2]))
        assert not m.is_all_one

    def test_labels_renumbered_by_first_appearance(self) -> None:
        """Test that class order follows first appearance of a label."""
        m = partition_from_labels([7, 3, 7, 3])
        assert m.representation.classes == (mask_of([0, 2]), mask_of([1, 3]))
        assert m.is_all_one

    def test_classes_must_cover(self) -> None:
        """Test that uncovered elements are rejected."""
        rep = PartitionRepresentation((mask_of([0, 1]),), (1,))
        with pytest.raises(ConstructionError):
            make_partition(3, rep)

    def test_classes_must_be_disjoint(self) -> None:
        """Test that overlapping classes are rejected."""
        rep = PartitionRepresentation((mask_of([0, 1]), mask_of([1, 2])), (1, 1))
        with pytest.raises(ConstructionError):
            make_partition(3, rep)

    def test_zero_capacity_rejected(self) -> None:
        """Test that capacity 0 would create loops."""
        rep = PartitionRepresentation((mask_of([0, 1]),), (0,))
        with pytest.raises(ConstructionError):
            make_partition(2, rep)


class TestGraphic:
    """Tests for graphic matroids."""

    def test_parallel_edges(self) -> None:
        """Test that parallel edges form a circuit of size two."""
        m = make_graphic(GraphRepresentation(3, ((0, 1), (0, 1), (1, 2))))
        assert not m.is_independent(0b011)
        assert m.is_independent(0b101)
        assert m.rank(0b111) == 2

    def test_self_loop_rejected(self) -> None:
        """Test that a self-loop edge is a loop of the matroid."""
        with pytest.raises(ConstructionError):
            make_graphic(GraphRepresentation(2, ((0, 1), (1, 1))))

    def test_endpoint_range(self) -> None:
        """Test that endpoints must be vertices."""
        with pytest.raises(ConstructionError):
            make_graphic(GraphRepresentation(2, ((0, 2),)))


class TestSplit:
    """Tests for elementary split matroids."""

    def test_hyperedge_bound(self) -> None:
        """Test rank {0,1} = 1 and rank E = 2 for r=2, H={0,1}, b=1."""
        m = make_split(4, SplitRepresentation(2, (mask_of([0, 1]),), (1,)))
        assert m.rank(mask_of([0, 1])) == 1
        assert m.rank(0b1111) == 2
        assert m.is_independent(mask_of([0, 2]))

    def test_formula_rank_matches(self, zoo4: list[Matroid]) -> None:
        """Test the closed-form rank against the greedy rank."""
        for m in zoo4:
            if not isinstance(m, SplitMatroid):
                continue
            for x in m.ground.subsets():
                assert m.formula_rank(x) == m.rank(x)

    def test_tight_hyperedges(self) -> None:
        """Test which hyperedges a set saturates."""
        rep = SplitRepresentation(2, (mask_of([0, 1]), mask_of([2, 3])), (1, 1))
        m = make_split(4, rep)
        assert m.tight_hyperedges(mask_of([0])) == [0]
        assert m.tight_hyperedges(mask_of([0, 3])) == [0, 1]
        assert m.tight_hyperedges(0) == []

    def test_tight_hyperedges_on_generated(self) -> None:
        """Test tightness against element counts, and at most one tight set below rank."""
        config = GeneratorConfig(seed=51, m1_kinds=("split",))
        checked = 0
        for instance in corpus(config, 60, max_n=6):
            m = instance.m1
            assert isinstance(m, SplitMatroid)
            rep = m.representation
            for f in m.ground.subsets():
                if not m.is_independent(f):
                    continue
                counts = [sum(1 for e in elements(f) if h >> e & 1) for h in rep.hyperedges]
                expected = [j for j, b in enumerate(rep.bounds) if counts[j] == b]
                tight = m.tight_hyperedges(f)
                assert tight == expected
                if popcount(f) < rep.r:
                    assert len(tight) <= 1, (rep, elements(f))
                checked += 1
        assert checked > 200


class TestTruncationAndDirectSum:
    """Tests for derived constructions."""

    def test_truncation(self) -> None:
        """Test that truncate(free 4, 3) makes E dependent."""
        m = truncate(make_free(4), 3)
        assert not m.is_independent(0b1111)
        assert m.is_independent(0b0111)
        assert m.rank(0b1111) == 3

    def test_truncation_above_rank_is_identity(self) -> None:
        """Test that k >= n leaves the family unchanged."""
        inner = make_uniform(4, 2)
        m = truncate(inner, 4)
        assert all(m.is_independent(x) == inner.is_independent(x) for x in m.ground.subsets())

    def test_truncation_to_zero_rejected(self) -> None:
        """Test that k = 0 would turn every element into a loop."""
        with pytest.raises(ConstructionError):
            truncate(make_free(3), 0)

    def test_direct_sum(self) -> None:
        """Test U(1,2) + U(1,2): {0,2} independent, {0,1} dependent."""
        m = direct_sum(make_uniform(2, 1), make_uniform(2, 1))
        assert m.n == 4
        assert m.is_independent(mask_of([0, 2]))
        assert not m.is_independent(mask_of([0, 1]))
        assert not m.is_independent(mask_of([2, 3]))
        assert m.rank(0b1111) == 2
