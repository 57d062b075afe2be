"""Tests for the matroid abstraction: axioms, rank, closure and circuits."""

import pytest

from matroid_oracles.core.errors import ContractError
from matroid_oracles.core.ground import bit, mask_of, popcount
from matroid_oracles.core.matroid import Matroid
from matroid_oracles.zoo import (
    GraphRepresentation,
    make_graphic,
    make_uniform,
    partition_from_labels,
)


@pytest.fixture
def triangle() -> Matroid:
    """Graphic matroid of a triangle."""
    return make_graphic(GraphRepresentation(3, ((0, 1), (1, 2), (0, 2))))


class TestAxioms:
    """Exhaustive checks of the independence axioms on the small zoo."""

    def test_empty_set_independent(self, zoo4: list[Matroid], zoo5: list[Matroid]) -> None:
        """Test that the empty set is independent everywhere."""
        for m in zoo4 + zoo5:
            assert m.is_independent(0)

    def test_loopless(self, zoo4: list[Matroid], zoo5: list[Matroid]) -> None:
        """Test that every zoo matroid has only independent singletons."""
        for m in zoo4 + zoo5:
            m.check_loopless()
            assert all(m.is_independent(bit(e)) for e in m.ground)

    def test_downward_closed(self, zoo4: list[Matroid]) -> None:
        """Test that subsets of independent sets are independent."""
        for m in zoo4:
            for x in m.ground.subsets():
                if not m.is_independent(x):
                    continue
                for e in m.ground:
                    if x >> e & 1:
                        assert m.is_independent(x & ~bit(e))

    def test_exchange(self, zoo4: list[Matroid]) -> None:
        """Test the augmentation axiom for every pair of independent sets."""
        for m in zoo4:
            independent = [x for x in m.ground.subsets() if m.is_independent(x)]
            for a in independent:
                for b in independent:
                    if popcount(a) >= popcount(b):
                        continue
                    candidates = [e for e in m.ground if b >> e & 1 and not a >> e & 1]
                    assert any(m.is_independent(a | bit(e)) for e in candidates)


class TestRank:
    """Tests for the greedy rank function."""

    def test_rank_properties(self, zoo4: list[Matroid]) -> None:
        """Test bounds, monotonicity and submodularity on all subset pairs."""
        for m in zoo4:
            ranks = [m.rank(x) for x in m.ground.subsets()]
            for x in m.ground.subsets():
                assert 0 <= ranks[x] <= popcount(x)
                assert (ranks[x] == popcount(x)) == m.is_independent(x)
                for y in m.ground.subsets():
                    if x & y == x:
                        assert ranks[x] <= ranks[y]
                    assert ranks[x | y] + ranks[x & y] <= ranks[x] + ranks[y]

    def test_uniform_two_of_four(self) -> None:
        """Test U(2,4): three elements are dependent, rank of E is 2."""
        m = make_uniform(4, 2)
        assert not m.is_independent(0b0111)
        assert m.is_independent(0b0011)
        assert m.rank(0b1111) == 2

    def test_basis_is_greedy(self) -> None:
        """Test that basis_of scans elements in ascending order."""
        m = make_uniform(4, 2)
        assert m.basis_of(0b1110) == 0b0110

    def test_foreign_mask_rejected(self) -> None:
        """Test that queries outside the ground set are contract violations."""
        with pytest.raises(ContractError):
            make_uniform(4, 2).is_independent(0b10000)


class TestClosureAndCircuits:
    """Tests for closure and fundamental circuits."""

    def test_triangle_closure(self, triangle: Matroid) -> None:
        """Test that two triangle edges span the third."""
        assert triangle.rank(0b111) == 2
        assert triangle.closure(0b011) == 0b111
        assert triangle.closure(0b001) == 0b001

    def test_triangle_circuit(self, triangle: Matroid) -> None:
        """Test the fundamental circuit of the closing edge."""
        assert triangle.fundamental_circuit(0b011, 2) == 0b011

    def test_partition_circuit(self) -> None:
        """Test the circuit inside one partition class."""
        m = partition_from_labels([0, 0, 1, 1])
        assert m.fundamental_circuit(mask_of([0, 2]), 1) == mask_of([0])

    def test_rank_one_circuit(self) -> None:
        """Test U(1,3): the circuit of 1 over {0} is {0}."""
        assert make_uniform(3, 1).fundamental_circuit(0b001, 1) == 0b001

    def test_circuit_contract(self, triangle: Matroid) -> None:
        """Test the preconditions of fundamental_circuit."""
        with pytest.raises(ContractError):
            triangle.fundamental_circuit(0b111, 2)
        with pytest.raises(ContractError):
            triangle.fundamental_circuit(0b011, 1)
        with pytest.raises(ContractError):
            triangle.fundamental_circuit(0b001, 1)

    def test_circuit_exchange(self, zoo4: list[Matroid]) -> None:
        """Test that I + x - y is independent exactly for circuit elements."""
        for m in zoo4:
            for i in m.ground.subsets():
                if not m.is_independent(i):
                    continue
                for x in m.ground:
                    if i >> x & 1 or m.is_independent(i | bit(x)):
                        continue
                    circuit = m.fundamental_circuit(i, x)
                    assert circuit != 0
                    assert circuit & ~i == 0
                    assert m.closure(i) >> x & 1
