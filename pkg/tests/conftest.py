"""Pytest configuration and fixtures."""

from pathlib import Path

import pytest

from matroid_oracles.core.config import Settings
from matroid_oracles.core.ground import Weighting
from matroid_oracles.core.instance import Instance
from matroid_oracles.core.matroid import Matroid
from matroid_oracles.instances import load_instance
from matroid_oracles.oracles import MatroidPair
from matroid_oracles.solvers import SolverRegistry
from matroid_oracles.zoo import reference_weightings, small_zoo

INSTANCES_DIR = Path(__file__).parent.parent / "config" / "instances"
K22_PATH = INSTANCES_DIR / "k22.json"


def zoo_pairs(n: int) -> list[MatroidPair]:
    zoo = small_zoo(n)
    return [MatroidPair(m1, m2) for m1 in zoo for m2 in zoo]


@pytest.fixture
def settings() -> Settings:
    """Create test settings."""
    return Settings()


@pytest.fixture
def solver_registry() -> SolverRegistry:
    """Create a fresh solver registry."""
    return SolverRegistry()


@pytest.fixture
def k22() -> Instance:
    """K_{2,2} bipartite matching with weights (5, 1, 1, 4)."""
    return load_instance(K22_PATH)


@pytest.fixture
def k22_pair(k22: Instance) -> MatroidPair:
    return MatroidPair(k22.m1, k22.m2)


@pytest.fixture
def zoo4() -> list[Matroid]:
    return small_zoo(4)


@pytest.fixture
def zoo5() -> list[Matroid]:
    return small_zoo(5)


@pytest.fixture
def pairs4() -> list[MatroidPair]:
    """All ordered pairs of the four-element zoo."""
    return zoo_pairs(4)


@pytest.fixture
def pairs5() -> list[MatroidPair]:
    return zoo_pairs(5)


@pytest.fixture
def weights4() -> list[Weighting]:
    return reference_weightings(4)


@pytest.fixture
def weights5() -> list[Weighting]:
    return reference_weightings(5)
