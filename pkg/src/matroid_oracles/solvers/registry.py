"""Solver registry resolving oracle names to solver classes."""

import logging
from typing import Optional

from matroid_oracles.core.errors import CapabilityError
from matroid_oracles.core.instance import Instance
from matroid_oracles.oracles.restricted import MatroidPair, RestrictedOracle
from matroid_oracles.solvers.base import BaseSolver, SolveReport

logger = logging.getLogger(__name__)


class SolverRegistry:
    """Registry for the available solvers, keyed by oracle name."""

    def __init__(self) -> None:
        self._solvers: dict[str, type[BaseSolver]] = {}

    def register(self, solver_class: type[BaseSolver]) -> None:
        """Register a solver class.

        Args:
            solver_class: Solver class to register.

        Raises:
            ValueError: If solver name is already registered.
        """
        name = solver_class.name
        if name in self._solvers:
            raise ValueError(f"Solver '{name}' is already registered")

        self._solvers[name] = solver_class
        logger.debug(f"Registered solver: {name}")

    def unregister(self, name: str) -> None:
        if name in self._solvers:
            del self._solvers[name]
            logger.debug(f"Unregistered solver: {name}")

    def get_solver_class(self, name: str) -> Optional[type[BaseSolver]]:
        """Get a registered solver class by name.

        Returns:
            Solver class if found, None otherwise.
        """
        return self._solvers.get(name)

    def list_solvers(self) -> list[str]:
        return list(self._solvers.keys())

    def get_solver_info(self) -> list[dict[str, str]]:
        """Get information about all registered solvers.

        Returns:
            List of dicts with solver name, description and requirements.
        """
        info = []
        for name, solver_class in self._solvers.items():
            info.append(
                {
                    "name": name,
                    "description": solver_class.description,
                    "queries": "+".join(q.value for q in solver_class.required_queries),
                    "weighted": "yes" if solver_class.weighted else "no",
                    "structure": solver_class.structure or "-",
                    "class": solver_class.__name__,
                }
            )
        return info


_registry: Optional[SolverRegistry] = None


def get_registry() -> SolverRegistry:
    """Get the global solver registry with the built-in solvers registered."""
    global _registry
    if _registry is None:
        from matroid_oracles.solvers.ci_partition import CiPartitionSolver
        from matroid_oracles.solvers.ci_split import CiSplitSolver
        from matroid_oracles.solvers.rank_sum import CiMaxSolver, RankSumSolver
        from matroid_oracles.solvers.reference import ReferenceSolver

        _registry = SolverRegistry()
        for solver_class in (
            RankSumSolver,
            CiPartitionSolver,
            CiSplitSolver,
            CiMaxSolver,
            ReferenceSolver,
        ):
            _registry.register(solver_class)
    return _registry


def run_instance(
    name: str,
    instance: Instance,
    weighted: bool = True,
    audit: bool = False,
    depth_cap: Optional[int] = None,
) -> SolveReport:
    """Solve ``instance`` with the named solver behind its native oracle kind.

    Args:
        name: Registered solver name (``sum``, ``ci-partition``, ...).
        instance: Instance carrying M_1's structural declaration.
        weighted: Use the instance weights instead of unit weights.
        audit: Hand the full pair to the solver for invariant assertions.
        depth_cap: Layer cap for BFS-based solvers.

    Raises:
        ValueError: If no solver has that name.
        CapabilityError: If the solver needs a declaration the instance does
            not make, or takes no weights but ``weighted`` is set.
    """
    solver_class = get_registry().get_solver_class(name)
    if solver_class is None:
        raise ValueError(f"Unknown solver '{name}'")
    if weighted and not solver_class.weighted:
        raise CapabilityError(f"solver '{name}' is unweighted", required="unweighted")
    if not solver_class.supports(instance):
        raise CapabilityError(
            f"solver '{name}' needs M1 declared as {solver_class.structure}",
            kind=instance.m1_kind,
            required=solver_class.structure,
        )
    pair = MatroidPair(instance.m1, instance.m2)
    oracle = RestrictedOracle(pair, solver_class.native_kind())
    solver = solver_class(oracle, audit_pair=pair if audit else None, depth_cap=depth_cap)
    return solver.solve(instance.weights if weighted else None)
