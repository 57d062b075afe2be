"""Restricted-oracle and reference matroid intersection solvers."""

from matroid_oracles.solvers.base import NULL_PATH, BaseSolver, PathSeq, SolveReport
from matroid_oracles.solvers.ci_partition import (
    BfsTrace,
    CiPartitionSolver,
    augment_ci_partition,
    emulating_bfs,
    solve_ci_partition,
)
from matroid_oracles.solvers.ci_split import (
    CiSplitSolver,
    augment_ci_split,
    solve_ci_split,
    split_candidates,
)
from matroid_oracles.solvers.rank_sum import (
    CiMaxSolver,
    RankSumSolver,
    cheapest_path_augment_rank_sum,
    emulating_bellman_ford,
    solve_ci_max,
    solve_rank_sum,
)
from matroid_oracles.solvers.reference import ReferenceSolver
from matroid_oracles.solvers.registry import SolverRegistry, get_registry, run_instance

__all__ = [
    "NULL_PATH",
    "BaseSolver",
    "PathSeq",
    "SolveReport",
    "BfsTrace",
    "CiPartitionSolver",
    "augment_ci_partition",
    "emulating_bfs",
    "CiSplitSolver",
    "augment_ci_split",
    "split_candidates",
    "CiMaxSolver",
    "RankSumSolver",
    "cheapest_path_augment_rank_sum",
    "emulating_bellman_ford",
    "solve_ci_max",
    "solve_ci_partition",
    "solve_ci_split",
    "solve_rank_sum",
    "ReferenceSolver",
    "SolverRegistry",
    "get_registry",
    "run_instance",
]
