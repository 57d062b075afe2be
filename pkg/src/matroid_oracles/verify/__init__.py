"""Brute-force ground truth, report comparison and separation witnesses."""

from matroid_oracles.verify.brute_force import DEFAULT_BUDGET, BruteForceResult, brute_force
from matroid_oracles.verify.report import (
    Mismatch,
    VerificationResult,
    VerificationStatus,
    compare_report,
)
from matroid_oracles.verify.witness import (
    STANDARD_TARGETS,
    CandidateMatroid,
    SeparationWitness,
    WitnessTarget,
    canonical_edge_lists,
    check_free_matroid_blindness,
    check_rank_one_blindness,
    enumerate_candidates,
    find_separation_witness,
    verify_witness,
)

__all__ = [
    "DEFAULT_BUDGET",
    "BruteForceResult",
    "brute_force",
    "Mismatch",
    "VerificationResult",
    "VerificationStatus",
    "compare_report",
    "STANDARD_TARGETS",
    "CandidateMatroid",
    "SeparationWitness",
    "WitnessTarget",
    "canonical_edge_lists",
    "check_free_matroid_blindness",
    "check_rank_one_blindness",
    "enumerate_candidates",
    "find_separation_witness",
    "verify_witness",
]
