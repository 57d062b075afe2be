"""Reference solver with full access to both matroids."""

import logging
from typing import Optional

from matroid_oracles.core.ground import SubsetMask, Weighting, format_mask
from matroid_oracles.oracles.restricted import QueryType
from matroid_oracles.refgraph.augment import certificate_value, cheapest_path_augment
from matroid_oracles.solvers.base import BaseSolver, SolveReport

logger = logging.getLogger(__name__)


class ReferenceSolver(BaseSolver):
    """Shortest cheapest path augmentation on the explicit exchange graph.

    Records the certificate ``Z`` produced when augmentation stops.
    """

    name = "full"
    description = "Reference weighted intersection on explicit exchange graphs, with certificate"
    required_queries = (QueryType.SUM, QueryType.MIN, QueryType.MAX, QueryType.CI)

    _certificate: Optional[SubsetMask] = None

    def augment(self, i: SubsetMask, weights: Weighting) -> Optional[SubsetMask]:
        result = cheapest_path_augment(self.oracle.pair, weights, i)
        if not result.found:
            self._certificate = result.certificate
            return None
        return result.augmented

    def _finish(self, report: SolveReport) -> None:
        pair = self.oracle.pair
        if self._certificate is None:
            # Stopped at the full ground set; the ground set itself certifies.
            self._certificate = pair.ground.full
        report.certificate = self._certificate
        report.certificate_value = certificate_value(pair, self._certificate)
        logger.debug(
            f"Certificate Z={format_mask(self._certificate)} value {report.certificate_value}"
        )
