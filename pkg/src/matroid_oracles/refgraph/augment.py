"""Reference augmentation steps with full access to both matroids."""

import logging
from dataclasses import dataclass
from typing import Optional

import networkx as nx

from matroid_oracles.core.errors import ContractError
from matroid_oracles.core.ground import SubsetMask, Weighting, bit, elements, format_mask, popcount
from matroid_oracles.oracles.restricted import MatroidPair
from matroid_oracles.refgraph.exchange import ExchangeGraph, build_exchange_graph
from matroid_oracles.refgraph.paths import CostedPath, has_negative_cycle, shortest_cheapest_path

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AugmentResult:
    """Either the augmented set or an optimality certificate."""

    augmented: Optional[SubsetMask] = None
    path: Optional[CostedPath] = None
    certificate: Optional[SubsetMask] = None

    @property
    def found(self) -> bool:
        return self.augmented is not None


def edmonds_certificate(graph: ExchangeGraph) -> SubsetMask:
    """Vertices of the full graph that can reach a sink."""
    if graph.pruned:
        raise ContractError("certificates are read from the unpruned exchange graph")
    digraph = graph.to_networkx()
    reaching = 0
    for t in elements(graph.sinks):
        reaching |= bit(t)
        for v in nx.ancestors(digraph, t):
            reaching |= bit(v)
    return reaching


def certificate_value(pair: MatroidPair, z: SubsetMask) -> int:
    """``r_1(Z) + r_2(E \\ Z)``."""
    return pair.r1(z) + pair.r2(pair.ground.complement(z))


def cheapest_path_augment(pair: MatroidPair, weights: Weighting, i: SubsetMask) -> AugmentResult:
    """One weighted augmentation step along a shortest cheapest path.

    Args:
        pair: Both matroids.
        weights: Element weights.
        i: w-maximal common independent set of its size.

    Returns:
        The w-maximal set one larger, or the certificate of maximality.

    Raises:
        ContractError: If ``i`` is not common independent or not w-maximal
            (negative-cost cycle in the full exchange graph).
    """
    weights.check_ground(pair.ground)
    full = build_exchange_graph(pair, i, pruned=False)
    if has_negative_cycle(full, weights):
        raise ContractError(
            "set is not w-maximal at its size (negative-cost cycle)", {"i": format_mask(i)}
        )
    pruned = build_exchange_graph(pair, i, pruned=True)
    path = shortest_cheapest_path(pruned, weights, pruned.sources, pruned.sinks)
    if path is None:
        z = edmonds_certificate(full)
        logger.debug(f"No augmenting path at |I|={popcount(i)}; certificate Z={format_mask(z)}")
        return AugmentResult(certificate=z)
    augmented = i ^ path.mask
    logger.debug(
        f"Augmented to size {popcount(augmented)} via path of length {path.length} cost {path.cost}"
    )
    return AugmentResult(augmented=augmented, path=path)


def augment_unweighted(pair: MatroidPair, i: SubsetMask) -> AugmentResult:
    """Augment along a shortest source-sink path, or return a certificate."""
    return cheapest_path_augment(pair, Weighting.zero(pair.n), i)
