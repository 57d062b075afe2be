"""Reference exchange-graph machinery (full access to both matroids)."""

from matroid_oracles.refgraph.augment import (
    AugmentResult,
    augment_unweighted,
    certificate_value,
    cheapest_path_augment,
    edmonds_certificate,
)
from matroid_oracles.refgraph.exchange import (
    ExchangeGraph,
    build_exchange_graph,
    count_perfect_matchings,
)
from matroid_oracles.refgraph.paths import (
    CostedPath,
    bfs_distances,
    has_negative_cycle,
    shortest_cheapest_path,
    vertex_costs,
)

__all__ = [
    "AugmentResult",
    "augment_unweighted",
    "certificate_value",
    "cheapest_path_augment",
    "edmonds_certificate",
    "ExchangeGraph",
    "build_exchange_graph",
    "count_perfect_matchings",
    "CostedPath",
    "bfs_distances",
    "has_negative_cycle",
    "shortest_cheapest_path",
    "vertex_costs",
]
