"""Shortest cheapest path search over exchangeability graphs."""

import logging
from dataclasses import dataclass
from typing import Optional

import networkx as nx

from matroid_oracles.core.errors import ContractError
from matroid_oracles.core.ground import SubsetMask, Weighting, bit, elements
from matroid_oracles.refgraph.exchange import ExchangeGraph

logger = logging.getLogger(__name__)

PathKey = tuple[int, int, tuple[int, ...]]


@dataclass(frozen=True)
class CostedPath:
    """Vertex sequence with its cost and length (number of vertices)."""

    vertices: tuple[int, ...]
    cost: int

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def mask(self) -> SubsetMask:
        return sum(bit(v) for v in self.vertices)

    @property
    def key(self) -> PathKey:
        return (self.cost, self.length, self.vertices)


def vertex_costs(weights: Weighting, i: SubsetMask) -> list[int]:
    """``c(e) = w(e)`` for ``e`` in ``I`` and ``-w(e)`` otherwise."""
    return [w if i >> e & 1 else -w for e, w in enumerate(weights.values)]


def has_negative_cycle(graph: ExchangeGraph, weights: Weighting) -> bool:
    """Whether some directed cycle has negative total vertex cost."""
    if not graph.arcs:
        return False
    costs = vertex_costs(weights, graph.i)
    return bool(nx.negative_edge_cycle(graph.to_networkx(costs), weight="weight"))


def shortest_cheapest_path(
    graph: ExchangeGraph,
    weights: Weighting,
    sources: SubsetMask,
    targets: SubsetMask,
) -> Optional[CostedPath]:
    """Minimum ``(cost, length, sequence)`` path from ``sources`` to ``targets``.

    Bellman-Ford over path labels; a label is only extended to vertices it
    does not already visit, so every label is a simple path.

    Raises:
        ContractError: If the graph has a negative-cost cycle.
    """
    if has_negative_cycle(graph, weights):
        raise ContractError("exchange graph has a negative-cost cycle", {"i": graph.i})
    costs = vertex_costs(weights, graph.i)
    successors = {v: graph.successors(v) for v in graph.ground}

    labels: dict[int, CostedPath] = {
        s: CostedPath((s,), costs[s]) for s in elements(sources)
    }
    for _ in range(graph.ground.n):
        changed = False
        for v in sorted(labels):
            path = labels[v]
            for u in successors[v]:
                if u in path.vertices:
                    continue
                candidate = CostedPath(path.vertices + (u,), path.cost + costs[u])
                current = labels.get(u)
                if current is None or candidate.key < current.key:
                    labels[u] = candidate
                    changed = True
        if not changed:
            break

    reached = [labels[t] for t in elements(targets) if t in labels]
    if not reached:
        return None
    return min(reached, key=lambda p: p.key)


def bfs_distances(graph: ExchangeGraph, source: int) -> dict[int, int]:
    """Vertex-count distance from ``source`` to every reachable vertex."""
    lengths = nx.single_source_shortest_path_length(graph.to_networkx(), source)
    return {v: d + 1 for v, d in lengths.items()}
