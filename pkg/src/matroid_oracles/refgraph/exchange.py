"""Exchangeability graphs over a common independent set."""

import logging
from dataclasses import dataclass
from typing import Optional

import networkx as nx

from matroid_oracles.core.errors import ContractError
from matroid_oracles.core.ground import GroundSet, SubsetMask, bit, elements, format_mask, popcount
from matroid_oracles.oracles.restricted import MatroidPair

logger = logging.getLogger(__name__)

Arc = tuple[int, int]


@dataclass(frozen=True)
class ExchangeGraph:
    """Bipartite digraph ``D[I]`` (or the pruned ``D'[I]``).

    ``a1`` holds arcs ``(y, x)`` from ``I`` to ``E \\ I`` with
    ``I + x - y`` independent in M_1; ``a2`` holds arcs ``(x, y)`` from
    ``E \\ I`` to ``I`` with ``I + x - y`` independent in M_2.
    """

    ground: GroundSet
    i: SubsetMask
    sources: SubsetMask
    sinks: SubsetMask
    a1: frozenset[Arc]
    a2: frozenset[Arc]
    pruned: bool

    @property
    def arcs(self) -> frozenset[Arc]:
        return self.a1 | self.a2

    def successors(self, v: int) -> list[int]:
        return sorted(head for tail, head in self.arcs if tail == v)

    def has_arc(self, tail: int, head: int) -> bool:
        return (tail, head) in self.a1 or (tail, head) in self.a2

    def reversed(self) -> "ExchangeGraph":
        """The graph of the swapped pair: arcs reversed, sources and sinks exchanged."""
        return ExchangeGraph(
            ground=self.ground,
            i=self.i,
            sources=self.sinks,
            sinks=self.sources,
            a1=frozenset((h, t) for t, h in self.a2),
            a2=frozenset((h, t) for t, h in self.a1),
            pruned=self.pruned,
        )

    def to_networkx(self, costs: Optional[list[int]] = None) -> nx.DiGraph:
        """DiGraph on ``E``; with ``costs``, each arc weighs its head's cost."""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.ground)
        for tail, head in sorted(self.arcs):
            if costs is None:
                graph.add_edge(tail, head)
            else:
                graph.add_edge(tail, head, weight=costs[head])
        return graph


def build_exchange_graph(pair: MatroidPair, i: SubsetMask, pruned: bool = True) -> ExchangeGraph:
    """Build ``D[I]`` or, when ``pruned``, ``D'[I]``.

    Raises:
        ContractError: If ``i`` is not common independent.
    """
    if not pair.is_common_independent(i):
        raise ContractError("exchange graph needs a common independent set", {"i": format_mask(i)})
    ground = pair.ground
    inside = elements(i)
    outside = elements(ground.complement(i))

    sources = sum(bit(s) for s in outside if pair.m1.is_independent(i | bit(s)))
    sinks = sum(bit(t) for t in outside if pair.m2.is_independent(i | bit(t)))

    a1: set[Arc] = set()
    a2: set[Arc] = set()
    for x in outside:
        for y in inside:
            swapped = (i | bit(x)) & ~bit(y)
            if pair.m1.is_independent(swapped):
                a1.add((y, x))
            if pair.m2.is_independent(swapped):
                a2.add((x, y))

    if pruned:
        a1 = {(y, x) for y, x in a1 if not sources >> x & 1}
        a2 = {(x, y) for x, y in a2 if not sinks >> x & 1}

    logger.debug(
        f"Exchange graph on I={format_mask(i)}: |S|={popcount(sources)} "
        f"|T|={popcount(sinks)} arcs={len(a1) + len(a2)} pruned={pruned}"
    )
    return ExchangeGraph(ground, i, sources, sinks, frozenset(a1), frozenset(a2), pruned)


def count_perfect_matchings(graph: ExchangeGraph, z: SubsetMask, side: int) -> int:
    """Perfect matchings on ``Z`` using the arcs of ``A_side`` (undirected).

    ``Z`` must meet ``I`` and ``E \\ I`` in equally many elements; otherwise
    the count is 0.
    """
    arcs = graph.a1 if side == 1 else graph.a2
    left = elements(z & graph.i)
    right = elements(z & ~graph.i)
    if len(left) != len(right):
        return 0
    adjacency: dict[int, set[int]] = {y: set() for y in left}
    for tail, head in arcs:
        y, x = (tail, head) if side == 1 else (head, tail)
        if y in adjacency and z >> x & 1:
            adjacency[y].add(x)

    def extend(k: int, used: int) -> int:
        if k == len(left):
            return 1
        return sum(extend(k + 1, used | bit(x)) for x in adjacency[left[k]] if not used >> x & 1)

    return extend(0, 0)
