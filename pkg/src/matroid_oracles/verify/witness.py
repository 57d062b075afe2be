"""Search for pairs of instances that one oracle kind cannot tell apart.

Candidates are graphic matroids of small multigraphs (optionally truncated).
Two instances are indistinguishable for a set of oracle kinds when every
kind answers identically on every subset of the ground set; a separation
witness additionally differs under a target kind.
"""

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from typing import Optional, Union

from matroid_oracles.core.ground import GroundSet, SubsetMask, format_mask, popcount
from matroid_oracles.core.matroid import Matroid
from matroid_oracles.oracles.restricted import MatroidPair, QueryType, answer
from matroid_oracles.zoo.matroids import make_free, make_graphic, make_uniform, truncate
from matroid_oracles.zoo.representations import GraphRepresentation

logger = logging.getLogger(__name__)

Answer = Union[int, bool]
RankVector = tuple[int, ...]


@dataclass(frozen=True)
class WitnessTarget:
    """One search configuration: which kind must differ while others agree."""

    target: QueryType
    agreeing: tuple[QueryType, ...]
    truncation: Optional[int] = None
    values: Optional[frozenset[int]] = None  # target answers on E in the two instances


# Non-reducibility configurations with the aggregate values pinned on E.
STANDARD_TARGETS: tuple[WitnessTarget, ...] = (
    WitnessTarget(QueryType.MIN, (QueryType.SUM, QueryType.CI), None, frozenset({2, 3})),
    WitnessTarget(QueryType.SUM, (QueryType.CI, QueryType.MAX), 3, frozenset({5, 6})),
    WitnessTarget(QueryType.MAX, (QueryType.SUM,), None, frozenset({3, 4})),
)


@dataclass(frozen=True)
class CandidateMatroid:
    """Graphic matroid (possibly truncated) with its precomputed rank vector."""

    graph: GraphRepresentation
    truncation: Optional[int]
    ranks: RankVector

    def build(self) -> Matroid:
        m = make_graphic(self.graph)
        return m if self.truncation is None else truncate(m, self.truncation)


@dataclass
class SeparationWitness:
    """Two instances agreeing under ``agreeing`` yet differing under ``target``."""

    first: tuple[CandidateMatroid, CandidateMatroid]
    second: tuple[CandidateMatroid, CandidateMatroid]
    target: QueryType
    agreeing: tuple[QueryType, ...]
    subset: SubsetMask
    first_value: Answer
    second_value: Answer

    @property
    def first_pair(self) -> MatroidPair:
        return MatroidPair(self.first[0].build(), self.first[1].build())

    @property
    def second_pair(self) -> MatroidPair:
        return MatroidPair(self.second[0].build(), self.second[1].build())

    def annotation(self) -> dict[str, object]:
        return {
            "target": self.target.value,
            "agreeing": [q.value for q in self.agreeing],
            "subset": format_mask(self.subset),
            "values": [self.first_value, self.second_value],
        }


EdgeList = tuple[tuple[int, int], ...]


def canonical_edge_lists(max_vertices: int, edge_count: int) -> Iterator[EdgeList]:
    """Loopless multigraph edge lists, one per vertex relabelling class.

    Vertices are introduced in increasing order of first use, so the lists
    come out in lexicographic order and without relabelled duplicates.
    """

    def extend(edges: list[tuple[int, int]], used: int) -> Iterator[EdgeList]:
        if len(edges) == edge_count:
            yield tuple(edges)
            return
        for u in range(min(used + 1, max_vertices)):
            for v in range(u + 1, min(used + 2, max_vertices)):
                if v == used + 1 and u != used:
                    continue
                edges.append((u, v))
                yield from extend(edges, max(used, v + 1))
                edges.pop()

    yield from extend([], 0)


def rank_vector(m: Matroid) -> RankVector:
    return tuple(m.rank(x) for x in m.ground.subsets())


def enumerate_candidates(
    max_vertices: int = 5, edge_count: int = 4, truncation: Optional[int] = None
) -> list[CandidateMatroid]:
    """Distinct graphic matroids on ``edge_count`` elements, first representative kept."""
    seen: dict[RankVector, CandidateMatroid] = {}
    for edges in canonical_edge_lists(max_vertices, edge_count):
        graph = GraphRepresentation(max_vertices, edges)
        m = make_graphic(graph)
        if truncation is not None:
            m = truncate(m, truncation)
        ranks = rank_vector(m)
        if ranks not in seen:
            seen[ranks] = CandidateMatroid(graph, truncation, ranks)
    logger.debug(
        f"{len(seen)} distinct candidates from graphs on <= {max_vertices} vertices "
        f"(truncation {truncation})"
    )
    return list(seen.values())


def _answers(
    kind: QueryType, first: CandidateMatroid, second: CandidateMatroid
) -> tuple[Answer, ...]:
    return tuple(
        answer(kind, r1, r2, popcount(x))
        for x, (r1, r2) in enumerate(zip(first.ranks, second.ranks))
    )


def find_separation_witness(
    target: QueryType,
    agreeing: tuple[QueryType, ...],
    truncation: Optional[int] = None,
    values: Optional[frozenset[int]] = None,
    max_vertices: int = 5,
    edge_count: int = 4,
) -> Optional[SeparationWitness]:
    """First witness in canonical order, or None if the space has none.

    Instances are grouped by their answers under every agreeing kind; two
    instances of one group separate ``target`` if its answers differ. With
    ``values`` set, the two target answers on the whole ground set must be
    exactly those values.
    """
    candidates = enumerate_candidates(max_vertices, edge_count, truncation)
    full = (1 << edge_count) - 1
    groups: dict[tuple[tuple[Answer, ...], ...], list[tuple[int, int]]] = {}
    for a, m1 in enumerate(candidates):
        for b, m2 in enumerate(candidates):
            key = tuple(_answers(q, m1, m2) for q in agreeing)
            groups.setdefault(key, []).append((a, b))

    for members in groups.values():
        seen: dict[tuple[Answer, ...], tuple[int, int]] = {}
        for a, b in members:
            target_answers = _answers(target, candidates[a], candidates[b])
            for other_answers, (c, d) in seen.items():
                if other_answers == target_answers:
                    continue
                if values is not None and {target_answers[full], other_answers[full]} != values:
                    continue
                if other_answers[full] != target_answers[full]:
                    subset = full
                else:
                    subset = next(
                        x for x in range(full + 1) if other_answers[x] != target_answers[x]
                    )
                witness = SeparationWitness(
                    first=(candidates[c], candidates[d]),
                    second=(candidates[a], candidates[b]),
                    target=target,
                    agreeing=agreeing,
                    subset=subset,
                    first_value=other_answers[subset],
                    second_value=target_answers[subset],
                )
                logger.info(
                    f"Witness for {target.value} against "
                    f"{'+'.join(q.value for q in agreeing)}: {format_mask(subset)} gives "
                    f"{witness.first_value} vs {witness.second_value}"
                )
                return witness
            seen.setdefault(target_answers, (a, b))
    logger.info(f"No witness for {target.value} in the candidate space")
    return None


def _pair_answer(pair: MatroidPair, kind: QueryType, x: SubsetMask) -> Answer:
    return answer(kind, pair.r1(x), pair.r2(x), popcount(x))


def verify_witness(witness: SeparationWitness) -> bool:
    """Re-check agreement on every subset and the stated difference, from scratch."""
    first, second = witness.first_pair, witness.second_pair
    if first.n != second.n:
        return False
    for x in first.ground.subsets():
        for kind in witness.agreeing:
            if _pair_answer(first, kind, x) != _pair_answer(second, kind, x):
                return False
    return (
        _pair_answer(first, witness.target, witness.subset) == witness.first_value
        and _pair_answer(second, witness.target, witness.subset) == witness.second_value
        and witness.first_value != witness.second_value
    )


def check_free_matroid_blindness(n: int = 4) -> bool:
    """With M_1 free, Max answers ``|X|`` whatever M_2 is, while CI notices M_2."""
    free = make_free(n)
    contrasting = (make_uniform(n, 1), make_free(n))
    ground = GroundSet(n)
    pairs = [MatroidPair(free, m2) for m2 in contrasting]
    for x in ground.subsets():
        if any(_pair_answer(p, QueryType.MAX, x) != popcount(x) for p in pairs):
            return False
    return any(
        _pair_answer(pairs[0], QueryType.CI, x) != _pair_answer(pairs[1], QueryType.CI, x)
        for x in ground.subsets()
    )


def check_rank_one_blindness(n: int = 4) -> bool:
    """With M_1 = U(1, n), Min and CI ignore M_2 while Sum and Max do not."""
    rank_one = make_uniform(n, 1)
    pairs = [MatroidPair(rank_one, make_uniform(n, 1)), MatroidPair(rank_one, make_free(n))]
    ground = GroundSet(n)

    def blind(kind: QueryType) -> bool:
        return all(
            _pair_answer(pairs[0], kind, x) == _pair_answer(pairs[1], kind, x)
            for x in ground.subsets()
        )

    return (
        blind(QueryType.MIN)
        and blind(QueryType.CI)
        and not blind(QueryType.SUM)
        and not blind(QueryType.MAX)
    )
