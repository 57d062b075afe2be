"""Fixed catalog of small matroids and weightings for exhaustive checks."""

from matroid_oracles.core.ground import Weighting, mask_of
from matroid_oracles.core.matroid import Matroid
from matroid_oracles.zoo.matroids import (
    direct_sum,
    make_free,
    make_graphic,
    make_split,
    make_uniform,
    partition_from_labels,
    truncate,
)
from matroid_oracles.zoo.representations import GraphRepresentation, SplitRepresentation

CATALOG_SIZES = (4, 5)


def small_zoo(n: int) -> list[Matroid]:
    """Twelve loopless matroids on ``n`` elements, one of each flavour.

    Raises:
        ValueError: Unless ``n`` is 4 or 5.
    """
    if n not in CATALOG_SIZES:
        raise ValueError(f"catalog is defined for n in {CATALOG_SIZES}, got {n}")
    extra = list(range(4, n))
    triangle_path = ((0, 1), (1, 2), (0, 2), (2, 3)) + tuple((e - 1, e) for e in extra)
    parallel = ((0, 1), (0, 1), (1, 2), (1, 2)) + tuple((2, 3) for _ in extra)
    cycle = tuple((e, (e + 1) % n) for e in range(n))
    return [
        make_uniform(n, 1),
        make_uniform(n, 2),
        make_uniform(n, 3),
        make_free(n),
        partition_from_labels([0, 0, 1, 1] + [2] * len(extra)),
        partition_from_labels([e % 2 for e in range(n)], [2, 1]),
        make_graphic(GraphRepresentation(n, triangle_path)),
        make_graphic(GraphRepresentation(4, parallel)),
        make_split(n, SplitRepresentation(2, (mask_of([0, 1, 2]),), (1,))),
        truncate(make_graphic(GraphRepresentation(n, cycle)), 2),
        direct_sum(make_uniform(2, 1), make_uniform(n - 2, 1)),
        make_split(n, SplitRepresentation(2, (mask_of([0, 1]), mask_of([2, 3])), (1, 1))),
    ]


def reference_weightings(n: int) -> list[Weighting]:
    """Mixed-sign, all-negative and unit weightings on ``n`` elements."""
    if n not in CATALOG_SIZES:
        raise ValueError(f"catalog is defined for n in {CATALOG_SIZES}, got {n}")
    return [
        Weighting((3, -1, 4, 1, 5)[:n]),
        Weighting(tuple(-1 - e for e in range(n))),
        Weighting.unit(n),
    ]
