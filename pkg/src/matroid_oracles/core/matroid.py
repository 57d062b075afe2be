"""Matroid abstraction with derived rank, closure and fundamental circuits."""

from abc import ABC, abstractmethod

from matroid_oracles.core.errors import ConstructionError, ContractError
from matroid_oracles.core.ground import GroundSet, SubsetMask, bit, elements, popcount


class Matroid(ABC):
    """Abstract base class for all matroids on a ground set.

    Subclasses supply one independence predicate over subset masks. Rank,
    closure and fundamental circuits are derived from it, so every matroid is
    definable by that predicate alone. Instances are immutable after
    construction.
    """

    def __init__(self, ground: GroundSet) -> None:
        self._ground = ground

    @property
    def ground(self) -> GroundSet:
        return self._ground

    @property
    def n(self) -> int:
        return self._ground.n

    @property
    @abstractmethod
    def kind(self) -> str:
        """Short tag naming the construction (``uniform``, ``graphic``, ...)."""

    @abstractmethod
    def _independent(self, x: SubsetMask) -> bool:
        """Independence predicate on a mask already known to be valid."""

    def is_independent(self, x: SubsetMask) -> bool:
        """Check whether ``x`` belongs to the independent set family.

        Args:
            x: Subset of the ground set.

        Returns:
            True iff ``x`` is independent.
        """
        self._ground.validate(x)
        return self._independent(x)

    def basis_of(self, x: SubsetMask) -> SubsetMask:
        """Greedy maximal independent subset of ``x`` in ascending element order."""
        self._ground.validate(x)
        basis = 0
        for e in elements(x):
            if self._independent(basis | bit(e)):
                basis |= bit(e)
        return basis

    def rank(self, x: SubsetMask) -> int:
        """Maximum cardinality of an independent subset of ``x``.

        The greedy scan is exact for matroids and uses at most ``|x|``
        independence calls.
        """
        return popcount(self.basis_of(x))

    def closure(self, x: SubsetMask) -> SubsetMask:
        """Elements whose addition to ``x`` does not raise the rank."""
        basis = self.basis_of(x)
        closed = x
        for e in self._ground:
            if not closed >> e & 1 and not self._independent(basis | bit(e)):
                closed |= bit(e)
        return closed

    def fundamental_circuit(self, i: SubsetMask, x: int) -> SubsetMask:
        """Elements ``y`` of ``i`` such that ``i + x - y`` is independent.

        Args:
            i: Independent set.
            x: Element outside ``i`` spanned by ``i``.

        Returns:
            The (nonempty) fundamental circuit of ``x`` with respect to ``i``,
            without ``x`` itself.

        Raises:
            ContractError: If ``i`` is dependent, ``x`` lies in ``i``, or
                ``i + x`` is independent.
        """
        if not self.is_independent(i):
            raise ContractError("fundamental circuit needs an independent set", {"i": i})
        if not 0 <= x < self.n or i >> x & 1:
            raise ContractError("element must lie outside the independent set", {"x": x})
        extended = i | bit(x)
        if self._independent(extended):
            raise ContractError("element is not spanned by the independent set", {"x": x})
        return sum(bit(y) for y in elements(i) if self._independent(extended & ~bit(y)))

    def check_loopless(self) -> None:
        """Raise ConstructionError if some singleton is dependent."""
        for e in self._ground:
            if not self._independent(bit(e)):
                raise ConstructionError(
                    f"{self.kind} matroid has a loop", {"element": e}
                )

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n})"
