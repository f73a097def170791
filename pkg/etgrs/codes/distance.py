import logging
from abc import ABC, abstractmethod
from itertools import combinations
from math import comb

import numpy as np

from etgrs import EtgrsError
from etgrs.algebra.field import FieldArray
from etgrs.algebra.matrix import rank
from etgrs.codes.linear import EmptyCodeError, LinearCode
from etgrs.config import enumeration_budget

logger = logging.getLogger(__name__)

# one rank computation on a small submatrix costs about as much as this many encoded messages
RANK_COST = 64


class BudgetExceededError(EtgrsError):
    """Exception raised when an exhaustive computation would exceed the enumeration budget."""


def smallest_dependent_columns(matrix: FieldArray, limit: int | None = None) -> int | None:
    """
    Smallest ``w`` such that some ``w`` columns of ``matrix`` are linearly dependent.

    Subsets are tried in lexicographic order within each size. Returns ``None`` when every set
    of at most ``limit`` columns (default: all of them) is independent.
    """
    cols = matrix.shape[1]
    top = cols if limit is None else min(limit, cols)
    for width in range(1, top + 1):
        for subset in combinations(range(cols), width):
            if rank(matrix[:, list(subset)]) < width:
                return width
    return None


class DistanceMethod(ABC):
    name: str

    def __init__(self, budget: int | None = None) -> None:
        self.budget = enumeration_budget() if budget is None else budget

    @abstractmethod
    def cost(self, code: LinearCode) -> int:
        """Estimated work in message-encoding units."""

    @abstractmethod
    def _compute(self, code: LinearCode) -> int:
        """Return the minimum distance of a nonzero code."""

    def compute(self, code: LinearCode) -> int:
        if code.is_zero_code:
            msg = "the zero code has no minimum distance"
            raise EmptyCodeError(msg)
        cost = self.cost(code)
        if cost > self.budget:
            msg = (
                f"{self.name} distance of a [{code.length},{code.dimension}] code over GF({code.gf.order}) "
                f"costs {cost}, over the budget {self.budget}"
            )
            raise BudgetExceededError(msg)
        distance = self._compute(code)
        logger.debug(
            "minimum distance computed",
            extra={
                "method": self.name,
                "length": code.length,
                "dimension": code.dimension,
                "distance": distance,
            },
        )
        return distance


class EnumerationDistance(DistanceMethod):
    """Minimum weight over every nonzero message, encoded in vectorized chunks."""

    name = "enumeration"

    def __init__(self, budget: int | None = None, chunk_size: int = 1 << 16) -> None:
        super().__init__(budget)
        self.chunk_size = chunk_size

    def cost(self, code: LinearCode) -> int:
        return code.gf.order**code.dimension

    def _compute(self, code: LinearCode) -> int:
        q, k = code.gf.order, code.dimension
        total = q**k
        # first message coordinate is the most significant digit, giving lexicographic order
        place_values = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
        best = code.length + 1
        for start in range(1, total, self.chunk_size):
            messages = np.arange(start, min(start + self.chunk_size, total), dtype=np.int64)
            digits = (messages[:, np.newaxis] // place_values) % q
            words = code.gf(digits) @ code.generator
            best = min(best, int(np.count_nonzero(words.view(np.ndarray), axis=1).min()))
            if best == 1:
                break
        return best


class ColumnDependencyDistance(DistanceMethod):
    """``d`` is the smallest number of linearly dependent columns of a parity-check matrix."""

    name = "columns"

    def cost(self, code: LinearCode) -> int:
        top = code.length - code.dimension + 1
        return RANK_COST * sum(comb(code.length, w) for w in range(1, top + 1))

    def _compute(self, code: LinearCode) -> int:
        found = smallest_dependent_columns(code.parity_check(), code.length - code.dimension + 1)
        # the Singleton bound guarantees a dependency by then
        return code.length - code.dimension + 1 if found is None else found


class AdaptiveDistance(DistanceMethod):
    """
    Runs the first strategy, in order of preference, whose cost fits the budget.

    Enumeration comes first so that the column-dependency search stays an independent check of
    it; when nothing fits, the cheapest strategy is chosen and raises the budget error itself.
    """

    name = "adaptive"

    def __init__(self, strategies: list[DistanceMethod] | None = None, budget: int | None = None) -> None:
        super().__init__(budget)
        self.strategies = strategies or [
            EnumerationDistance(self.budget),
            ColumnDependencyDistance(self.budget),
        ]

    def select_strategy(self, code: LinearCode) -> DistanceMethod:
        admissible = (strategy for strategy in self.strategies if strategy.cost(code) <= strategy.budget)
        return next(admissible, None) or min(self.strategies, key=lambda strategy: strategy.cost(code))

    def cost(self, code: LinearCode) -> int:
        return self.select_strategy(code).cost(code)

    def _compute(self, code: LinearCode) -> int:
        return self.select_strategy(code).compute(code)


def min_distance(code: LinearCode, budget: int | None = None) -> int:
    return EnumerationDistance(budget).compute(code)


def column_distance(code: LinearCode, budget: int | None = None) -> int:
    return ColumnDependencyDistance(budget).compute(code)


def distance(code: LinearCode, budget: int | None = None) -> tuple[int, str]:
    """Minimum distance by enumeration when it fits the budget, else by columns, with the method's name."""
    adaptive = AdaptiveDistance(budget=budget)
    chosen = adaptive.select_strategy(code)
    return chosen.compute(code), chosen.name


def dual_distance(code: LinearCode, budget: int | None = None) -> int:
    """Minimum distance of the dual, read off as the smallest dependent column set of the generator."""
    if code.is_zero_code:
        return 1
    limit = code.dimension + 1
    budget = enumeration_budget() if budget is None else budget
    cost = RANK_COST * sum(comb(code.length, w) for w in range(1, limit + 1))
    if cost > budget:
        msg = f"dual distance search over {code.length} columns costs {cost}, over the budget {budget}"
        raise BudgetExceededError(msg)
    found = smallest_dependent_columns(code.generator, limit)
    if found is None:
        # k = N: the dual is the zero code
        msg = "the dual of a full-space code is the zero code"
        raise EmptyCodeError(msg)
    return found
