import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement

import numpy as np

from etgrs import EtgrsError
from etgrs.algebra.field import FieldArray, FieldError, FieldSpec, same_field, spec_of
from etgrs.algebra.matrix import (
    MatrixShapeError,
    kernel,
    rank,
    rref,
    same_row_space,
    scale_cols,
    vandermonde,
)
from etgrs.algebra.symfun import RepeatedValueError, SymSubsetContext
from etgrs.common.ordered_enum import OrderedEnum

logger = logging.getLogger(__name__)


class RankDeficientError(EtgrsError):
    """Exception raised when a generator matrix does not have full row rank."""


class EmptyCodeError(EtgrsError):
    """Exception raised when an operation needs a nonzero code but got the zero code."""


class Verdict(OrderedEnum):
    """Code classes from strongest to weakest."""

    MDS = "mds"
    NMDS = "nmds"
    AMDS = "amds"
    AMDS_UNRESOLVED = "amds_unresolved"
    OTHER = "other"

    @property
    def label(self) -> str:
        if self is Verdict.AMDS_UNRESOLVED:
            return "AMDS (NMDS undetermined)"
        return self.name


@dataclass(frozen=True, eq=False)
class LinearCode:
    """
    A linear code given by a full-row-rank generator matrix, stored verbatim.

    A generator with zero rows is the zero code; it only arises as the dual of a full-space code.
    """

    generator: FieldArray

    def __post_init__(self) -> None:
        if self.generator.ndim != 2:  # noqa: PLR2004
            msg = f"generator must be 2-D, got shape {self.generator.shape}"
            raise MatrixShapeError(msg)
        found = rank(self.generator)
        if found != self.generator.shape[0]:
            msg = f"generator has {self.generator.shape[0]} rows but rank {found}"
            raise RankDeficientError(msg)

    @property
    def gf(self) -> type[FieldArray]:
        return type(self.generator)

    @property
    def field(self) -> FieldSpec:
        return spec_of(self.generator)

    @property
    def length(self) -> int:
        return self.generator.shape[1]

    @property
    def dimension(self) -> int:
        return self.generator.shape[0]

    @property
    def is_zero_code(self) -> bool:
        return self.dimension == 0

    def parity_check(self) -> FieldArray:
        return kernel(self.generator)

    def dual(self) -> "LinearCode":
        """The Euclidean dual; for ``k = N`` this is the zero code (a 0-row generator)."""
        return LinearCode(self.parity_check())

    def contains(self, word: FieldArray) -> bool:
        same_field(self.generator, word)
        return rank(np.vstack((self.generator, word.reshape(1, -1)))) == self.dimension

    def same_code(self, other: "LinearCode") -> bool:
        return self.gf is other.gf and same_row_space(self.generator, other.generator)

    def extend(self, weights: FieldArray) -> "LinearCode":
        """Append the coordinate ``sum_i t_i c_i``; the new last column of the generator is ``G t^T``."""
        same_field(self.generator, weights)
        if weights.shape != (self.length,):
            msg = f"extension needs {self.length} weights, got {weights.shape[0]}"
            raise MatrixShapeError(msg)
        column = self.generator @ weights
        return LinearCode(np.concatenate((self.generator, column.reshape(-1, 1)), axis=1))

    def puncture(self, position: int) -> "LinearCode":
        if not 0 <= position < self.length:
            msg = f"puncture position {position} outside 0..{self.length - 1}"
            raise MatrixShapeError(msg)
        kept = [c for c in range(self.length) if c != position]
        reduced = self.generator[:, kept]
        if rank(reduced) != self.dimension:
            msg = f"puncturing position {position} drops the dimension below {self.dimension}"
            raise RankDeficientError(msg)
        return LinearCode(reduced)

    def schur_product(self, other: "LinearCode") -> "LinearCode":
        """Span of coordinatewise products of generator rows, as an rref basis."""
        same_field(self.generator, other.generator)
        if self.length != other.length:
            msg = f"schur product needs equal lengths, got {self.length} and {other.length}"
            raise MatrixShapeError(msg)
        if self is other:
            pairs = combinations_with_replacement(range(self.dimension), 2)
            products = [self.generator[i] * self.generator[j] for i, j in pairs]
        else:
            products = [a * b for a in self.generator for b in other.generator]
        if not products:
            return LinearCode(self.gf.Zeros((0, self.length)))
        return _row_basis(np.vstack(products))

    def schur_square(self) -> "LinearCode":
        return self.schur_product(self)


def _row_basis(matrix: FieldArray) -> LinearCode:
    reduced = rref(matrix)
    return LinearCode(reduced[: rank(matrix)])


def code_from_generator(matrix: FieldArray) -> LinearCode:
    return LinearCode(matrix)


def grs_code(alpha: FieldArray, v: FieldArray, k: int) -> LinearCode:
    """
    The generalized Reed-Solomon code: ``vandermonde(alpha, k)`` with columns scaled by ``v``.

    Raises
    ------
        RepeatedValueError: If ``alpha`` has a repeated point.
        FieldError: If some column multiplier is zero.
    """
    same_field(alpha, v)
    SymSubsetContext(alpha)
    if np.any(v == 0):
        msg = f"column multipliers must be nonzero, got zero at position {int(np.flatnonzero(v == 0)[0]) + 1}"
        raise FieldError(msg)
    if not 1 <= k <= len(alpha):
        msg = f"GRS dimension must lie in 1..{len(alpha)}, got {k}"
        raise MatrixShapeError(msg)
    return LinearCode(scale_cols(vandermonde(alpha, k), v))


@dataclass(frozen=True)
class CodeParams:
    length: int
    dimension: int
    min_distance: int
    dual_min_distance: int | None = None

    def __post_init__(self) -> None:
        if not 1 <= self.min_distance <= self.length - self.dimension + 1:
            msg = (
                f"d = {self.min_distance} violates 1 <= d <= N - k + 1 "
                f"for N = {self.length}, k = {self.dimension}"
            )
            raise EtgrsError(msg)
        if self.dual_min_distance is not None and not 1 <= self.dual_min_distance <= self.dimension + 1:
            msg = f"dual distance {self.dual_min_distance} violates 1 <= d' <= k + 1 for k = {self.dimension}"
            raise EtgrsError(msg)

    def __str__(self) -> str:
        return f"[{self.length},{self.dimension},{self.min_distance}]"


def classify(params: CodeParams) -> Verdict:
    """
    MDS when ``d = N - k + 1``; for ``d = N - k``, NMDS when ``d' = k`` and AMDS otherwise.

    Without a dual distance an almost-MDS code is reported as ``AMDS_UNRESOLVED``.
    """
    singleton = params.length - params.dimension + 1
    if params.min_distance == singleton:
        return Verdict.MDS
    if params.min_distance == singleton - 1:
        if params.dual_min_distance is None:
            return Verdict.AMDS_UNRESOLVED
        return Verdict.NMDS if params.dual_min_distance == params.dimension else Verdict.AMDS
    return Verdict.OTHER


__all__ = [
    "CodeParams",
    "EmptyCodeError",
    "LinearCode",
    "RankDeficientError",
    "RepeatedValueError",
    "Verdict",
    "classify",
    "code_from_generator",
    "grs_code",
]
