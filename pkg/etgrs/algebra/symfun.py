"""Symmetric functions of evaluation points over a finite field.

``e_r`` is the unsigned elementary symmetric polynomial and ``h_r`` the complete homogeneous one.
``sigma_r = (-1)^r e_r`` is the signed form, the coefficient of ``x^(m-r)`` in ``prod(x - a_i)``.

The twisted-code determinants reduce to these quantities. For a subset of points the five
determinant quotients are ``1 + eta*h3``, ``-(e1 + eta*h4)``, ``e2 + delta + eta*(h1*h4 - h5)``,
``e1`` and ``delta - h2 - eta*h5``. The ``printed_delta`` expressions, evaluated with signed
``sigma``, give ``h2, -h3, h4, h5``, and that is what ``delta`` returns.

The ``*_table`` functions work on a batch of subsets at once (one subset per row) and are what
the classification code uses. The per-context functions are thin wrappers around them.
"""

from dataclasses import dataclass

import numpy as np

from etgrs import EtgrsError
from etgrs.algebra.field import FieldArray

DELTA_LEVELS = (2, 3, 4, 5)


class RepeatedValueError(EtgrsError):
    """Exception raised when a symmetric-function context contains a repeated point."""


@dataclass(frozen=True, eq=False)
class SymSubsetContext:
    """Distinct points ``values`` (the evaluation points restricted to an index subset)."""

    values: FieldArray

    def __post_init__(self) -> None:
        if self.values.ndim != 1:
            msg = f"expected a 1-D array of points, got shape {self.values.shape}"
            raise RepeatedValueError(msg)
        raw = self.values.view(np.ndarray).tolist()
        seen: dict[int, int] = {}
        for index, value in enumerate(raw):
            if value in seen:
                msg = f"point {value} repeated at positions {seen[value] + 1} and {index + 1}"
                raise RepeatedValueError(msg)
            seen[value] = index

    @classmethod
    def from_subset(cls, alpha: FieldArray, indices: tuple[int, ...]) -> "SymSubsetContext":
        return cls(alpha[list(indices)])

    @property
    def size(self) -> int:
        return len(self.values)


def elementary_table(points: FieldArray, r_max: int) -> FieldArray:
    """
    ``e_0 .. e_r_max`` for every row of ``points``.

    Coefficients of ``prod(1 + a_i t)`` are built one factor at a time, vectorized across rows.

    Args:
        points (FieldArray): Shape ``(batch, m)``.
        r_max (int): Highest degree to return.

    Returns
    -------
        FieldArray: Shape ``(r_max + 1, batch)``; entries past ``m`` are zero.
    """
    gf = type(points)
    batch, m = points.shape
    table = gf.Zeros((r_max + 1, batch))
    table[0] = 1
    for j in range(m):
        x = points[:, j]
        for r in range(min(j + 1, r_max), 0, -1):
            table[r] = table[r] + x * table[r - 1]
    return table


def complete_table(elementary: FieldArray, r_max: int) -> FieldArray:
    """``h_0 .. h_r_max`` from an elementary table via ``sum_i (-1)^i e_i h_(r-i) = 0``."""
    gf = type(elementary)
    batch = elementary.shape[1]
    table = gf.Zeros((r_max + 1, batch))
    table[0] = 1
    for r in range(1, r_max + 1):
        acc = gf.Zeros(batch)
        for i in range(1, min(r, elementary.shape[0] - 1) + 1):
            term = elementary[i] * table[r - i]
            acc = acc + term if i % 2 else acc - term
        table[r] = acc
    return table


def elem_sym(ctx: SymSubsetContext, r: int) -> FieldArray:
    gf = type(ctx.values)
    if r < 0:
        msg = f"degree must be non-negative, got {r}"
        raise ValueError(msg)
    if r > ctx.size:
        return gf(0)
    return elementary_table(ctx.values.reshape(1, -1), r)[r, 0]


def sigma(ctx: SymSubsetContext, r: int) -> FieldArray:
    value = elem_sym(ctx, r)
    return -value if r % 2 else value


def complete_sym(ctx: SymSubsetContext, r: int) -> FieldArray:
    if r < 0:
        msg = f"degree must be non-negative, got {r}"
        raise ValueError(msg)
    points = ctx.values.reshape(1, -1)
    return complete_table(elementary_table(points, r), r)[r, 0]


def u_weights(ctx: SymSubsetContext) -> FieldArray:
    """``u_i = prod_(j != i) (a_i - a_j)^-1``; a single point gets weight 1."""
    gf = type(ctx.values)
    m = ctx.size
    differences = ctx.values[:, np.newaxis] - ctx.values[np.newaxis, :]
    differences[np.diag_indices(m)] = 1
    return np.multiply.reduce(differences, axis=1) ** -1 if m else gf.Zeros(0)


def power_weight_sum(ctx: SymSubsetContext, h: int) -> FieldArray:
    """``sum_i a_i^h u_i``: zero for ``h <= m - 2`` and ``h_(h-m+1)`` from ``h = m - 1`` on."""
    gf = type(ctx.values)
    powers = gf.Ones(ctx.size) if h == 0 else ctx.values**h
    return np.sum(powers * u_weights(ctx))


def delta(ctx: SymSubsetContext, level: int) -> FieldArray:
    """Closed form of the level-``level`` quantity: ``h2``, ``-h3``, ``h4`` or ``h5``."""
    if level not in DELTA_LEVELS:
        msg = f"level must be one of {DELTA_LEVELS}, got {level}"
        raise ValueError(msg)
    value = complete_sym(ctx, level)
    return -value if level == 3 else value  # noqa: PLR2004


def _signed(ctx: SymSubsetContext) -> list[FieldArray]:
    return [sigma(ctx, r) for r in range(6)]


def printed_delta(ctx: SymSubsetContext, level: int) -> FieldArray:
    """The printed polynomial expressions in signed ``sigma``, evaluated literally."""
    if level not in DELTA_LEVELS:
        msg = f"level must be one of {DELTA_LEVELS}, got {level}"
        raise ValueError(msg)
    _, s1, s2, s3, s4, s5 = _signed(ctx)
    two = type(ctx.values)(2 % type(ctx.values).characteristic)
    cubic = s1**3 + s3 - two * s2 * s1
    quartic = s2 * s1**2 + s4 - s2**2 - s3 * s1
    if level == 2:  # noqa: PLR2004
        return s1**2 - s2
    if level == 3:  # noqa: PLR2004
        return cubic
    if level == 4:  # noqa: PLR2004
        return -quartic + s1 * cubic
    quintic = s3 * s1**2 + s5 - s3 * s2 - s4 * s1
    return -quintic + s2 * cubic + s1 * quartic - s1**2 * cubic


def b3_inline(ctx: SymSubsetContext) -> FieldArray:
    """The grouping ``-(s2^2 s1 + s5 - 2 s3 s2) + s1 (s2 s1^2 + s4 - s3 s1 - s2^2)`` used inside det(B3)."""
    _, s1, s2, s3, s4, s5 = _signed(ctx)
    two = type(ctx.values)(2 % type(ctx.values).characteristic)
    return -(s2**2 * s1 + s5 - two * s3 * s2) + s1 * (s2 * s1**2 + s4 - s3 * s1 - s2**2)
