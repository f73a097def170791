"""Finite fields GF(p^m) with an explicit modulus, backed by galois field-array classes.

Elements are galois ``FieldArray`` values. A 0-d array stands for a scalar. Addition,
subtraction, multiplication, negation and ``**`` are the native array operators. The integer
encoding of an element is its polynomial-basis coordinates read as base-p digits, constant
term least significant, which is also the galois integer representation.
"""

import functools
import logging
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import galois
import numpy as np

from etgrs import EtgrsError

logger = logging.getLogger(__name__)

FieldArray = galois.FieldArray

MAX_ORDER = 2**16

_FIELD_RE = re.compile(r"^\s*(?P<p>\d+)\s*(?:\^\s*(?P<m>\d+))?\s*(?::\s*(?P<modulus>[\d\s,]+))?\s*$")
_POWER_RE = re.compile(r"^\s*(?:g|ξ)\s*(?:\^\s*(?P<exp>-?\d+))?\s*$")


class FieldError(EtgrsError):
    """Exception raised for invalid field descriptors, moduli or element values."""


class FieldMismatchError(FieldError):
    """Exception raised when values from different fields are combined."""


@functools.cache
def _galois_field(p: int, m: int, modulus: tuple[int, ...]) -> type[FieldArray]:
    if m == 1:
        return galois.GF(p)
    poly = galois.Poly(list(modulus), field=galois.GF(p), order="asc")
    return galois.GF(p**m, irreducible_poly=poly)


@dataclass(frozen=True)
class FieldSpec:
    """
    A finite field GF(p^m) with a fixed monic modulus.

    Args:
        p (int): The characteristic, a prime.
        m (int): The extension degree.
        modulus (tuple[int, ...]): ``m + 1`` coefficients, constant term first. For prime
            fields this is ``(0, 1)``, the polynomial ``x``, and plays no role in arithmetic.
    """

    p: int
    m: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def gf(self) -> type[FieldArray]:
        return _galois_field(self.p, self.m, self.modulus)

    def __call__(self, values: int | Iterable) -> FieldArray:
        """Coerce integer encodings into field values, rejecting anything outside ``[0, q)``."""
        raw = np.asarray(values, dtype=np.int64)
        if raw.size and (raw.min() < 0 or raw.max() >= self.q):
            msg = f"element encodings must lie in [0, {self.q}) for {self}, got {raw.tolist()}"
            raise FieldError(msg)
        return self.gf(raw)

    @property
    def zero(self) -> FieldArray:
        return self.gf(0)

    @property
    def one(self) -> FieldArray:
        return self.gf(1)

    def elements(self) -> FieldArray:
        """Return all ``q`` elements in ascending integer-encoding order."""
        return self.gf.elements

    def nonzero_elements(self) -> FieldArray:
        return self.gf.elements[1:]

    def primitive_element(self) -> FieldArray:
        """Return the generator of the multiplicative group with the smallest integer encoding."""
        return self.gf(_primitive_encoding(self))

    def describe(self) -> str:
        """Return the ``p^m:c0,...,cm`` descriptor that rebuilds this field."""
        if self.m == 1:
            return str(self.p)
        return f"{self.p}^{self.m}:" + ",".join(str(c) for c in self.modulus)

    def __str__(self) -> str:
        return f"GF({self.p})" if self.m == 1 else f"GF({self.p}^{self.m})"

    def owns(self, array: FieldArray) -> bool:
        return isinstance(array, FieldArray) and type(array) is self.gf


@functools.cache
def _primitive_encoding(spec: FieldSpec) -> int:
    gf = spec.gf
    for value in range(1, spec.q):
        if int(gf(value).multiplicative_order()) == spec.q - 1:
            return value
    msg = f"{spec} has no primitive element"
    raise FieldError(msg)


def field_make(p: int, m: int = 1, modulus: Sequence[int] | None = None) -> FieldSpec:
    """
    Build and validate a field specification.

    Args:
        p (int): The characteristic; must be prime.
        m (int): The extension degree, at least 1.
        modulus (Sequence[int] | None): Monic irreducible modulus, constant term first. When
            omitted the Conway polynomial for ``(p, m)`` is used.

    Returns
    -------
        FieldSpec: The validated specification.

    Raises
    ------
        FieldError: If ``p`` is composite, the order exceeds ``2^16``, the modulus is not a monic
            irreducible polynomial of degree ``m``, or no Conway polynomial is known.
    """
    if p < 2 or not galois.is_prime(p):  # noqa: PLR2004
        msg = f"field characteristic must be prime, got {p}"
        raise FieldError(msg)
    if m < 1:
        msg = f"extension degree must be at least 1, got {m}"
        raise FieldError(msg)
    if p**m > MAX_ORDER:
        msg = f"field order {p}^{m} exceeds the supported ceiling {MAX_ORDER}"
        raise FieldError(msg)

    if m == 1:
        if modulus is not None and len(modulus) != 2:  # noqa: PLR2004
            msg = f"a prime field modulus must have degree 1, got {list(modulus)}"
            raise FieldError(msg)
        return FieldSpec(p, 1, (0, 1))

    if modulus is None:
        try:
            conway = galois.conway_poly(p, m)
        except LookupError as e:
            msg = f"no default modulus for GF({p}^{m}); supply one explicitly"
            raise FieldError(msg) from e
        coeffs = tuple(int(c) for c in conway.coefficients(order="asc"))
    else:
        coeffs = tuple(int(c) for c in modulus)
        if len(coeffs) != m + 1:
            msg = f"modulus for GF({p}^{m}) needs {m + 1} coefficients, got {len(coeffs)}"
            raise FieldError(msg)
        if any(not 0 <= c < p for c in coeffs):
            msg = f"modulus coefficients must lie in [0, {p}), got {list(coeffs)}"
            raise FieldError(msg)
        if coeffs[-1] != 1:
            msg = f"modulus must be monic, got leading coefficient {coeffs[-1]}"
            raise FieldError(msg)
        if not galois.Poly(list(coeffs), field=galois.GF(p), order="asc").is_irreducible():
            msg = f"modulus {list(coeffs)} is reducible over GF({p})"
            raise FieldError(msg)

    spec = FieldSpec(p, m, coeffs)
    logger.debug("field constructed", extra={"field": spec.describe()})
    return spec


def parse_field(text: str) -> FieldSpec:
    """Parse ``p``, ``p^m`` or ``p^m:c0,...,cm``."""
    match = _FIELD_RE.match(text)
    if match is None:
        msg = f"cannot parse field descriptor {text!r}; expected p^m with optional :c0,...,cm"
        raise FieldError(msg)
    p = int(match["p"])
    m = int(match["m"]) if match["m"] is not None else 1
    modulus = None
    if match["modulus"] is not None:
        parts = [part.strip() for part in match["modulus"].split(",")]
        if any(part == "" for part in parts):
            msg = f"empty coefficient in modulus of {text!r}"
            raise FieldError(msg)
        modulus = [int(part) for part in parts]
    return field_make(p, m, modulus)


def parse_element(spec: FieldSpec, text: str) -> FieldArray:
    """Parse an integer encoding such as ``9``, or ``g^t`` for the primitive element raised to ``t``."""
    if (match := _POWER_RE.match(text)) is not None:
        exponent = int(match["exp"]) if match["exp"] is not None else 1
        return spec.primitive_element() ** exponent
    try:
        value = int(text.strip())
    except ValueError as e:
        msg = f"cannot parse field element {text!r}; expected an integer or g^t"
        raise FieldError(msg) from e
    return spec(value)


def parse_elements(spec: FieldSpec, text: str) -> FieldArray:
    parts = [part for part in text.split(",") if part.strip()]
    return spec([int(parse_element(spec, part)) for part in parts])


def spec_of(array: FieldArray) -> FieldSpec:
    """Recover the ``FieldSpec`` of a galois field array."""
    gf = type(array)
    p, m = int(gf.characteristic), int(gf.degree)
    if m == 1:
        return FieldSpec(p, 1, (0, 1))
    return FieldSpec(p, m, tuple(int(c) for c in gf.irreducible_poly.coefficients(order="asc")))


def same_field(*arrays: FieldArray) -> type[FieldArray]:
    """Return the common field class of ``arrays`` or raise ``FieldMismatchError``."""
    classes = {type(a) for a in arrays}
    if len(classes) != 1 or not issubclass(next(iter(classes)), FieldArray):
        names = sorted(getattr(c, "name", c.__name__) for c in classes)
        msg = f"values belong to different fields: {names}"
        raise FieldMismatchError(msg)
    return next(iter(classes))


def inv(value: FieldArray) -> FieldArray:
    """
    Multiplicative inverse.

    Raises
    ------
        FieldError: If ``value`` is zero.
    """
    if np.any(value == 0):
        msg = "zero has no multiplicative inverse"
        raise FieldError(msg)
    return value**-1
