from math import gcd

import numpy as np
import pytest

from etgrs.algebra.field import (
    FieldError,
    FieldMismatchError,
    field_make,
    inv,
    parse_element,
    parse_elements,
    parse_field,
    same_field,
    spec_of,
)


def test_prime_field_descriptor(gf13):
    assert gf13.q == 13
    assert gf13.describe() == "13"
    assert str(gf13) == "GF(13)"
    assert len(gf13.elements()) == 13
    assert len(gf13.nonzero_elements()) == 12


def test_extension_field_uses_conway_modulus(gf8):
    # x^3 + x + 1, constant term first
    assert gf8.modulus == (1, 1, 0, 1)
    assert gf8.describe() == "2^3:1,1,0,1"
    assert str(gf8) == "GF(2^3)"
    assert parse_field(gf8.describe()) == gf8


@pytest.mark.parametrize(
    ("p", "m", "modulus", "match"),
    [
        (4, 1, None, "prime"),
        (2, 0, None, "at least 1"),
        (2, 17, None, "ceiling"),
        (2, 3, [1, 0, 0, 1], "reducible"),
        (2, 3, [1, 1, 0, 0], "monic"),
        (2, 3, [1, 1, 1], "needs 4"),
        (3, 2, [1, 3, 1], r"\[0, 3\)"),
    ],
    ids=["composite", "degree-zero", "too-large", "reducible", "not-monic", "short", "coefficient-range"],
)
def test_field_make_rejects(p, m, modulus, match):
    with pytest.raises(FieldError, match=match):
        field_make(p, m, modulus)


@pytest.mark.parametrize(
    ("text", "q"),
    [("13", 13), ("2^3", 8), (" 3 ^ 2 ", 9), ("2^3:1,1,0,1", 8), ("2^4", 16)],
)
def test_parse_field(text, q):
    assert parse_field(text).q == q


def test_parse_field_rejects_garbage():
    with pytest.raises(FieldError, match="cannot parse"):
        parse_field("GF(8)")


def test_primitive_element(gf13, gf8):
    assert int(gf13.primitive_element()) == 2
    assert int(gf8.primitive_element()) == 2
    assert int(gf8.primitive_element().multiplicative_order()) == 7


@pytest.mark.parametrize(
    ("text", "value"),
    [("9", 9), ("g", 2), ("g^2", 4), ("g^0", 1), ("ξ^3", 8), ("g^-1", 7), ("g^12", 1)],
)
def test_parse_element_prime_field(gf13, text, value):
    assert int(parse_element(gf13, text)) == value


def test_parse_element_gf8_powers(gf8):
    assert [int(x) for x in parse_elements(gf8, "g,g^2,g^3,g^4,g^5,g^6")] == [2, 4, 3, 6, 7, 5]


@pytest.mark.parametrize("text", ["13", "-1", "x", "g^"])
def test_parse_element_rejects(gf13, text):
    with pytest.raises(FieldError):
        parse_element(gf13, text)


def test_call_rejects_out_of_range(gf13):
    with pytest.raises(FieldError, match=r"\[0, 13\)"):
        gf13([1, 13])


def test_spec_of_round_trips(gf8, gf13):
    assert spec_of(gf8([1, 2])) == gf8
    assert spec_of(gf13(5)) == gf13


def test_same_field_rejects_mixed(gf8, gf13):
    assert same_field(gf8([1]), gf8([2])) is gf8.gf
    with pytest.raises(FieldMismatchError):
        same_field(gf8([1]), gf13([1]))


def test_inverse(gf13):
    assert int(inv(gf13(2))) == 7
    with pytest.raises(FieldError, match="zero"):
        inv(gf13(0))


@pytest.mark.parametrize("field_name", ["gf4", "gf7", "gf8", "gf9", "gf11", "gf13", "gf16"])
def test_field_axioms_hold_exhaustively(request, field_name):
    spec = request.getfixturevalue(field_name)
    elements = spec.elements()
    a, b, c = elements[:, None, None], elements[None, :, None], elements[None, None, :]
    assert np.all((a + b) + c == a + (b + c))
    assert np.all((a * b) * c == a * (b * c))
    assert np.all(a * (b + c) == a * b + a * c)
    x, y = elements[:, None], elements[None, :]
    assert np.all(x + y == y + x)
    assert np.all(x * y == y * x)
    assert np.all(x - y == x + (-y))
    assert np.all(elements + spec.zero == elements)
    assert np.all(elements * spec.one == elements)
    assert np.all(elements + (-elements) == spec.zero)
    nonzero = spec.nonzero_elements()
    assert np.all(nonzero * inv(nonzero) == spec.one)
    assert np.all(elements**spec.q == elements)


@pytest.mark.parametrize("field_name", ["gf4", "gf7", "gf8", "gf9", "gf11", "gf13", "gf16"])
def test_multiplicative_orders(request, field_name):
    spec = request.getfixturevalue(field_name)
    orders = [int(x.multiplicative_order()) for x in spec.nonzero_elements()]
    assert all((spec.q - 1) % order == 0 for order in orders)
    primitive_count = sum(1 for order in orders if order == spec.q - 1)
    assert primitive_count == sum(1 for t in range(1, spec.q) if gcd(t, spec.q - 1) == 1)
    g = spec.primitive_element()
    assert int(g.multiplicative_order()) == spec.q - 1
    assert int(g) == min(int(x) for x, order in zip(spec.nonzero_elements(), orders) if order == spec.q - 1)
    assert sorted(int(g**t) for t in range(spec.q - 1)) == list(range(1, spec.q))


def test_gf8_table_values(gf8):
    xi = gf8.primitive_element()
    assert int(xi * xi**2) == 3
    assert int(inv(xi)) == 5
    assert int(xi**3) == 3


def test_alternate_gf8_modulus(gf8):
    # x^3 + x^2 + 1
    other = field_make(2, 3, [1, 0, 1, 1])
    assert other.q == 8
    assert other != gf8
    assert other.describe() == "2^3:1,0,1,1"
    assert parse_field("2^3:1,0,1,1") == other
    assert int(other(2) * other(4)) == 5
    assert int(gf8(2) * gf8(4)) == 3
    products = [[int(x * y) for y in other.elements()] for x in other.elements()]
    conway = [[int(x * y) for y in gf8.elements()] for x in gf8.elements()]
    assert products != conway
    assert int(other.primitive_element().multiplicative_order()) == 7


@pytest.mark.parametrize("field_name", ["gf9", "gf16", "gf13"])
def test_integer_encoding_is_base_p_coordinates(request, field_name):
    spec = request.getfixturevalue(field_name)
    for value in range(spec.q):
        element = spec(value)
        # galois lists coordinates highest degree first
        digits = [int(d) for d in element.vector()][::-1]
        assert sum(d * spec.p**i for i, d in enumerate(digits)) == value
        assert int(parse_element(spec, str(value))) == value
        assert spec.gf.Vector(element.vector()) == element


def test_primitive_element_of_gf2():
    assert int(field_make(2).primitive_element()) == 1
