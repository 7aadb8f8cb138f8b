from fractions import Fraction

import pytest
from hypothesis import given

from perdet.laurent import Laurent, Q, evaluate, exact_div, format_poly, is_unit, normalize, parse_poly

from conftest import laurent_polys


@pytest.mark.parametrize("text,expected", [
    ("1+q", Laurent({0: 1, 1: 1})),
    ("q^-1+1", Laurent({-1: 1, 0: 1})),
    ("-q", Laurent({1: -1})),
    ("7", 7),
    ("2q-2q", 0),
    ("1+2q^3", Laurent({0: 1, 3: 2})),
])
def test_parse(text, expected):
    assert parse_poly(text) == expected


@pytest.mark.parametrize("bad", ["", "q^", "1++q", "x", "2 q q"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_poly(bad)


def test_canonical_output_ascends():
    assert format_poly(Laurent({3: 2, 0: 1})) == "1+2q^3"
    assert format_poly(Laurent({0: 1, -1: 1})) == "q^-1+1"
    assert format_poly(-Q + 3) == "3-q"
    assert format_poly(0) == "0"


def test_constants_collapse_to_int():
    assert normalize(Q - Q + 5) == 5
    assert isinstance(normalize(Q * Laurent({-1: 1})), int)


@given(laurent_polys())
def test_print_parse_roundtrip(x):
    assert parse_poly(format_poly(x)) == x


@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_ring_axioms(a, b, c):
    assert normalize((a + b) * c) == normalize(a * c + b * c)
    assert normalize(a * b) == normalize(b * a)
    assert normalize(a - a) == 0


@given(laurent_polys(), laurent_polys())
def test_exact_division_inverts_product(a, b):
    if normalize(b) == 0:
        return
    assert exact_div(normalize(a * b), b) == normalize(a)


def test_inexact_division_raises():
    with pytest.raises(ArithmeticError):
        exact_div(Q + 1, Q + 2)
    with pytest.raises(ArithmeticError):
        exact_div(7, 2)


@given(laurent_polys(), laurent_polys())
def test_evaluation_is_a_homomorphism(a, b):
    x = Fraction(3, 2)
    assert evaluate(normalize(a * b), x) == evaluate(a, x) * evaluate(b, x)


def test_units_are_signed_monomials():
    assert is_unit(Laurent({-3: -1}))
    assert is_unit(-1)
    assert not is_unit(2)
    assert not is_unit(1 + Q)
