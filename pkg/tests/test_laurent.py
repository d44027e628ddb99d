"""Exact Laurent-polynomial arithmetic in the quantum parameter."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skeinalg.errors import NotAUnit, NotInQ, ParseError
from skeinalg.laurent import (
    LaurentPoly,
    as_laurent,
    format_laurent,
    parse_laurent,
    tpow,
)

coeffs = st.integers(min_value=-50, max_value=50)
exps = st.integers(min_value=-12, max_value=12)
polys = st.dictionaries(exps, coeffs, max_size=6).map(LaurentPoly)


def test_zero_and_constants():
    assert LaurentPoly.zero().is_zero()
    assert LaurentPoly({}) == 0
    assert LaurentPoly.const(5) == 5
    assert LaurentPoly({3: 0, 0: 2}) == 2
    assert not LaurentPoly.zero()
    assert bool(tpow(1))


def test_items_sorted_by_descending_exponent():
    p = LaurentPoly({-2: 1, 4: 3, 0: -1})
    assert p.items() == [(4, 3), (0, -1), (-2, 1)]
    assert p.max_exp() == 4
    assert p.min_exp() == -2


def test_coeff_lookup():
    p = tpow(2, 7) - tpow(-1)
    assert p.coeff(2) == 7
    assert p.coeff(-1) == -1
    assert p.coeff(5) == 0


def test_basic_arithmetic():
    a = tpow(2) + 1
    b = tpow(-2) - 1
    assert a + b == tpow(2) + tpow(-2)
    assert a - a == 0
    assert -a == LaurentPoly({2: -1, 0: -1})
    assert a * b == tpow(2) * tpow(-2) - tpow(2) + tpow(-2) - 1
    assert a * 0 == 0
    assert a * 3 == tpow(2, 3) + 3


def test_int_interop():
    assert tpow(0) == 1
    assert 1 - tpow(4) == LaurentPoly({0: 1, 4: -1})
    assert as_laurent(4) == LaurentPoly.const(4)
    assert as_laurent(tpow(1)) is not None


def test_shift_is_exponent_translation():
    p = tpow(3, 2) - tpow(-1)
    assert p.shift(4) == tpow(7, 2) - tpow(3)
    assert p.shift(0) == p
    assert p.shift(-3) == tpow(0, 2) - tpow(-4)
    assert p.shift(2) == p * tpow(2)


def test_bar_negates_exponents():
    p = tpow(5, 2) + tpow(-1, -3) + 4
    assert p.bar() == tpow(-5, 2) + tpow(1, -3) + 4
    assert p.bar().bar() == p


def test_units_and_division():
    u = tpow(6, -1)
    assert u.is_unit()
    assert u.unit_parts() == (-1, 6)
    assert not (tpow(1) + 1).is_unit()
    p = tpow(8, 2) - tpow(2)
    assert p.div_by_unit(u) == -(tpow(2, 2) - tpow(-4))
    assert p.div_by_unit(u) * u == p
    with pytest.raises(NotAUnit):
        p.div_by_unit(tpow(1) + 1)


def test_q_substitution_round_trip():
    p = tpow(8) + tpow(-4, 2) - 3
    q = p.to_q()
    assert q == LaurentPoly({2: 1, -1: 2, 0: -3})
    assert q.from_q() == p
    with pytest.raises(NotInQ):
        tpow(3).to_q()


def test_json_round_trip():
    p = tpow(4) - tpow(-4, 3) + 2
    data = p.to_json()
    assert data == [[4, "1"], [0, "2"], [-4, "-3"]]
    assert LaurentPoly.from_json(data) == p
    assert LaurentPoly.from_json([]) == 0


def test_format_examples():
    assert format_laurent(LaurentPoly.zero()) == "0"
    assert format_laurent(tpow(0, -1)) == "-1"
    assert format_laurent(-tpow(4) - 1) == "-t^4 - 1"
    assert format_laurent(tpow(2, 3) - 5 + tpow(-2)) == "3*t^2 - 5 + t^-2"
    assert format_laurent(tpow(1)) == "t"
    assert format_laurent(tpow(-1)) == "t^-1"
    p = tpow(8) + tpow(-4, 2)
    assert format_laurent(p.to_q(), var="q") == "q^2 + 2*q^-1"


def test_parse_examples():
    assert parse_laurent("-t^4 - 1") == -tpow(4) - 1
    assert parse_laurent("t^-2 + 3*t^2 - 5") == tpow(-2) + tpow(2, 3) - 5
    assert parse_laurent("7") == 7
    assert parse_laurent("t") == tpow(1)
    assert parse_laurent("q^2 + 2*q^-1", var="q") == LaurentPoly({2: 1, -1: 2})


def test_parse_rejects_garbage():
    with pytest.raises(ParseError):
        parse_laurent("t^")
    with pytest.raises(ParseError):
        parse_laurent("t + + 1")
    with pytest.raises(ParseError):
        parse_laurent("x^2")


@given(polys, polys)
def test_addition_commutes(a, b):
    assert a + b == b + a


@given(polys, polys, polys)
def test_addition_associates(a, b, c):
    assert (a + b) + c == a + (b + c)


@given(polys, polys)
def test_multiplication_commutes(a, b):
    assert a * b == b * a


@settings(max_examples=60)
@given(polys, polys, polys)
def test_multiplication_associates(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=60)
@given(polys, polys, polys)
def test_distributivity(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(polys)
def test_additive_inverse(a):
    assert a + (-a) == 0
    assert a - a == 0


@given(polys)
def test_bar_is_ring_involution(a):
    assert a.bar().bar() == a


@given(polys, polys)
def test_bar_respects_product(a, b):
    assert (a * b).bar() == a.bar() * b.bar()


@given(polys)
def test_format_parse_round_trip(a):
    assert parse_laurent(format_laurent(a)) == a


@given(polys)
def test_json_round_trip_random(a):
    assert LaurentPoly.from_json(a.to_json()) == a
