"""Text grammar for algebra and module elements, and the printers."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skeinalg.bivariate import SkeinElement
from skeinalg.errors import ParseError
from skeinalg.laurent import LaurentPoly, tpow
from skeinalg.parsing import (
    format_torus,
    format_xy,
    parse_element,
    parse_expression,
    parse_torus,
    parse_xy,
)
from skeinalg.torus import TorusElement


def test_single_curve():
    kind, val = parse_element("(1,-3)")
    assert kind == "torus"
    assert val == TorusElement.curve(1, -3)


def test_curve_with_laurent_coefficient():
    kind, val = parse_element("(t^2-1)*(1,-3) + (0,1)")
    assert kind == "torus"
    expected = TorusElement.curve(1, -3).scale(tpow(2) - 1) + TorusElement.curve(0, 1)
    assert val == expected


def test_chebyshev_atom():
    kind, val = parse_element("S_2(y)")
    assert kind == "xy"
    assert val == SkeinElement.y_cheb(2)
    assert format_xy(val) == "S_2(y)"
    assert format_xy(val, basis="power") == "y^2 - 1"


def test_power_monomial():
    kind, val = parse_element("x^2*y^1")
    assert kind == "xy"
    assert val == SkeinElement.term(2, 1)
    assert parse_xy("x^2*y") == val
    assert format_xy(val, basis="power") == "x^2*y"
    assert format_xy(val) == "S_2(x)*S_1(y) + S_1(y)"


def test_scalar():
    kind, val = parse_element("t^2 - 1")
    assert kind == "scalar"
    assert val == tpow(2) - 1
    assert parse_element("5")[1] == 5


def test_mixed_signs_and_parenthesized_coeffs():
    el = parse_xy("y^3 - (t^2)*x^2*y")
    expected = SkeinElement.term(0, 3) - SkeinElement.term(2, 1, tpow(2))
    assert el == expected


def test_parse_torus_promotes_scalars():
    el = parse_torus("t^2 - 1")
    assert el == TorusElement.unit().scale(tpow(2) - 1)
    with pytest.raises(ParseError):
        parse_torus("x^2")


def test_parse_xy_promotes_scalars():
    el = parse_xy("-3")
    assert el == SkeinElement.term(0, 0, -3)
    with pytest.raises(ParseError):
        parse_xy("(1,2)")


def test_parse_expression_dispatch():
    assert parse_expression("(2,1)") == TorusElement.curve(2, 1)
    assert parse_expression("x*y^2") == SkeinElement.term(1, 2)


def test_errors_carry_positions():
    with pytest.raises(ParseError) as info:
        parse_element("(1,-3")
    assert "offset 0" in str(info.value)
    with pytest.raises(ParseError) as info:
        parse_element("S_2(z)")
    assert info.value.position == 0
    with pytest.raises(ParseError):
        parse_element("")
    with pytest.raises(ParseError):
        parse_element("x*(1,2)")
    with pytest.raises(ParseError):
        parse_element("(1,2)*(3,4)")


def test_format_torus_examples():
    a = TorusElement.curve(1, -3).scale(tpow(2) - 1) + TorusElement.curve(0, 1)
    assert format_torus(a) == "(t^2 - 1)*(1,-3) + (0,1)"
    assert format_torus(TorusElement.zero()) == "0"


def test_format_xy_basis_toggle():
    el = SkeinElement.term(3, 1)
    assert format_xy(el, basis="power") == "x^3*y"
    assert format_xy(el) == "S_3(x)*S_1(y) + 2*S_1(x)*S_1(y)"
    assert format_xy(SkeinElement.zero()) == "0"
    assert format_xy(SkeinElement.term(0, 0, 2), basis="power") == "2"


coeff_polys = st.builds(
    LaurentPoly,
    st.dictionaries(
        st.integers(min_value=-6, max_value=6),
        st.integers(min_value=-9, max_value=9),
        max_size=3,
    ),
)

xy_elements = st.dictionaries(
    st.tuples(st.integers(min_value=0, max_value=5), st.integers(min_value=0, max_value=4)),
    coeff_polys,
    max_size=5,
).map(lambda d: SkeinElement({k: v for k, v in d.items() if v}))

torus_elements = st.dictionaries(
    st.tuples(st.integers(min_value=0, max_value=4), st.integers(min_value=-4, max_value=4)),
    coeff_polys,
    max_size=4,
).map(
    lambda d: sum(
        (TorusElement.curve(p, q).scale(c) for (p, q), c in d.items() if c and (p, q) != (0, 0)),
        TorusElement.zero(),
    )
)


@settings(max_examples=80, deadline=None)
@given(xy_elements)
def test_xy_round_trip_power(el):
    assert parse_xy(format_xy(el, basis="power")) == el


@settings(max_examples=80, deadline=None)
@given(xy_elements)
def test_xy_round_trip_chebyshev(el):
    assert parse_xy(format_xy(el, basis="chebyshev")) == el


@settings(max_examples=80, deadline=None)
@given(torus_elements)
def test_torus_round_trip(el):
    assert parse_torus(format_torus(el)) == el
