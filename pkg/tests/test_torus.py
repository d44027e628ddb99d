"""Noncommutative torus algebra: product-to-sum rule and its consequences."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skeinalg.laurent import LaurentPoly, tpow
from skeinalg.torus import EMPTY_TIMES_2, TorusElement, canonicalize, mul


def curve(p, q):
    return TorusElement.curve(p, q)


def test_canonicalize():
    assert canonicalize(2, 3) == (2, 3)
    assert canonicalize(-2, 3) == (2, -3)
    assert canonicalize(0, -4) == (0, 4)
    assert canonicalize(-1, 0) == (1, 0)
    assert canonicalize(0, 0) is EMPTY_TIMES_2


def test_curve_constructor_canonicalizes():
    assert curve(-1, 2) == curve(1, -2)
    assert curve(0, -3) == curve(0, 3)
    assert curve(0, 0).empty_coeff == 2
    assert curve(0, 0).curve_items() == []


def test_zero_unit_scale():
    z = TorusElement.zero()
    assert z.is_zero()
    one = TorusElement.unit()
    assert one.empty_coeff == 1
    assert (one + z) == one
    assert one.scale(tpow(3)).empty_coeff == tpow(3)
    assert (curve(1, 2) - curve(1, 2)).is_zero()


def test_coeff_accessor():
    a = curve(2, 1).scale(tpow(-1)) + curve(1, 0)
    assert a.coeff(2, 1) == tpow(-1)
    assert a.coeff(1, 0) == 1
    assert a.coeff(3, 3) == 0
    with pytest.raises(ValueError):
        a.coeff(0, 0)


def test_product_to_sum_basic():
    # (1,0)(0,1) = t (1,1) + t^-1 (1,-1)
    prod = mul(curve(1, 0), curve(0, 1))
    assert prod == curve(1, 1).scale(tpow(1)) + curve(1, -1).scale(tpow(-1))


def test_self_product_hits_trivial_loop():
    # (p,q)(p,q) = (2p,2q) + 2 (empty doubled by the difference term)
    prod = mul(curve(1, 2), curve(1, 2))
    assert prod.coeff(2, 4) == 1
    assert prod.empty_coeff == 2


@pytest.mark.parametrize("q", range(-10, 11))
def test_commutation_identity_right(q):
    # (1,q)(0,1) = t (1,q+1) + t^-1 (1,q-1)
    lhs = mul(curve(1, q), curve(0, 1))
    rhs = curve(1, q + 1).scale(tpow(1)) + curve(1, q - 1).scale(tpow(-1))
    assert lhs == rhs


@pytest.mark.parametrize("q", range(-10, 11))
def test_commutation_identity_left(q):
    # (0,1)(1,q) = t^-1 (1,q+1) + t (1,q-1)
    lhs = mul(curve(0, 1), curve(1, q))
    rhs = curve(1, q + 1).scale(tpow(-1)) + curve(1, q - 1).scale(tpow(1))
    assert lhs == rhs


def test_commutator_is_loop_multiple():
    # (1,0) and (0,1) t-commute: t (1,0)(0,1) - t^-1 (0,1)(1,0)
    # collapses onto (1,1) alone.
    lhs = mul(curve(1, 0), curve(0, 1)).scale(tpow(1))
    rhs = mul(curve(0, 1), curve(1, 0)).scale(tpow(-1))
    assert lhs - rhs == curve(1, 1).scale(tpow(2) - tpow(-2))


def test_associativity_random_triples():
    rng = random.Random(2)
    for _ in range(100):
        points = [
            (rng.randint(-5, 5), rng.randint(-5, 5))
            for _ in range(3)
        ]
        a, b, c = (curve(p, q) for p, q in points)
        assert mul(mul(a, b), c) == mul(a, mul(b, c)), points


def test_distributes_over_sums():
    a = curve(1, 2).scale(tpow(2)) + curve(0, 1)
    b = curve(2, -1)
    c = curve(1, 0).scale(tpow(-4, 3))
    assert mul(a + c, b) == mul(a, b) + mul(c, b)
    assert mul(b, a + c) == mul(b, a) + mul(b, c)


def test_unit_is_identity():
    one = TorusElement.unit()
    a = curve(3, -2).scale(tpow(5)) + curve(1, 1) + one.scale(tpow(-2, 4))
    assert mul(one, a) == a
    assert mul(a, one) == a


def test_bar_involution():
    a = curve(1, 2).scale(tpow(3)) + TorusElement.unit().scale(tpow(-1, 2))
    assert a.bar().bar() == a
    assert a.bar().coeff(1, 2) == tpow(-3)


def test_bar_antimultiplicative():
    # bar(ab) = bar(b) bar(a); the algebra's bar reverses products.
    samples = [curve(1, 2), curve(0, 1).scale(tpow(2)), curve(2, -3) + curve(1, 0)]
    for a in samples:
        for b in samples:
            assert mul(a, b).bar() == mul(b.bar(), a.bar())


def test_json_round_trip():
    a = curve(2, -3).scale(tpow(-1) + tpow(3)) + TorusElement.unit().scale(tpow(2, -2))
    assert TorusElement.from_json(a.to_json()) == a
    assert TorusElement.from_json(TorusElement.zero().to_json()).is_zero()


def test_curve_items_order():
    a = curve(1, 1) + curve(2, -1) + curve(1, 3)
    assert [pq for pq, _ in a.curve_items()] == [(2, -1), (1, 3), (1, 1)]


small_ints = st.integers(min_value=-4, max_value=4)


@settings(max_examples=40, deadline=None)
@given(small_ints, small_ints, small_ints, small_ints, small_ints, small_ints)
def test_associativity_property(p1, q1, p2, q2, p3, q3):
    a, b, c = curve(p1, q1), curve(p2, q2), curve(p3, q3)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
