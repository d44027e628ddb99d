"""Reduction rules and curve actions on the knot-complement module."""

from __future__ import annotations

import pytest

from skeinalg import fixtures, knot_module as km
from skeinalg.bivariate import SkeinElement
from skeinalg.errors import DegreeTooHigh
from skeinalg.laurent import tpow
from skeinalg.parsing import parse_xy

MODULE_RESULTS = fixtures.run_group("knot_module")
BY_NAME = {r["name"]: r for r in MODULE_RESULTS}


def test_fixture_inventory():
    # 3 reduction rules + the reduced X4 display + 11 X_j*S_k displays.
    assert len(MODULE_RESULTS) == 15
    kinds = {}
    for r in MODULE_RESULTS:
        kinds[r["name"]] = r["status"]
    assert kinds["S4(y) reduction"] == "expected-match"
    assert kinds["S5(y) reduction"] == "expected-match"
    assert kinds["S6(y) reduction"] == "suspected-typo"
    assert kinds["X4 reduced"] == "expected-match"


@pytest.mark.parametrize(
    "name", [r["name"] for r in MODULE_RESULTS if r["status"] == "expected-match"]
)
def test_reference_displays_match(name):
    r = BY_NAME[name]
    assert r["matched"], f"{name}: derived={r['derived']} expected={r['expected']}"


@pytest.mark.parametrize(
    "name", [r["name"] for r in MODULE_RESULTS if r["status"] == "suspected-typo"]
)
def test_flagged_displays_diverge_with_both_values_reported(name):
    r = BY_NAME[name]
    assert not r["matched"]
    assert r["derived"] and r["expected"] and r["difference"] != "0"
    assert r["note"]


def test_no_unexpected_mismatches():
    assert fixtures.unexpected_mismatches(MODULE_RESULTS) == []
    flagged = sorted(r["name"] for r in MODULE_RESULTS if not r["matched"])
    assert flagged == ["S6(y) reduction", "X2*S3", "X2*S4", "X3*S3", "X4*S3", "X4*S4"]


# -- reduction rules ------------------------------------------------------


def test_rules_reduce_high_y_chebyshev_to_basis():
    rules = km.derive_reductions()
    for b in (4, 5, 6):
        el = rules.rule(b)
        assert el.y_degree() <= km.Y_BASIS_DEGREE
        assert km.reduce(SkeinElement.y_cheb(b)) == el


def test_reduce_is_identity_on_basis_range():
    el = SkeinElement.term(2, 3, tpow(1)) + SkeinElement.term(0, 1)
    assert km.reduce(el) == el


def test_reduce_linearity():
    a = SkeinElement.y_cheb(5).mul_x()
    b = SkeinElement.y_cheb(4)
    assert km.reduce(a + b.scale(tpow(2))) == km.reduce(a) + km.reduce(b).scale(tpow(2))


def test_reduce_caps_at_reducible_degree():
    with pytest.raises(DegreeTooHigh):
        km.reduce(SkeinElement.term(0, 7))
    assert km.reduce(SkeinElement.term(0, 6)) is not None


def test_validate_enforces_module_basis():
    km.validate(SkeinElement.term(5, 3))
    with pytest.raises(Exception):
        km.validate(SkeinElement.term(0, 4))


def test_vanishing_combination_reduces_to_zero():
    # The derived rules must satisfy all three instances of the
    # elimination identity that produced them.
    for k in (0, 1, 2):
        assert km.reduce(km.vanishing_combination(k)).is_zero()


def test_s6_rule_corroborated_through_x3_s4():
    # The flagged S6 display differs from the recomputed rule by a single
    # sign slip worth 2t^-20*S_2(y); the recomputed rule is the consistent
    # one because X3*S4, reduced through it, reproduces its own display.
    r = BY_NAME["S6(y) reduction"]
    diff = parse_xy(r["derived"]) - parse_xy(r["expected"])
    assert diff == SkeinElement.y_cheb(2).scale(tpow(-20, 2))
    assert BY_NAME["X3*S4"]["matched"]


# -- X_j actions: two routes and the elimination identity ----------------


@pytest.mark.parametrize("j", [1, 2, 3, 4])
@pytest.mark.parametrize("k", range(0, 5))
def test_xj_action_routes_agree(j, k):
    assert km.xj_action(j, k) == km.xj_action_scheme(j, k)


@pytest.mark.parametrize("j", [1, 2, 3, 4])
@pytest.mark.parametrize("p", range(0, 7))
def test_xj_power_routes_agree(j, p):
    assert km.xj_power(j, p) == km.xj_power_scheme(j, p)


def test_xj_power_bounds():
    with pytest.raises(Exception):
        km.xj_power(5, 0)
    with pytest.raises(Exception):
        km.xj_power(1, 7)


@pytest.mark.parametrize("k", range(0, 5))
def test_elimination_identity_in_s_basis(k):
    # X4*S_k + t^-4 X3*S_k + t^-2 x^2 S_k(y) = 0 in the module.
    resid = (
        km.xj_action(4, k)
        + km.xj_action(3, k).scale(tpow(-4))
        + km.reduce(SkeinElement.y_cheb(k).mul_x(2)).scale(tpow(-2))
    )
    assert resid.is_zero(), f"k={k}"


def test_x3_s3_display_drops_constant_terms():
    r = BY_NAME["X3*S3"]
    diff = parse_xy(r["derived"]) - parse_xy(r["expected"])
    assert diff == SkeinElement.term(2, 0, tpow(-4, 2)) - SkeinElement.term(0, 0, tpow(-8))


def test_x4_s3_slip_is_propagation_of_x3_s3():
    d33 = parse_xy(BY_NAME["X3*S3"]["derived"]) - parse_xy(BY_NAME["X3*S3"]["expected"])
    d43 = parse_xy(BY_NAME["X4*S3"]["derived"]) - parse_xy(BY_NAME["X4*S3"]["expected"])
    assert d43 == d33.scale(-tpow(-4))
    # The two displayed values are consistent with *each other* under the
    # elimination identity -- the slip entered once and propagated.
    printed_resid = (
        parse_xy(BY_NAME["X4*S3"]["expected"])
        + parse_xy(BY_NAME["X3*S3"]["expected"]).scale(tpow(-4))
        + km.reduce(SkeinElement.y_cheb(3).mul_x(2)).scale(tpow(-2))
    )
    assert printed_resid.is_zero()


def test_x2_s4_slips():
    diff = parse_xy(BY_NAME["X2*S4"]["derived"]) - parse_xy(BY_NAME["X2*S4"]["expected"])
    expected = SkeinElement.y_cheb(2).scale(tpow(-2, 2)) + SkeinElement.x_cheb(2).scale(
        tpow(-2, 2) - 2
    )
    assert diff == expected


def test_x4_s4_adjudicated_by_elimination_identity():
    # Both neighbours (X3*S4 and the S4 rule) match their displays, so the
    # identity arbitrates: the displayed X4*S4 fails it, the recomputed
    # value satisfies it with zero residual.
    x2s4 = km.reduce(SkeinElement.y_cheb(4).mul_x(2))
    tail = parse_xy(BY_NAME["X3*S4"]["expected"]).scale(tpow(-4)) + x2s4.scale(tpow(-2))
    assert not (parse_xy(BY_NAME["X4*S4"]["expected"]) + tail).is_zero()
    assert (parse_xy(BY_NAME["X4*S4"]["derived"]) + tail).is_zero()


def test_x4_expansion_matches_rules():
    rules = km.derive_reductions()
    assert km.xj_action(4, 0) == rules.x4


def test_y1_action_values():
    # Y1 acts within the module basis after reduction.
    for k in range(4):
        el = km.y1_action(k)
        assert el.y_degree() <= km.Y_BASIS_DEGREE
