"""The free module of the twist-knot exterior and the reduction map into it.

The module is free on x^n y^k with n >= 0 and 0 <= k <= 3.  Elements are the
same SkeinElement objects the handlebody code produces; what changes is the
set of identities in force.  The extra identity

    X_4*y^k = -t^-4 X_3*y^k - t^-2 x^2 y^k        (k >= 0)

combined with the handlebody expansions of X_3*y^k and X_4*y^k for
k = 0, 1, 2 yields rewrite rules for S_4(y), S_5(y), S_6(y) in terms of the
basis, which is what reduce() applies.  No S_7 rule is derived, so reduce is
only defined up to y-degree 6.

Two independent routes compute the module elements X_j*S_k(y):

  * xj_action: evaluate the family in the handlebody and reduce (with
    in-module lowering via the recursions once the handlebody value would
    exceed y-degree 6);
  * xj_action_scheme: the closed recursive scheme obtained by eliminating
    the y-power climb,

        X_1*S_{k+1} = t^2 X_2*S_k + t^-2 Y_1*S_k - X_1*S_{k-1} + 2x^2 S_k
        X_2*S_{k+1} = t^2 X_3*S_k + t^-2 X_1*S_k - X_2*S_{k-1} + 2x^2 S_k
        X_3*S_{k+1} = t^2 X_4*S_k + t^-2 X_2*S_k - X_3*S_{k-1} + 2x^2 S_k
        X_4*S_k     = -t^-4 X_3*S_k - t^-2 x^2 S_k

Their agreement is a strong self-check and is part of the test suite.
"""

from __future__ import annotations

from functools import lru_cache

from . import chebyshev, handlebody
from .bivariate import SkeinElement
from .errors import (
    DegreeTooHigh,
    InvariantViolation,
    NonUnitLeadingCoefficient,
)
from .laurent import tpow

Y_BASIS_DEGREE = 3
Y_REDUCIBLE_DEGREE = 6


class ReductionRules:
    """The rewrite rules S_b(y) -> basis element for b = 4, 5, 6, together
    with the reduced expansion of X_4 that falls out of the same identity."""

    def __init__(self, s_rules, x4):
        self.s_rules = dict(s_rules)
        self.x4 = x4

    def rule(self, b):
        return self.s_rules[b]


def _substitute(element, rules):
    """Replace S_b(y) factors (b in rules) by their rule values."""
    out = SkeinElement()
    for (m, b), c in sorted(element.to_cheb_y().items()):
        part = rules[b] if b in rules else SkeinElement.y_cheb(b)
        out = out + part.mul_x(m).scale(c)
    return out


def vanishing_combination(k):
    """X_4*y^k + t^-4 X_3*y^k + t^-2 x^2 y^k, which maps to zero here."""
    return (
        handlebody.family_eval("X", 4, k)
        + handlebody.family_eval("X", 3, k).scale(tpow(-4))
        + SkeinElement.term(2, k, tpow(-2))
    )


@lru_cache(maxsize=None)
def derive_reductions():
    """Solve the k = 0, 1, 2 instances of the identity for S_4, S_5, S_6."""
    rules = {}
    for k in (0, 1, 2):
        cheb = vanishing_combination(k).to_cheb_y()
        top = max(b for (_, b) in cheb)
        if top != 4 + k:
            raise InvariantViolation(
                f"identity at k={k} tops out at S_{top}(y), expected S_{4 + k}(y)"
            )
        lead = {m: c for (m, b), c in cheb.items() if b == top}
        if list(lead) != [0] or not lead[0].is_unit():
            raise NonUnitLeadingCoefficient(
                f"cannot solve for S_{top}(y): leading coefficient is not a unit"
            )
        rest = SkeinElement()
        for (m, b), c in sorted(cheb.items()):
            if b != top:
                rest = rest + SkeinElement.y_cheb(b, c).mul_x(m)
        rules[top] = _substitute((-rest).div_by_unit(lead[0]), rules)
    x4 = _substitute(handlebody.family_eval("X", 4, 0), rules)
    return ReductionRules(rules, x4)


def reduce(element):
    """Image of a handlebody element in the knot-exterior module.

    Linear, the identity on elements already in the basis, and undefined
    (DegreeTooHigh) above y-degree 6.
    """
    deg = element.y_degree()
    if deg > Y_REDUCIBLE_DEGREE:
        raise DegreeTooHigh(
            f"y-degree {deg} exceeds {Y_REDUCIBLE_DEGREE}; no rewrite rule for "
            f"S_{deg}(y)"
        )
    if deg <= Y_BASIS_DEGREE:
        return element
    return _substitute(element, derive_reductions().s_rules)


def validate(element):
    """Check the module basis invariant (y-exponents <= 3)."""
    if element.y_degree() > Y_BASIS_DEGREE:
        raise InvariantViolation(
            f"module element has y-degree {element.y_degree()} > {Y_BASIS_DEGREE}"
        )
    return element


def _reduced_x2yk(k):
    return reduce(SkeinElement.term(2, k))


@lru_cache(maxsize=None)
def _y1_power(k):
    """Y_1*y^k in the module (k <= 5; above that no identity applies)."""
    if 1 + k > Y_REDUCIBLE_DEGREE:
        raise DegreeTooHigh(f"Y_1*y^{k} has y-degree {1 + k}, no rewrite rule")
    return reduce(handlebody.family_eval("Y", 1, k))


@lru_cache(maxsize=None)
def _xj_power(j, k):
    """X_j*y^k in the module, climbing in-module when the handlebody value
    would exceed the reducible degree.

    The climb solves the index recursion for its highest y-power,

        X_j*y^k = t^2 X_{j+1}*y^{k-1} + t^-2 L_j*y^{k-1} + 2 x^2 y^{k-1}

    with L_1 = Y_1 and L_j = X_{j-1}, which only ever evaluates whole family
    elements (multiplying a reduced value by y is not available here: the
    rewrite rules do not commute with it).
    """
    if j + k <= Y_REDUCIBLE_DEGREE:
        return reduce(handlebody.family_eval("X", j, k))
    if j == 4:
        return _xj_power(3, k).scale(tpow(-4, -1)) - _reduced_x2yk(k).scale(tpow(-2))
    lower = _y1_power(k - 1) if j == 1 else _xj_power(j - 1, k - 1)
    return (
        _xj_power(j + 1, k - 1).scale(tpow(2))
        + lower.scale(tpow(-2))
        + _reduced_x2yk(k - 1).scale(2)
    )


def xj_power(j, p):
    """X_j*y^p in the module basis (1 <= j <= 4, 0 <= p <= 6)."""
    if not 1 <= j <= 4:
        raise InvariantViolation(f"j={j} out of range 1..4")
    if not 0 <= p <= Y_REDUCIBLE_DEGREE:
        raise InvariantViolation(f"p={p} out of range 0..{Y_REDUCIBLE_DEGREE}")
    return _xj_power(j, p)


def xj_action(j, k):
    """X_j*S_k(y) in the module basis (1 <= j <= 4, 0 <= k <= 6)."""
    if not 1 <= j <= 4:
        raise InvariantViolation(f"j={j} out of range 1..4")
    if not 0 <= k <= Y_REDUCIBLE_DEGREE:
        raise InvariantViolation(f"k={k} out of range 0..{Y_REDUCIBLE_DEGREE}")
    out = SkeinElement()
    for d, c in chebyshev.cheb_S(k).items():
        out = out + _xj_power(j, d).scale(c)
    return out


def y1_action(k):
    """Y_1*S_k(y) in the module basis."""
    out = SkeinElement()
    for d, c in chebyshev.cheb_S(k).items():
        out = out + _y1_power(d).scale(c)
    return out


@lru_cache(maxsize=None)
def _scheme():
    """The closed recursive scheme: M[j][k] = X_j*S_k(y) for k <= 6."""
    top = Y_REDUCIBLE_DEGREE

    def reduced_x2_Sk(k):
        e = SkeinElement()
        for d, c in chebyshev.cheb_S(k).items():
            e = e + SkeinElement.term(2, d, c)
        return reduce(e)

    N = {k: reduce(handlebody.family_on_S("Y", 1, k)) for k in range(top)}
    M = {j: {} for j in (1, 2, 3, 4)}
    for j in (1, 2, 3):
        M[j][0] = reduce(handlebody.family_eval("X", j, 0))

    def close_x4(k):
        M[4][k] = M[3][k].scale(tpow(-4, -1)) - reduced_x2_Sk(k).scale(tpow(-2))

    close_x4(0)
    for k in range(top):
        lower = {1: N[k], 2: M[1][k], 3: M[2][k]}
        for j in (1, 2, 3):
            prev = M[j][k - 1] if k >= 1 else SkeinElement()
            M[j][k + 1] = (
                M[j + 1][k].scale(tpow(2))
                + lower[j].scale(tpow(-2))
                - prev
                + reduced_x2_Sk(k).scale(2)
            )
        close_x4(k + 1)
    return M


def xj_action_scheme(j, k):
    """X_j*S_k(y) via the closed scheme; must agree with xj_action."""
    if not 1 <= j <= 4:
        raise InvariantViolation(f"j={j} out of range 1..4")
    if not 0 <= k <= Y_REDUCIBLE_DEGREE:
        raise InvariantViolation(f"k={k} out of range 0..{Y_REDUCIBLE_DEGREE}")
    return _scheme()[j][k]


def xj_power_scheme(j, p):
    """X_j*y^p via the scheme (used where the handlebody route cannot go)."""
    out = SkeinElement()
    for b, c in chebyshev.power_to_S({p: 1}).items():
        out = out + xj_action_scheme(j, b).scale(c)
    return out
