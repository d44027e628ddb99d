"""Skein families in the genus-2 handlebody quotient (z identified with x).

Elements are polynomials in x and y with Laurent coefficients.  Each family
below is a sequence of skeins "F * y^k" (the base skein with k parallel
copies of y) computed exactly from its defining recursion:

X/Y (coupled seed pair, then a three-term ladder in the index):
    X1*y^(k+1) = t^4 y (X1*y^k) + (t^-2 - t^6) (Y1*y^k) + 2(1 - t^4) x^2 y^k
    Y1*y^(k+1) = t^-4 y (Y1*y^k) + (t^2 - t^-6) (X1*y^k) + 2(1 - t^-4) x^2 y^k
    X1 = -t^4 y - t^2 x^2,   Y1 = -t^2 - t^-2
    X2*y^k     = t^2 y (X1*y^k) - t^4 (Y1*y^k) - 2 t^2 x^2 y^k
    X(i+2)*y^k = t^2 y (X(i+1)*y^k) - t^4 (X(i)*y^k) - 2 t^2 x^2 y^k

An alternative route trades index steps for y steps and is used as an
independent cross-check (family_eval_alt_X):
    X2*y^k     = t^-2 (X1*y^(k+1)) - 2 t^-2 x^2 y^k - t^-4 (Y1*y^k)
    X(i+2)*y^k = t^-2 (X(i+1)*y^(k+1)) - 2 t^-2 x^2 y^k - t^-4 (X(i)*y^k)

B/Bbar (coupled), with A/Abar diagonal over them in the S basis:
    B*y^k    = t^2 y (B*y^(k-1)) + (1 - t^-4) (Bbar*y^(k-1)),   B*y^0 = x
    Bbar*y^k = t^-2 y (Bbar*y^(k-1)) + (1 - t^4) (B*y^(k-1)),   Bbar*y^0 = x
    A*S_k(y)    = (-t^(2k+2) - t^(-2k-2)) B*S_k(y)
    Abar*S_k(y) = (-t^(2k+2) - t^(-2k-2)) Bbar*S_k(y)

C/D (coupled, index climbs as the power drops):
    C_j*y^k = t^2 (C_(j+1)*y^(k-1)) + (1 - t^-4) (D_j*y^(k-1))
    D_j*y^k = t^-2 (D_(j+1)*y^(k-1)) + (1 - t^4) (C_j*y^(k-1))
    C_j*y^0 = x * (Bbar*y^j)
    D_j*y^0 = t^-2 x (Bbar*y^j) + (1 - t^4) (E*y^j)

E/F/J diagonal, G diagonal over H:
    E*S_j(y) = (-t^(2j+2) - t^(-2j-2)) S_j(y)
    F*S_j(y) = (t^(2j+2) + t^(-2j-2))^2 S_j(y)
    J*S_k(y) = (-t^(2k+2) - t^(-2k-2)) S_k(y)
    H*y^k = t^2 y (H*y^(k-1)) + (1 - t^-4) (J*y^(k-1)),   H*y^0 = y
    G*S_k(y) = (-t^(2k+2) - t^(-2k-2)) H*S_k(y)

All evaluations are memoized; results are immutable, so the caches are safe
for concurrent readers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import chebyshev
from .bivariate import SkeinElement
from .errors import InvalidKey
from .laurent import LaurentPoly, tpow

FAMILIES = ("X", "Y", "A", "Abar", "B", "Bbar", "C", "D", "E", "F", "G", "H", "J")

_INDEXED = {"X", "C", "D"}


@dataclass(frozen=True)
class FamilyKey:
    """A skein-family member: family name, optional index, and y-power."""

    family: str
    index: int = 0
    power: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidKey(f"unknown family {self.family!r}")
        if self.power < 0:
            raise InvalidKey(f"negative power {self.power}")
        if self.family == "X" and self.index < 1:
            raise InvalidKey("X requires index >= 1")
        if self.family == "Y" and self.index != 1:
            raise InvalidKey("Y requires index 1")
        if self.family in ("C", "D") and self.index < 0:
            raise InvalidKey(f"{self.family} requires index >= 0")
        if self.family not in _INDEXED and self.family != "Y" and self.index != 0:
            raise InvalidKey(f"{self.family} takes no index")


def loop_eigenvalue(k):
    """-t^(2k+2) - t^(-2k-2), the diagonal scalar for S_k(y)."""
    return LaurentPoly({2 * k + 2: -1, -2 * k - 2: -1})


def _x2y(k, coeff):
    return SkeinElement.term(2, k, coeff)


@lru_cache(maxsize=None)
def _X1(k):
    if k == 0:
        return SkeinElement({(0, 1): tpow(4, -1), (2, 0): tpow(2, -1)})
    return (
        _X1(k - 1).mul_y().scale(tpow(4))
        + _Y1(k - 1).scale(tpow(-2) - tpow(6))
        + _x2y(k - 1, LaurentPoly({0: 2, 4: -2}))
    )


@lru_cache(maxsize=None)
def _Y1(k):
    if k == 0:
        return SkeinElement({(0, 0): LaurentPoly({2: -1, -2: -1})})
    return (
        _Y1(k - 1).mul_y().scale(tpow(-4))
        + _X1(k - 1).scale(tpow(2) - tpow(-6))
        + _x2y(k - 1, LaurentPoly({0: 2, -4: -2}))
    )


@lru_cache(maxsize=None)
def _X(i, k):
    if i == 1:
        return _X1(k)
    lower = _Y1(k) if i == 2 else _X(i - 2, k)
    return (
        _X(i - 1, k).mul_y().scale(tpow(2))
        - lower.scale(tpow(4))
        - _x2y(k, tpow(2, 2))
    )


@lru_cache(maxsize=None)
def _X_alt(i, k):
    """Alternate route for X_i*y^k (i >= 2): climbs in y instead of the index."""
    if i == 1:
        return _X1(k)
    lower = _Y1(k) if i == 2 else _X_alt(i - 2, k)
    return (
        _X_alt(i - 1, k + 1).scale(tpow(-2))
        - _x2y(k, tpow(-2, 2))
        - lower.scale(tpow(-4))
    )


@lru_cache(maxsize=None)
def _B(k):
    if k == 0:
        return SkeinElement.term(1, 0)
    return _B(k - 1).mul_y().scale(tpow(2)) + _Bbar(k - 1).scale(
        LaurentPoly({0: 1, -4: -1})
    )


@lru_cache(maxsize=None)
def _Bbar(k):
    if k == 0:
        return SkeinElement.term(1, 0)
    return _Bbar(k - 1).mul_y().scale(tpow(-2)) + _B(k - 1).scale(
        LaurentPoly({0: 1, 4: -1})
    )


def _on_S(fn, j):
    """fn applied to S_j(y), by linearity over the power expansion of S_j."""
    out = SkeinElement()
    for d, c in chebyshev.cheb_S(j).items():
        out = out + fn(d).scale(c)
    return out


def _diag_over(base_fn, k):
    """sum_j c_j * eigenvalue(j) * base_fn(S_j)  where y^k = sum_j c_j S_j(y)."""
    out = SkeinElement()
    for j, c in chebyshev.power_to_S({k: 1}).items():
        out = out + _on_S(base_fn, j).scale(loop_eigenvalue(j) * c)
    return out


@lru_cache(maxsize=None)
def _A(k):
    return _diag_over(_B, k)


@lru_cache(maxsize=None)
def _Abar(k):
    return _diag_over(_Bbar, k)


def _SyElement(d):
    return SkeinElement.term(0, d)


@lru_cache(maxsize=None)
def _E(k):
    return _diag_over(_SyElement, k)


@lru_cache(maxsize=None)
def _J(k):
    return _diag_over(_SyElement, k)


@lru_cache(maxsize=None)
def _F(k):
    out = SkeinElement()
    for j, c in chebyshev.power_to_S({k: 1}).items():
        lam = loop_eigenvalue(j)
        out = out + SkeinElement.y_cheb(j).scale(lam * lam * c)
    return out


@lru_cache(maxsize=None)
def _H(k):
    if k == 0:
        return SkeinElement.term(0, 1)
    return _H(k - 1).mul_y().scale(tpow(2)) + _J(k - 1).scale(
        LaurentPoly({0: 1, -4: -1})
    )


@lru_cache(maxsize=None)
def _G(k):
    return _diag_over(_H, k)


@lru_cache(maxsize=None)
def _C(j, k):
    if k == 0:
        return _Bbar(j).mul_x()
    return _C(j + 1, k - 1).scale(tpow(2)) + _D(j, k - 1).scale(
        LaurentPoly({0: 1, -4: -1})
    )


@lru_cache(maxsize=None)
def _D(j, k):
    if k == 0:
        return _Bbar(j).mul_x().scale(tpow(-2)) + _E(j).scale(
            LaurentPoly({0: 1, 4: -1})
        )
    return _D(j + 1, k - 1).scale(tpow(-2)) + _C(j, k - 1).scale(
        LaurentPoly({0: 1, 4: -1})
    )


_DISPATCH = {
    "X": lambda key: _X(key.index, key.power),
    "Y": lambda key: _Y1(key.power),
    "A": lambda key: _A(key.power),
    "Abar": lambda key: _Abar(key.power),
    "B": lambda key: _B(key.power),
    "Bbar": lambda key: _Bbar(key.power),
    "C": lambda key: _C(key.index, key.power),
    "D": lambda key: _D(key.index, key.power),
    "E": lambda key: _E(key.power),
    "F": lambda key: _F(key.power),
    "G": lambda key: _G(key.power),
    "H": lambda key: _H(key.power),
    "J": lambda key: _J(key.power),
}


def family_eval(key_or_family, index=None, power=None):
    """Evaluate a family member to a SkeinElement.

    Accepts a FamilyKey or (family, index, power) / (family, power) args:
    family_eval("X", 2, 1) and family_eval("G", 0) both work.
    """
    if isinstance(key_or_family, FamilyKey):
        key = key_or_family
    elif index is not None and power is not None:
        key = FamilyKey(key_or_family, index, power)
    else:
        key = FamilyKey(key_or_family, power=index or 0)
    return _DISPATCH[key.family](key)


def family_on_S(family, index, k):
    """Family member applied to S_k(y) instead of y^k."""
    return _on_S(lambda m: family_eval(FamilyKey(family, index, m)), k)


def family_eval_alt_X(i, k):
    """Independent evaluation route for X_i*y^k (requires i >= 2)."""
    if i < 2:
        raise InvalidKey("alternative X route needs index >= 2")
    return _X_alt(i, k)


def mul_basic(element, var):
    """Multiply by the generator x or y."""
    if var == "x":
        return element.mul_x()
    if var == "y":
        return element.mul_y()
    raise ValueError("var must be 'x' or 'y'")


def bar_involution(element):
    """Mirror image: t -> t^-1 on every coefficient (x, y are fixed)."""
    return element.bar()
