"""Chebyshev-like polynomial bases T_n and S_n.

T_0 = 2, T_1 = x, T_{n+1} = x*T_n - T_{n-1}   (trace/power-sum basis)
S_0 = 1, S_1 = x, S_{n+1} = x*S_n - S_{n-1}   (the basis the results live in)

Univariate polynomials here are plain dicts {degree: coefficient}; the
coefficient type just needs +, -, * (ints or LaurentPoly both work).
"""

from __future__ import annotations

from functools import lru_cache


def upoly_add(p, q):
    out = dict(p)
    for d, c in q.items():
        s = out.get(d, 0) + c
        if s:
            out[d] = s
        else:
            out.pop(d, None)
    return out


def upoly_mul(p, q):
    out = {}
    for d1, c1 in p.items():
        for d2, c2 in q.items():
            d = d1 + d2
            s = out.get(d, 0) + c1 * c2
            if s:
                out[d] = s
            else:
                out.pop(d, None)
    return out


@lru_cache(maxsize=None)
def _cheb(kind, n):
    if n == 0:
        return ((0, 2),) if kind == "T" else ((0, 1),)
    if n == 1:
        return ((1, 1),)
    prev2 = dict(_cheb(kind, n - 2))
    prev1 = dict(_cheb(kind, n - 1))
    cur = upoly_add(upoly_mul({1: 1}, prev1), {d: -c for d, c in prev2.items()})
    return tuple(sorted(cur.items()))


def cheb_T(n):
    """T_n in the power basis, as {degree: int}."""
    if n < 0:
        raise ValueError("negative Chebyshev index")
    return dict(_cheb("T", n))


def cheb_S(n):
    """S_n in the power basis, as {degree: int}.  S_{-1} is the zero polynomial."""
    if n == -1:
        return {}
    if n < -1:
        raise ValueError("Chebyshev S index below -1")
    return dict(_cheb("S", n))


def power_to_S(p):
    """Rewrite {degree: coeff} in the S basis, returning {index: coeff}.

    Exact: repeatedly strips the top degree with the matching S polynomial.
    """
    work = {d: c for d, c in p.items() if c}
    out = {}
    while work:
        d = max(work)
        c = work.pop(d)
        out[d] = c
        for e, ic in cheb_S(d).items():
            if e == d:
                continue
            s = work.get(e, 0) + c * (-ic)
            if s:
                work[e] = s
            else:
                work.pop(e, None)
    return out


def S_to_power(p):
    """Inverse of power_to_S: {index: coeff} -> {degree: coeff}."""
    out = {}
    for idx, c in p.items():
        for d, ic in cheb_S(idx).items():
            s = out.get(d, 0) + c * ic
            if s:
                out[d] = s
            else:
                out.pop(d, None)
    return out


def S_product(m, n):
    """Indices in the expansion S_m * S_n = sum of S_j.

    j runs over m+n, m+n-2, ..., |m-n| (each with multiplicity one).
    """
    if m < 0 or n < 0:
        raise ValueError("negative Chebyshev index")
    return list(range(m + n, abs(m - n) - 1, -2))
