"""Consistency suites: module axioms, recursion cross-checks, mirrors,
and stored-fixture comparisons.

Each check returns a :class:`CheckResult`; a suite passes when every
result is ok.  Stored displays flagged ``suspected-typo`` never fail a
suite -- their diffs are recorded instead.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import boundary, fixtures, handlebody, knot_module, tables
from .bivariate import SkeinElement
from .errors import InvariantViolation
from .parsing import format_xy
from .torus import TorusElement

DEFAULT_SEED = 7

SUITES = ("axioms", "recursions", "mirrors", "fixtures")


@dataclass
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str = ""


def _check(suite, name, lhs, rhs) -> CheckResult:
    diff = lhs - rhs
    if diff.is_zero():
        return CheckResult(suite, name, True)
    return CheckResult(suite, name, False, f"difference: {format_xy(diff)}")


# -- axioms -------------------------------------------------------------------


def suite_axioms(trials: int = 100, seed: int = DEFAULT_SEED, engine=None):
    """Random (a.b).v = a.(b.v) trials plus peel-strategy agreement."""
    rng = random.Random(seed)
    engine = engine or boundary.default_engine()
    results = []
    for i in range(trials):
        p1, q1 = rng.randint(0, 3), rng.randint(-5, 5)
        p2, q2 = rng.randint(0, 3), rng.randint(-5, 5)
        n, k = rng.randint(0, 3), rng.randint(0, 3)
        a = TorusElement.curve(p1, q1)
        b = TorusElement.curve(p2, q2)
        v = SkeinElement.term(n, k)
        nested, flat = boundary.axiom_check(a, b, v, engine)
        results.append(
            _check(
                "axioms",
                f"associativity[{i}]: ({p1},{q1}),({p2},{q2}) on x^{n}*y^{k}",
                nested,
                flat,
            )
        )
    alt = boundary.ActionEngine(peel="s1")
    for i in range(20):
        p, q = rng.randint(2, 3), rng.randint(-5, 5)
        n, k = rng.randint(0, 3), rng.randint(0, 3)
        results.append(
            _check(
                "axioms",
                f"peel[{i}]: ({p},{q}) on x^{n}*y^{k}",
                engine.curve_on_basis(p, q, n, k),
                alt.curve_on_basis(p, q, n, k),
            )
        )
    return results


# -- recursions ---------------------------------------------------------------


def suite_recursions(engine=None):
    """Cross-checks between independent derivation routes."""
    results = []
    for i in range(2, 5):
        for k in range(7):
            results.append(
                _check(
                    "recursions",
                    f"X{i}*y^{k}: index ladder vs y-ladder",
                    handlebody.family_eval("X", i, k),
                    handlebody.family_eval_alt_X(i, k),
                )
            )
    for k in (0, 1, 2):
        reduced = knot_module.reduce(knot_module.vanishing_combination(k))
        results.append(
            CheckResult(
                "recursions",
                f"vanishing combination at y^{k} reduces to zero",
                reduced.is_zero(),
                "" if reduced.is_zero() else f"got {format_xy(reduced)}",
            )
        )
    for j in range(1, 5):
        for k in range(5):
            results.append(
                _check(
                    "recursions",
                    f"X{j}*S_{k}: direct reduction vs closed scheme",
                    knot_module.xj_action(j, k),
                    knot_module.xj_action_scheme(j, k),
                )
            )
    for j in range(7):
        lam = handlebody.loop_eigenvalue(j)
        sj = SkeinElement.y_cheb(j)
        results.append(
            _check(
                "recursions",
                f"E*S_{j} eigenvalue",
                handlebody.family_on_S("E", 0, j),
                sj.scale(lam),
            )
        )
        results.append(
            _check(
                "recursions",
                f"F*S_{j} eigenvalue",
                handlebody.family_on_S("F", 0, j),
                sj.scale(lam * lam),
            )
        )
        results.append(
            _check(
                "recursions",
                f"J*S_{j} eigenvalue",
                handlebody.family_on_S("J", 0, j),
                sj.scale(lam),
            )
        )
        for top, base in (("A", "B"), ("Abar", "Bbar"), ("G", "H")):
            results.append(
                _check(
                    "recursions",
                    f"{top}*S_{j} = eigenvalue * {base}*S_{j}",
                    handlebody.family_on_S(top, 0, j),
                    handlebody.family_on_S(base, 0, j).scale(lam),
                )
            )
    engine = engine or boundary.default_engine()
    from .laurent import tpow

    for q in range(-6, 4):
        for k in range(4):
            lhs = engine.curve_on_basis(1, q, 0, k).mul_x()
            rhs = engine.curve_on_basis(1, q + 1, 0, k).scale(
                tpow(-1)
            ) + engine.curve_on_basis(1, q - 1, 0, k).scale(tpow(1))
            results.append(
                _check(
                    "recursions",
                    f"ladder consistency at (1,{q}) on y^{k}",
                    lhs,
                    rhs,
                )
            )
    return results


# -- mirrors ------------------------------------------------------------------


def suite_mirrors():
    """Mirror image swaps the two crossing resolutions: t -> t^-1."""
    results = []
    for top, base in (("A", "Abar"), ("B", "Bbar")):
        for k in range(7):
            results.append(
                _check(
                    "mirrors",
                    f"mirror of {top}*y^{k} is {base}*y^{k}",
                    handlebody.bar_involution(handlebody.family_eval(top, 0, k)),
                    handlebody.family_eval(base, 0, k),
                )
            )
    for name, element in (
        ("X2*y", handlebody.family_eval("X", 2, 1)),
        ("C1*y^2", handlebody.family_eval("C", 1, 2)),
        ("G*y^3", handlebody.family_eval("G", 0, 3)),
    ):
        results.append(
            _check(
                "mirrors",
                f"mirror is an involution on {name}",
                handlebody.bar_involution(handlebody.bar_involution(element)),
                element,
            )
        )
    samples = [
        TorusElement.curve(1, -3) + TorusElement.curve(0, 2).scale(2),
        TorusElement.curve(2, 1),
        TorusElement.curve(3, -2) + TorusElement.unit(),
    ]
    for i, a in enumerate(samples):
        for j, b in enumerate(samples):
            lhs = a.mul(b).bar()
            rhs = b.bar().mul(a.bar())
            diff = lhs - rhs
            results.append(
                CheckResult(
                    "mirrors",
                    f"mirror anti-multiplicativity [{i},{j}]",
                    diff.is_zero(),
                )
            )
    return results


# -- fixtures -----------------------------------------------------------------


def suite_fixtures():
    """Compare every stored display and table against its recomputation."""
    results = []
    for group in fixtures.GROUPS:
        for r in fixtures.run_group(group):
            ok = r["matched"] or r["status"] == "suspected-typo"
            detail = ""
            if not r["matched"]:
                detail = (
                    f"[{r['status']}] recomputed {r['derived']}"
                    f" ; stored {r['expected']}"
                )
            results.append(
                CheckResult("fixtures", f"{group}: {r['name']}", ok, detail)
            )
    for kind in tables.KINDS:
        report = tables.compare_tables(
            tables.derived_table(kind), tables.printed_table(kind)
        )
        for e in report.entries:
            ok = e.status == "match" or e.printed_status == "suspected-typo"
            detail = ""
            if e.status == "mismatch":
                diff = ", ".join(
                    f"{tables.x_index_symbol(kind, int(i))}: {d}"
                    for i, d in sorted(e.difference.items(), key=lambda kv: int(kv[0]))
                )
                detail = f"[{e.printed_status}] difference {diff}"
            results.append(
                CheckResult(
                    "fixtures", f"{kind}[{e.k},{e.j}]", ok, detail
                )
            )
    return results


# -- runner -------------------------------------------------------------------


def run_suite(name: str, trials: int = 100, seed: int = DEFAULT_SEED):
    if name == "axioms":
        return suite_axioms(trials=trials, seed=seed)
    if name == "recursions":
        return suite_recursions()
    if name == "mirrors":
        return suite_mirrors()
    if name == "fixtures":
        return suite_fixtures()
    raise InvariantViolation(f"unknown suite {name!r}")


def failures(results):
    return [r for r in results if not r.ok]


def render(results) -> str:
    lines = []
    for r in results:
        mark = "ok  " if r.ok else "FAIL"
        line = f"{mark} {r.name}"
        if r.detail:
            line += f"  ({r.detail})"
        lines.append(line)
    bad = len(failures(results))
    lines.append(f"{len(results) - bad}/{len(results)} checks passed")
    return "\n".join(lines) + "\n"
