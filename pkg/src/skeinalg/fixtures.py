"""Stored reference expansions and the machinery to re-derive them.

Each fixture names one displayed expansion from the reference source,
the recursion inputs needed to recompute it, and a status:

  * ``expected-match``  -- the recomputation should reproduce it exactly;
  * ``suspected-typo``  -- the display looks garbled; the recomputed
    value is recorded as authoritative and the diff is kept visible.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from . import handlebody, knot_module
from .errors import InvariantViolation
from .parsing import format_xy, parse_xy

GROUPS = ("handlebody", "knot_module")


@lru_cache(maxsize=None)
def load_fixtures(group: str):
    if group not in GROUPS:
        raise InvariantViolation(f"unknown fixture group {group!r}")
    path = resources.files("skeinalg").joinpath(f"data/{group}/fixtures.json")
    payload = json.loads(path.read_text())
    return tuple(payload["fixtures"])


def evaluate_fixture(group: str, fixture: dict):
    """Recompute the element a fixture describes, from the recursions."""
    if group == "handlebody":
        return handlebody.family_eval(
            fixture["family"], fixture.get("index", 0), fixture["power"]
        )
    kind = fixture["kind"]
    if kind == "reduction":
        return knot_module.derive_reductions().rule(fixture["target"])
    if kind == "x4_expansion":
        return knot_module.derive_reductions().x4
    if kind == "xj_on_S":
        return knot_module.xj_action(fixture["j"], fixture["k"])
    raise InvariantViolation(f"unknown fixture kind {kind!r}")


def compare_fixture(group: str, fixture: dict) -> dict:
    derived = evaluate_fixture(group, fixture)
    expected = parse_xy(fixture["expected"])
    difference = derived - expected
    return {
        "name": fixture["name"],
        "status": fixture.get("status", "expected-match"),
        "note": fixture.get("note", ""),
        "matched": difference.is_zero(),
        "derived": format_xy(derived),
        "expected": format_xy(expected),
        "difference": format_xy(difference),
    }


def run_group(group: str):
    return [compare_fixture(group, fixture) for fixture in load_fixtures(group)]


def summarize(results) -> str:
    lines = []
    for r in results:
        if r["matched"]:
            lines.append(f"  {r['name']}: match")
            continue
        tag = "MISMATCH" if r["status"] == "expected-match" else r["status"]
        lines.append(f"  {r['name']}: {tag}")
        if r["note"]:
            lines.append(f"    note: {r['note']}")
        lines.append(f"    recomputed: {r['derived']}")
        lines.append(f"    stored:     {r['expected']}")
        lines.append(f"    difference: {r['difference']}")
    matched = sum(1 for r in results if r["matched"])
    lines.append(f"  {matched}/{len(results)} fixtures match")
    return "\n".join(lines) + "\n"


def unexpected_mismatches(results):
    return [
        r for r in results if not r["matched"] and r["status"] == "expected-match"
    ]
