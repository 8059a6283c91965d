"""Structured pass/fail results for identity checks."""

from __future__ import annotations

import time
from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of one exact identity check.

    witness is present exactly when the check failed and holds the first
    mismatching coordinate together with both exact values.
    """

    check: str
    params: dict
    passed: bool
    witness: dict | None = None
    ms: float = 0.0
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed


def equality_report(check: str, params: dict, lhs, rhs, t0=None) -> Report:
    """Compare two matrices entry by entry and package the outcome."""
    from .linalg import first_mismatch

    loc = first_mismatch(lhs, rhs)
    if loc is None:
        rep = Report(check, params, True)
    else:
        i, j, a, b = loc
        rep = Report(
            check,
            params,
            False,
            witness={"coords": [i, j], "lhs": a, "rhs": b},
        )
    if t0 is not None:
        rep.ms = (time.perf_counter() - t0) * 1000.0
    return rep


def aggregate_report(check: str, params: dict, subreports, t0=None) -> Report:
    """Combine named subchecks; fails if any subcheck fails."""
    rep = Report(
        check,
        params,
        all(r.passed for r in subreports),
        details={"checks": list(subreports)},
    )
    for r in subreports:
        if not r.passed:
            rep.witness = {"failed": r.check, **(r.witness or {})}
            break
    if t0 is not None:
        rep.ms = (time.perf_counter() - t0) * 1000.0
    return rep
