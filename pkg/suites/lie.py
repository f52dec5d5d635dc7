"""
Quantum Lie algebra suites: brackets of the vector fields and their exchange
with the matrix entries, both evaluated in the derivative realization.
"""

from __future__ import annotations

from utils.differentials import SIDES, Side, derivative_rules, vector_fields
from utils.parser import parse
from utils.reports import DiscrepancyReport, RelationVerdict, compare
from utils.rewrite import normalize
from suites import tables
from suites.registry import SuiteContext, registry

BRACKETS = {
    "left": (("lie", tables.LIE_LEFT), ("lie-xy", tables.LIE_XY_LEFT)),
    "right": (("lie", tables.LIE_RIGHT), ("lie-xy", tables.LIE_XY_RIGHT)),
}

MODULE = {"left": tables.MODULE_LEFT, "right": tables.MODULE_RIGHT}


def realized_verdicts(table: str, text: str, side: Side) -> list[RelationVerdict]:
    """Expand T1, T2, Np, Nm, X, Y into derivatives and compare normal forms."""
    fields = vector_fields(side)
    rs = derivative_rules(side)
    return [
        compare(f"{table}.{side}.{rid}", parse(rhs, fields), parse(lhs, fields), lambda e: normalize(e, rs))
        for rid, lhs, rhs in tables.relations(text)
    ]


@registry.suite("calculus.lie")
def brackets(context: SuiteContext) -> DiscrepancyReport:
    """Commutation relations of the quantum Lie algebra generators."""
    report = DiscrepancyReport(suite="calculus.lie", table="quantum Lie algebra")
    for side in SIDES:
        for table, text in BRACKETS[side]:
            report.extend(realized_verdicts(table, text, side))
    return report


@registry.suite("calculus.module")
def module(context: SuiteContext) -> DiscrepancyReport:
    """Exchange of the vector fields with the matrix entries, and the nilpotency consistency lines."""
    report = DiscrepancyReport(suite="calculus.module", table="vector fields and functions")
    for side in SIDES:
        report.extend(realized_verdicts("module", MODULE[side], side))
    return report
