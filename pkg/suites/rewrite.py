"""
Audits of the rewrite tables themselves: local confluence, independence of
the rewriting strategy, and the classical limit.
"""

from __future__ import annotations

import random
import re
from logging import getLogger

from utils import rules
from utils.algebra import Element, Word
from utils.reports import DiscrepancyReport, RelationVerdict
from utils.rewrite import RewriteRule, RuleSet, critical_pairs, normalize, random_normalize
from utils.scalars import Scalar
from suites.registry import SuiteContext, registry

logger = getLogger("glpq")

CONFLUENCE_SETS = (
    "RS_A",
    "functions",
    "left_calculus",
    "right_calculus",
    "right_derivatives",
    "left_derivatives",
    "RS_PLANE",
    "plane_mixed",
)

ORACLE_SETS = (
    "RS_A",
    "functions",
    "left_calculus",
    "right_calculus",
    "right_derivatives",
    "left_derivatives",
    "plane_mixed",
)

MAX_ORACLE_WORD = 5

# Function-derivative rules have a constant term and never reduce to a bare
# graded swap, so they stay out of the classical-limit audit.
CLASSICAL_SETS = ("RS_A", "RS_DD", "RS_DD_R", "RS_LDIFF", "RS_RDIFF", "RS_PDERIV", "plane_mixed")
WEYL_RULE = re.compile(r"(PR|PL)\d+")


@registry.suite("rewrite.confluence")
def confluence(context: SuiteContext) -> DiscrepancyReport:
    """Every critical pair of the shipped working sets resolves."""
    report = DiscrepancyReport(suite="rewrite.confluence", table="critical pairs")
    for name in CONFLUENCE_SETS:
        rs = rules.rule_set(name)
        audit = critical_pairs(rs, context.settings.overlap_length, context.settings.step_limit)
        unresolved = audit.unresolved()
        residual = "; ".join(f"{o.first}/{o.second} on {'*'.join(o.word)}: {o.residual}" for o in unresolved)
        report.add(
            RelationVerdict(
                relation=f"confluence.{name}",
                expected=f"{len(audit.overlaps)} overlaps resolved",
                got=f"{len(audit.overlaps) - len(unresolved)} overlaps resolved",
                residual=residual or "0",
                verdict="mismatch" if unresolved else "match",
            )
        )
    report.notes.append(f"overlap words of at most {context.settings.overlap_length} symbols")
    return report


def _random_word(rng: random.Random, alphabet: list[str]) -> Word:
    return tuple(rng.choice(alphabet) for _ in range(rng.randint(1, MAX_ORACLE_WORD)))


def strategy_disagreements(rs: RuleSet, samples: int, rng: random.Random, step_limit: int) -> list[tuple[Word, Element]]:
    """Words whose leftmost-first and random-redex normal forms differ."""
    alphabet = list(rs.rank)
    disagreements = []
    for _ in range(samples):
        word = _random_word(rng, alphabet)
        e = Element([(word, 1)])
        residual = normalize(e, rs, step_limit) - random_normalize(e, rs, rng, step_limit)
        if not residual.is_zero():
            disagreements.append((word, residual))
    return disagreements


@registry.suite("rewrite.oracle")
def oracle(context: SuiteContext) -> DiscrepancyReport:
    """Random words normalize to the same form under a random redex strategy."""
    settings = context.settings
    rng = random.Random(settings.oracle_seed)
    report = DiscrepancyReport(suite="rewrite.oracle", table="randomized strategy")
    for name in ORACLE_SETS:
        rs = rules.rule_set(name)
        found = strategy_disagreements(rs, settings.oracle_samples, rng, settings.step_limit)
        report.add(
            RelationVerdict(
                relation=f"oracle.{name}",
                expected=f"{settings.oracle_samples} agreeing words",
                got=f"{settings.oracle_samples - len(found)} agreeing words",
                residual="; ".join(f"{'*'.join(w)}: {r}" for w, r in found[:5]) or "0",
                verdict="mismatch" if found else "match",
            )
        )
    report.notes.append(f"seed {settings.oracle_seed}, words of 1 to {MAX_ORACLE_WORD} symbols")
    return report


@registry.suite("rewrite.classical")
def classical(context: SuiteContext) -> DiscrepancyReport:
    """At p = q = 1 every exchange rule becomes a graded commutation."""
    report = DiscrepancyReport(suite="rewrite.classical", table="classical limit")
    for name in CLASSICAL_SETS:
        limited = rules.rule_set(name).map_coefficients(Scalar.classical_limit)
        report.add(_classical_verdict(f"classical.{name}", limited))
    report.add(_classical_verdict("classical.RS_LDERIV", rules.rs_lderiv().map_coefficients(Scalar.classical_limit)))
    return report


def _classical_verdict(relation: str, limited: list[RewriteRule]) -> RelationVerdict:
    limited = [r for r in limited if not WEYL_RULE.fullmatch(r.id)]
    failing = [r for r in limited if not rules.is_graded_commutation(r)]
    return RelationVerdict(
        relation=relation,
        expected=f"{len(limited)} graded commutations",
        got=f"{len(limited) - len(failing)} graded commutations",
        residual="; ".join(r.to_text() for r in failing) or "0",
        verdict="mismatch" if failing else "match",
    )
