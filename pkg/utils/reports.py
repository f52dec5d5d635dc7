"""
Verdict models for the verification suites and their text/JSON rendering.
"""

from __future__ import annotations

import os
from logging import getLogger
from typing import Callable, Generic, Literal, Optional, Protocol, Sequence, TypeVar

from jinja2 import Environment, FileSystemLoader
from pydantic import BaseModel, computed_field

from utils.algebra import Element

logger = getLogger("glpq")

TEMPLATES_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "templates")

T = TypeVar("T")

Verdict = Literal["match", "mismatch"]


class Residual(Protocol):
    def is_zero(self) -> bool: ...


class RelationVerdict(BaseModel):
    relation: str
    expected: str
    got: str
    residual: str
    verdict: Verdict
    gated: bool = True
    suspect: bool = False
    note: Optional[str] = None

    @computed_field
    @property
    def outcome(self) -> str:
        if not self.gated:
            return "info"
        if self.suspect:
            return "expected mismatch" if self.verdict == "mismatch" else "unexpected match"
        return "ok" if self.verdict == "match" else "FAIL"

    @computed_field
    @property
    def passed(self) -> bool:
        if not self.gated:
            return True
        return (self.verdict == "mismatch") == self.suspect


class DiscrepancyReport(BaseModel):
    suite: str
    table: str
    entries: list[RelationVerdict] = []
    notes: list[str] = []

    def add(self, verdict: RelationVerdict) -> RelationVerdict:
        self.entries.append(verdict)
        return verdict

    def extend(self, verdicts: Sequence[RelationVerdict]) -> None:
        self.entries.extend(verdicts)

    def entry(self, relation: str) -> RelationVerdict:
        for verdict in self.entries:
            if verdict.relation == relation:
                return verdict
        raise KeyError(f"{self.suite} has no relation {relation!r}")

    def mark_suspects(self, is_suspect: Callable[[str, str], bool]) -> None:
        for verdict in self.entries:
            verdict.suspect = is_suspect(self.suite, verdict.relation)
            if verdict.gated and not verdict.passed:
                logger.warning(f"{self.suite}: {verdict.relation} {verdict.outcome}: residual {verdict.residual}")

    @computed_field
    @property
    def matched(self) -> int:
        return sum(1 for v in self.entries if v.verdict == "match")

    @computed_field
    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.entries)


class SuiteResult(BaseModel, Generic[T]):
    suite: str
    error: Optional[str] = None
    warning: Optional[str] = None
    result: Optional[T] = None

    @computed_field
    @property
    def passed(self) -> bool:
        if self.error is not None or self.result is None:
            return False
        return bool(getattr(self.result, "passed", True))


class VerificationRun(BaseModel):
    results: list[SuiteResult[DiscrepancyReport]] = []

    @computed_field
    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


# ---------------------------------------------------------------------------
# Building verdicts
# ---------------------------------------------------------------------------


def relation_verdict(
    relation: str,
    expected: object,
    got: object,
    residual: Residual,
    *,
    gated: bool = True,
    note: str | None = None,
) -> RelationVerdict:
    """Wrap already normalized values; the residual decides the verdict."""
    return RelationVerdict(
        relation=relation,
        expected=str(expected),
        got=str(got),
        residual=str(residual),
        verdict="match" if residual.is_zero() else "mismatch",
        gated=gated,
        note=note,
    )


def compare(
    relation: str,
    expected: Element,
    got: Element,
    normalizer: Callable[[Element], Element],
    *,
    gated: bool = True,
    note: str | None = None,
) -> RelationVerdict:
    """Normalize both sides and compare; the residual is expected - got."""
    e, g = normalizer(expected), normalizer(got)
    return relation_verdict(relation, e, g, e - g, gated=gated, note=note)


def matrix_verdict(
    relation: str,
    lhs: Sequence[Sequence[Element]],
    rhs: Sequence[Sequence[Element]],
    normalizer: Callable[[Element], Element],
    *,
    labels: Sequence[str] | None = None,
    gated: bool = True,
    note: str | None = None,
) -> RelationVerdict:
    """One verdict for a whole matrix equation; the residual lists the nonzero entries."""
    n = len(lhs)
    labels = labels or [str(i + 1) for i in range(n)]
    nonzero: list[str] = []
    for i in range(n):
        for j in range(len(lhs[i])):
            r = normalizer(lhs[i][j] - rhs[i][j])
            if not r.is_zero():
                nonzero.append(f"[{labels[i]},{labels[j]}] {r}")
    return RelationVerdict(
        relation=relation,
        expected=f"{n}x{n} left side",
        got=f"{n}x{n} right side",
        residual="; ".join(nonzero) if nonzero else "0",
        verdict="mismatch" if nonzero else "match",
        gated=gated,
        note=note,
    )


def aggregate(relation: str, verdicts: Sequence[RelationVerdict], *, gated: bool = True, note: str | None = None) -> RelationVerdict:
    """Fold per-item verdicts into one; the residual names the mismatching items."""
    failed = [v for v in verdicts if v.verdict == "mismatch"]
    return RelationVerdict(
        relation=relation,
        expected=f"{len(verdicts)} relations preserved",
        got=f"{len(verdicts) - len(failed)} relations preserved",
        residual="; ".join(f"{v.relation}: {v.residual}" for v in failed) if failed else "0",
        verdict="mismatch" if failed else "match",
        gated=gated,
        note=note,
    )


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def _environment() -> Environment:
    return Environment(
        loader=FileSystemLoader(TEMPLATES_DIR),
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
    )


def render_text(run: VerificationRun) -> str:
    template = _environment().get_template("report.txt.j2")
    return template.render(run=run)


def render_json(run: VerificationRun) -> str:
    return run.model_dump_json(indent=2)
