"""
Tests for verdicts, the suite registry and report rendering:
1. Outcomes of gated, ungated and suspect verdicts
2. Aggregated and matrix verdicts
3. Registering, resolving and calling suites; exceptions become errors
4. Text and JSON rendering of a run
"""

import json

import pytest

from utils.algebra import Element
from utils.config import KnownSuspect, VerifyConfig
from utils.reports import (
    DiscrepancyReport,
    RelationVerdict,
    SuiteResult,
    VerificationRun,
    aggregate,
    compare,
    matrix_verdict,
    relation_verdict,
    render_json,
    render_text,
)
from suites import rmatrix  # noqa: F401  (registers the suites)
from suites.registry import SuiteContext, SuiteNotFoundError, SuiteRegistry, registry


def _verdict(verdict: str, *, gated: bool = True, suspect: bool = False) -> RelationVerdict:
    return RelationVerdict(relation="r", expected="0", got="0", residual="0", verdict=verdict, gated=gated, suspect=suspect)


class TestOutcome:
    def test_plain(self):
        assert _verdict("match").outcome == "ok"
        assert _verdict("mismatch").outcome == "FAIL"
        assert not _verdict("mismatch").passed

    def test_suspect(self):
        assert _verdict("mismatch", suspect=True).outcome == "expected mismatch"
        assert _verdict("mismatch", suspect=True).passed
        assert _verdict("match", suspect=True).outcome == "unexpected match"
        assert not _verdict("match", suspect=True).passed

    def test_ungated(self):
        assert _verdict("mismatch", gated=False).outcome == "info"
        assert _verdict("mismatch", gated=False).passed


class TestBuilders:
    def test_relation_verdict(self):
        v = relation_verdict("x", 0, Element.word("a"), Element.word("a"))
        assert v.verdict == "mismatch"
        assert v.residual == "a"

    def test_compare_normalizes(self):
        v = compare("x", Element.word("a"), Element.word("a"), lambda e: e)
        assert v.verdict == "match"
        assert v.residual == "0"

    def test_aggregate(self):
        items = [_verdict("match"), RelationVerdict(relation="A6", expected="0", got="b", residual="b", verdict="mismatch")]
        folded = aggregate("all", items)
        assert folded.verdict == "mismatch"
        assert folded.residual == "A6: b"

    def test_matrix_verdict_labels(self):
        lhs = [[Element.word("a"), Element.zero()], [Element.zero(), Element.word("d")]]
        rhs = [[Element.word("a"), Element.zero()], [Element.zero(), Element.zero()]]
        v = matrix_verdict("m", lhs, rhs, lambda e: e, labels=["1", "2"])
        assert v.residual == "[2,2] d"

    def test_mark_suspects(self):
        report = DiscrepancyReport(suite="s", table="t", entries=[_verdict("mismatch")])
        report.mark_suspects(lambda suite, relation: suite == "s" and relation == "r")
        assert report.passed


class TestRegistry:
    def test_resolve(self):
        names = [s.name for s in registry.resolve("rmatrix")]
        assert "rmatrix.hecke" in names
        assert all(name.startswith("rmatrix.") for name in names)
        assert [s.name for s in registry.resolve("rmatrix.hecke")] == ["rmatrix.hecke"]

    def test_unknown(self):
        with pytest.raises(SuiteNotFoundError):
            registry.resolve("nowhere")

    def test_call_wraps_exceptions(self):
        local = SuiteRegistry()

        @local.suite("broken.suite")
        def broken(context: SuiteContext) -> DiscrepancyReport:
            """Always raises."""
            raise ValueError("boom")

        result = local.call("broken.suite")
        assert result.error == "ValueError: boom"
        assert not result.passed
        assert local.get("broken.suite").description == "Always raises."

    def test_call_marks_suspects(self):
        local = SuiteRegistry()

        @local.suite("demo.suite")
        def demo(context: SuiteContext) -> DiscrepancyReport:
            return DiscrepancyReport(suite="demo.suite", table="t", entries=[_verdict("mismatch")])

        config = VerifyConfig(known_suspects=[KnownSuspect(suite="demo.suite", relation="r")])
        result = local.call("demo.suite", SuiteContext(config=config))
        assert result.passed


class TestRendering:
    def _run(self) -> VerificationRun:
        report = DiscrepancyReport(suite="demo.suite", table="t", entries=[_verdict("match")], notes=["a note"])
        return VerificationRun(results=[SuiteResult[DiscrepancyReport](suite="demo.suite", result=report)])

    def test_text(self):
        text = render_text(self._run())
        assert "== demo.suite ==" in text
        assert "note: a note" in text
        assert "overall: PASS" in text

    def test_json(self):
        payload = json.loads(render_json(self._run()))
        assert payload["passed"] is True
        assert payload["results"][0]["result"]["entries"][0]["outcome"] == "ok"
