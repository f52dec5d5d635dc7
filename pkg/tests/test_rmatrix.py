"""
Tests for the R-matrix suites:
1. Hecke, inverse and braid identities, and the specializations of R̂
2. Convention calibration, conjugate conventions and the frozen convention
3. Covariance of the superplane and its dual
4. The Leibniz check on the mixed plane, left and right
5. RTT entries and the span of the presentation relations
6. The R-matrix form of the left calculus (slow)
"""

import pytest

from utils.algebra import Element
from utils.config import VerifyConfig
from utils.scalars import Scalar
from utils.supermatrix import CONVENTIONS, ConventionCalibrationFailed
from suites.registry import SuiteContext, registry
from suites.rmatrix import (
    calculus_from_r_check,
    calibrate,
    calibration_classes,
    conjugate_conventions,
    covariance_check,
    frozen_convention,
    hecke_and_braid_check,
    leibniz_check,
    rtt_check,
    vector_form_check,
)

P, Q = Scalar.p(), Scalar.q()


def _by_relation(verdicts):
    return {v.relation: v for v in verdicts}


class TestHecke:
    def test_identities(self):
        verdicts, _ = hecke_and_braid_check(CONVENTIONS["super"])
        found = _by_relation(verdicts)
        for relation in ("hecke", "inverse", "inverse.left", "braid.super", "classical-limit", "one-parameter"):
            assert found[relation].verdict == "match"

    def test_conventions_agree_on_rhat(self):
        verdicts, notes = hecke_and_braid_check(CONVENTIONS["super"])
        assert "braid.ungraded" not in _by_relation(verdicts)
        assert notes

    def test_suite_passes(self):
        result = registry.call("rmatrix.hecke", SuiteContext())
        assert result.error is None
        assert result.passed


class TestCalibration:
    def test_graded_conventions_pass(self):
        assert calibrate() == ["super", "super-transposed"]

    def test_graded_conventions_form_one_class(self):
        assert calibration_classes(calibrate()) == [["super", "super-transposed"]]

    def test_ungraded_is_not_conjugate(self):
        assert conjugate_conventions(CONVENTIONS["super"], CONVENTIONS["super-transposed"])
        assert not conjugate_conventions(CONVENTIONS["super"], CONVENTIONS["ungraded"])

    def test_recorded(self):
        assert frozen_convention(VerifyConfig()).name == "super"

    def test_unrecorded_calibrates(self):
        assert frozen_convention(VerifyConfig(kronecker_convention=None)).name == "super"

    def test_unknown(self):
        with pytest.raises(ConventionCalibrationFailed):
            frozen_convention(VerifyConfig(kronecker_convention="sideways"))


class TestPlane:
    def test_covariance(self):
        assert all(v.verdict == "match" for v in covariance_check())

    def test_vector_forms(self):
        found = _by_relation(vector_form_check())
        assert found["vector.plane"].verdict == "match"
        assert found["vector.mixed"].verdict == "match"

    def test_left_leibniz_residual(self):
        found = _by_relation(leibniz_check("left"))
        assert found["leibniz.left.x-th"].verdict == "mismatch"
        assert found["leibniz.left.x-th"].residual == str(Element.word("ph", "th", coefficient=2 * P * Q - 2))
        assert found["leibniz.left.th-th"].verdict == "match"

    def test_right_leibniz(self):
        assert all(v.verdict == "match" for v in leibniz_check("right"))


class TestRTT:
    def test_entries_and_span(self):
        found = _by_relation(rtt_check(VerifyConfig()))
        assert found["calibration.frozen"].verdict == "match"
        assert found["calibration.equivalence"].verdict == "match"
        assert found["calibration.ungraded"].verdict == "mismatch"
        assert found["calibration.super-transposed"].verdict == "match"
        entries = [v for name, v in found.items() if name.startswith("entry.")]
        assert len(entries) == 16
        assert all(v.verdict == "match" for v in entries)
        for rule_id in ("A1", "A5", "A6", "A8"):
            assert found[f"span.{rule_id}"].verdict == "match"

    def test_recorded_transposed_convention(self):
        found = _by_relation(rtt_check(VerifyConfig(kronecker_convention="super-transposed")))
        assert found["calibration.frozen"].got == "super-transposed"
        assert found["calibration.frozen"].verdict == "match"

    def test_unpassing_record_is_flagged(self):
        found = _by_relation(rtt_check(VerifyConfig(kronecker_convention="ungraded")))
        assert found["calibration.frozen"].verdict == "mismatch"
        assert found["calibration.frozen"].got == "super"


@pytest.mark.slow
class TestCalculusFromR:
    @pytest.mark.parametrize("name", ["super", "super-transposed"])
    def test_every_relation_holds(self, name):
        found = _by_relation(calculus_from_r_check(CONVENTIONS[name]))
        assert set(found) == {
            "differential-rtt",
            "differential-rtt.sign-carried",
            "differential-second-leg",
            "two-form-rtt",
            "oneform-function",
            "oneform-differential",
            "oneform-oneform",
        }
        assert all(v.verdict == "match" for v in found.values()), {n: v.residual for n, v in found.items()}

    def test_suite_passes(self):
        result = registry.call("rmatrix.calculus", SuiteContext())
        assert result.error is None
        assert result.passed
