"""
Tests for the Hopf suites on the left differential algebra:
1. The antipode on differentials, as printed and from the Leibniz rule
2. Counit and coaction identities
3. The extended suite passes once the shipped suspects are applied
"""

import pytest

from utils import rules
from utils.config import DEFAULT_SUSPECTS, VerifyConfig
from utils.costructure import matrix_costructure
from suites.hopf import extended_checks
from suites.registry import SuiteContext, registry


@pytest.fixture(scope="module")
def found():
    cs = matrix_costructure(rules.left_calculus())
    return {v.relation: v for v in extended_checks(cs)}


@pytest.mark.slow
class TestExtended:
    @pytest.mark.parametrize("ds", ["dLa", "dLb", "dLg", "dLd"])
    def test_leibniz_antipode_forms(self, found, ds):
        assert found[f"antipode-forms.leibniz.{ds}"].verdict == "match"

    @pytest.mark.parametrize("ds", ["dLa", "dLb", "dLg", "dLd"])
    def test_printed_antipode_forms(self, found, ds):
        assert found[f"antipode-forms.{ds}"].verdict == "mismatch"

    def test_counit_vanishes_on_differentials(self, found):
        for ds in ("dLa", "dLb", "dLg", "dLd"):
            assert found[f"counit.{ds}"].verdict == "match"
        assert found["counit.relations"].verdict == "match"

    def test_graded_coactions_are_multiplicative(self, found):
        assert found["coaction-product.right.graded"].verdict == "match"
        assert found["coaction-product.left.graded"].verdict == "match"

    def test_suite_passes(self):
        context = SuiteContext(config=VerifyConfig(known_suspects=DEFAULT_SUSPECTS))
        result = registry.call("hopf.extended", context)
        assert result.error is None
        assert result.passed
