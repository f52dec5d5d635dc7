"""
Tests for the rewrite engine:
1. Normalization with the presentation relations
2. Local confluence of the presentation relations and every working rule set
3. The random-redex strategy agrees with leftmost rewriting
4. Step limits and rule-set validation
5. Inverse completion for a⁻¹ and d⁻¹
6. The id | lhs | rhs text form
"""

import random

import pytest

from utils import rules
from utils.algebra import Element
from utils.parser import parse
from utils.rewrite import (
    InvalidRuleSet,
    RewriteError,
    RewriteRule,
    RuleSet,
    StepLimitExceeded,
    critical_pairs,
    normalize,
    random_normalize,
)
from suites.rewrite import CONFLUENCE_SETS


class TestNormalize:
    def test_diagonal_exchange(self, rs_a):
        assert normalize(parse("a*d"), rs_a) == parse("d*a + (p - q^-1)*g*b")

    def test_odd_squares_vanish(self, rs_a):
        assert normalize(parse("b*b"), rs_a).is_zero()
        assert normalize(parse("a*g*g"), rs_a).is_zero()

    def test_longer_word(self, rs_a):
        assert normalize(parse("a*b*a"), rs_a) == parse("q*b*a*a")

    def test_idempotent(self, rs_a):
        once = normalize(parse("a*d*b*g + d*a*a*b"), rs_a)
        assert normalize(once, rs_a) == once

    def test_unranked_symbol(self, rs_a):
        with pytest.raises(RewriteError):
            normalize(parse("dLa*a"), rs_a)


class TestConfluence:
    def test_presentation_is_confluent(self, rs_a):
        report = critical_pairs(rs_a)
        assert report.overlaps
        assert report.confluent

    def test_bound_too_small(self, rs_a):
        with pytest.raises(ValueError):
            critical_pairs(rs_a, max_length=2)

    def test_left_derivatives_are_confluent(self):
        report = critical_pairs(rules.rule_set("left_derivatives"))
        assert report.overlaps
        assert report.confluent

    @pytest.mark.slow
    @pytest.mark.parametrize("name", CONFLUENCE_SETS)
    def test_working_sets_are_confluent(self, name):
        report = critical_pairs(rules.rule_set(name))
        assert report.confluent, [o.residual for o in report.unresolved()]


class TestRandomStrategy:
    def test_agrees_with_leftmost(self, rs_a):
        rng = random.Random(7)
        e = parse("a*d*b*g + d*a*a*b - g*d*a*d")
        assert random_normalize(e, rs_a, rng) == normalize(e, rs_a)


class TestValidation:
    def test_step_limit(self):
        fresh = RuleSet.from_text(rules.RS_A_TEXT, name="fresh", rank=rules.FUNCTION_RANK)
        with pytest.raises(StepLimitExceeded):
            normalize(parse("a*d*a*d"), fresh, step_limit=1)

    def test_malformed_line(self):
        with pytest.raises(InvalidRuleSet):
            RuleSet.from_text("A1 | a*b\n", rank=rules.FUNCTION_RANK)

    def test_missing_rank(self):
        with pytest.raises(InvalidRuleSet):
            RuleSet.from_text("A1 | a*b | q*b*a\n")

    def test_inhomogeneous_rule(self):
        with pytest.raises(InvalidRuleSet):
            RuleSet("bad", [RewriteRule("X", ("a", "b"), Element.word("a"))], rules.FUNCTION_RANK)

    def test_sorted_lhs_rejected(self):
        with pytest.raises(InvalidRuleSet):
            RuleSet("bad", [RewriteRule("X", ("g", "a"), Element.word("g", "a"))], rules.FUNCTION_RANK)

    def test_duplicate_lhs(self):
        rule = RewriteRule("A6", ("b", "b"), Element.zero())
        with pytest.raises(InvalidRuleSet):
            RuleSet("bad", [rule, rule], rules.FUNCTION_RANK)


class TestInverses:
    def test_units(self, functions):
        assert normalize(parse("a*ai"), functions) == Element.one()
        assert normalize(parse("di*d"), functions) == Element.one()

    def test_inverse_exchange(self, functions):
        assert normalize(parse("ai*b"), functions) == parse("q^-1*b*ai")


class TestTextForm:
    def test_reads_back(self, rs_a):
        again = RuleSet.from_text(rs_a.to_text())
        assert again.name == "RS_A"
        assert again.rank_order == rs_a.rank_order
        assert again.rules == rs_a.rules

    def test_rule_line(self, rs_a):
        assert rs_a.rule("A1").to_text() == "A1 | a*b | q*b*a"
