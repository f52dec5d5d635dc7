"""
Tests for the shipped rule tables:
1. Named lookup, and the error for an unknown name
2. Every exchange rule becomes a graded commutation at p = q = 1
3. The left calculus and the mixed plane rules
4. Relabelled tables keep their shape
"""

import pytest

from utils import rules
from utils.algebra import Element
from utils.parser import parse
from utils.rewrite import normalize
from utils.scalars import Scalar


class TestLookup:
    def test_named(self):
        assert rules.rule_set("RS_A").name == "RS_A"
        assert len(rules.rule_set("RS_A")) == 8

    def test_unknown(self):
        with pytest.raises(KeyError):
            rules.rule_set("RS_NOPE")

    def test_axiom_sets_are_named(self):
        assert set(rules.AXIOM_SETS) <= set(rules.NAMED_SETS)


class TestClassicalLimit:
    def test_presentation(self, rs_a):
        limited = rs_a.map_coefficients(Scalar.classical_limit)
        assert all(rules.is_graded_commutation(r) for r in limited)

    def test_exchange_with_correction(self, rs_a):
        a8 = [r for r in rs_a.map_coefficients(Scalar.classical_limit) if r.id == "A8"][0]
        assert a8.rhs == Element.word("d", "a")

    def test_odd_swap_sign(self, rs_a):
        a5 = [r for r in rs_a.map_coefficients(Scalar.classical_limit) if r.id == "A5"][0]
        assert a5.rhs == Element.word("g", "b", coefficient=-1)


class TestCalculus:
    def test_differential_moves_right(self, left_calculus):
        assert normalize(parse("dLb*a"), left_calculus) == parse("p*a*dLb")
        assert normalize(parse("dLa*a"), left_calculus) == parse("p*q*a*dLa")

    def test_differentials_anticommute(self, left_calculus):
        assert normalize(parse("dLa*dLa"), left_calculus).is_zero()
        assert normalize(parse("dLa*dLd + dLd*dLa"), left_calculus).is_zero()


class TestPlane:
    def test_plane(self, plane_mixed):
        assert normalize(parse("x*th"), plane_mixed) == parse("p*th*x")
        assert normalize(parse("th*th"), plane_mixed).is_zero()

    def test_mixed(self, plane_mixed):
        assert normalize(parse("x*y"), plane_mixed) == parse("p*y*x + (p*q - 1)*ph*th")
        assert normalize(parse("th*ph"), plane_mixed) == parse("-q*ph*th")


class TestRelabel:
    def test_right_differential_pairs(self):
        dd_r = rules.rs_dd_r()
        assert [r.id for r in dd_r.rules][:2] == ["DR1", "DR2"]
        assert dd_r.rule("DR1").lhs == ("dRa", "dRb")
