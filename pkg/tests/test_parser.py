"""
Tests for the expression parser and canonical printer:
1. Sums, products, parameters and rational literals
2. Powers of generators expand to repeated words; nothing is normalized
3. Negative powers only on p, q and the formal inverses
4. Errors carry the offending position
5. Greek aliases and macros
6. Printing canonical forms and reading them back
"""

from fractions import Fraction

import pytest

from utils.algebra import Element
from utils.parser import IllegalInverse, ParseError, UnknownSymbol, format_element, parse, parse_word
from utils.scalars import Scalar

P, Q = Scalar.p(), Scalar.q()


class TestGrammar:
    def test_two_terms(self):
        e = parse("a*b - q*b*a")
        assert len(e) == 2
        assert e.coefficient(("b", "a")) == -Q

    def test_whitespace_insensitive(self):
        assert parse("a * b-q*b *a") == parse("a*b - q*b*a")

    def test_coefficient_with_parameters(self):
        e = parse("p^-1*q^-1*(p*q-1)^2 * dLd")
        assert e == Element.word("dLd", coefficient=(P * Q - 1) * (P * Q - 1) * (P * Q).inverse())

    def test_rational_literal(self):
        assert parse("1/2*a") == Element.word("a", coefficient=Fraction(1, 2))

    def test_leading_minus(self):
        assert parse("-a + a").is_zero()


class TestPowers:
    def test_generator_power_is_a_word(self):
        assert parse("b^2") == Element.word("b", "b")

    def test_inverse_power(self):
        assert parse("ai^-1") == Element.word("a")
        assert parse("di^-2") == Element.word("d", "d")

    def test_parameter_inverse(self):
        assert parse("q^-2") == Element.scalar(Q ** -2)

    def test_non_invertible_generator(self):
        with pytest.raises(IllegalInverse):
            parse("b^-1")


class TestErrors:
    def test_unknown_symbol(self):
        with pytest.raises(UnknownSymbol) as info:
            parse("a*zz")
        assert info.value.position == 2

    def test_unbalanced(self):
        with pytest.raises(ParseError):
            parse("(a + b")

    def test_bad_character(self):
        with pytest.raises(ParseError) as info:
            parse("a & b")
        assert info.value.position == 2

    def test_fractional_exponent(self):
        with pytest.raises(ParseError):
            parse("a^1/2")

    def test_word_expected(self):
        with pytest.raises(ParseError):
            parse_word("a + b")


class TestAliasesAndMacros:
    def test_greek(self):
        assert parse("β*γ") == Element.word("b", "g")

    def test_macro(self):
        assert parse("2*X", {"X": parse("a + d")}) == parse("2*a + 2*d")


class TestPrinting:
    def test_zero(self):
        assert format_element(Element.zero()) == "0"

    def test_unit_coefficients(self):
        assert format_element(parse("q*b*a - p^-1*d")) == "-p^-1*d + q*b*a"

    def test_reads_back(self):
        for text in ("d*a + (p - q^-1)*g*b", "-p^-1*d + q*b*a", "1 + p*q*pLa*a", "1/2*p*a*dLb"):
            e = parse(text)
            assert parse(format_element(e)) == e
