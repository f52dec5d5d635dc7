"""
Tests for Laurent-polynomial scalars:
1. Ring arithmetic collects like terms and cancels to zero
2. Canonical text orders terms by descending exponents
3. Only nonzero monomials are invertible
4. Negative powers go through the inverse
5. Substitution of p and q by invertible monomials, and its errors
6. The classical limit p = q = 1
"""

from fractions import Fraction

import pytest

from utils.scalars import NonUnitSubstitution, Scalar, ScalarError

P, Q = Scalar.p(), Scalar.q()


class TestArithmetic:
    def test_like_terms_cancel(self):
        assert (P * Q - Q * P).is_zero()

    def test_distributes(self):
        assert (P + Q) * (P - Q) == P ** 2 - Q ** 2

    def test_integer_coercion(self):
        assert 2 * P - P == P
        assert P - 1 + 1 == P

    def test_equality_with_numbers(self):
        assert Scalar.one() == 1
        assert Scalar.from_number(Fraction(1, 2)) * 2 == 1

    def test_hashable(self):
        assert len({P * Q, Q * P, P}) == 2


class TestText:
    def test_zero(self):
        assert str(Scalar.zero()) == "0"

    def test_descending_order(self):
        assert str(Q - P.inverse()) == "q - p^-1"
        assert str(P * Q - 1) == "p*q - 1"

    def test_rational_coefficient(self):
        assert str(Scalar.monomial(1, -1, Fraction(1, 2))) == "1/2*p*q^-1"

    def test_negative_leading_term(self):
        assert str(-P) == "-p"


class TestInverse:
    def test_monomial_inverse(self):
        assert (P * Q).inverse() == Scalar.monomial(-1, -1)
        assert (Q * P.inverse()).inverse() * Q == P

    def test_sum_is_not_invertible(self):
        with pytest.raises(ScalarError):
            (P + Q).inverse()

    def test_negative_power(self):
        assert Q ** -2 == Scalar.monomial(0, -2)
        assert (2 * P) ** -1 == Scalar.monomial(-1, 0, Fraction(1, 2))


class TestSubstitution:
    def test_p_to_q(self):
        assert (Q - P.inverse()).substitute({"p": Q}) == Q - Q.inverse()

    def test_swap(self):
        assert (P ** 2 * Q).substitute({"p": Q, "q": P}) == Q ** 2 * P

    def test_non_unit_rejected(self):
        with pytest.raises(NonUnitSubstitution):
            P.substitute({"p": P + Q})

    def test_unknown_parameter(self):
        with pytest.raises(ScalarError):
            P.substitute({"r": Q})

    def test_classical_limit(self):
        assert (P - Q.inverse()).classical_limit().is_zero()
        assert (P * Q + 2).classical_limit() == 3
