"""
Tests for R̂ and the graded matrix helpers:
1. The entries of R̂ and its text table
2. The Hecke identity and the closed-form inverse
3. Graded Kronecker conventions, their conjugacy and the odd second leg
4. Span membership over Q(p, q)
"""

from utils.algebra import Element
from utils.scalars import Scalar
from utils.supermatrix import (
    CONVENTIONS,
    build_rhat,
    identity,
    in_span,
    is_zero_matrix,
    kron,
    kron_scalar,
    matmul,
    matscale,
    matsub,
    parity_similarity,
    rhat_inverse,
    rhat_table,
    second_leg,
)

P, Q = Scalar.p(), Scalar.q()


class TestRhat:
    def test_table(self):
        table = rhat_table()
        assert table[0][0] == "q"
        assert table[1][1] == "q - p^-1"
        assert table[1][2] == "1"
        assert table[2][1] == "p^-1*q"
        assert table[3][3] == "-p^-1"
        assert table[0][1] == "0"

    def test_hecke(self):
        rhat = build_rhat()
        one = identity(4)
        product = matmul(matsub(rhat, matscale(one, Q)), matsub(rhat, matscale(one, -P.inverse())))
        assert is_zero_matrix(product)

    def test_inverse(self):
        assert matmul(build_rhat(), rhat_inverse()) == identity(4)
        assert matmul(rhat_inverse(), build_rhat()) == identity(4)

    def test_inverse_entries(self):
        inverse = rhat_inverse()
        assert inverse[0][0] == Q.inverse()
        assert inverse[3][3] == -P
        assert inverse[1][1].is_zero()
        assert inverse[2][2] == -P * Q.inverse() * (Q - P.inverse())


class TestConventions:
    def test_ungraded_kron_has_no_signs(self):
        x = [[Scalar.one(), Scalar.one()], [Scalar.one(), Scalar.one()]]
        product = kron(x, x, CONVENTIONS["ungraded"])
        assert all(entry == 1 for row in product for entry in row)

    def test_super_sign(self):
        x = [[Scalar.one(), Scalar.one()], [Scalar.one(), Scalar.one()]]
        product = kron(x, x, CONVENTIONS["super"])
        # row (i, k) = (0, 1), column (j, l) = (1, 0): p(k)(p(i) + p(j)) is odd
        assert product[1][2] == -1
        assert product[0][0] == 1

    def test_scalar_kron_matches_matrix_kron(self):
        x = [[P, Q], [Scalar.one(), P * Q]]
        for convention in CONVENTIONS.values():
            product, parity = kron_scalar(x, [0, 1], x, [0, 1], convention)
            assert product == kron(x, x, convention)
            assert parity == [0, 1, 1, 0]

    def test_graded_conventions_are_conjugate(self):
        x = [[Scalar.one(), Scalar.one()], [Scalar.one(), Scalar.one()]]
        d = parity_similarity()
        plain = kron(x, x, CONVENTIONS["super"])
        transposed = kron(x, x, CONVENTIONS["super-transposed"])
        assert transposed == matmul(matmul(d, plain), d)
        assert matmul(matmul(d, build_rhat()), d) == build_rhat()

    def test_odd_second_leg(self):
        t = [[Element.word("a"), Element.word("b")], [Element.word("g"), Element.word("d")]]
        even = second_leg(t, CONVENTIONS["super"])
        odd = second_leg(t, CONVENTIONS["super"], degree=1)
        assert odd == [[-entry for entry in row] for row in even]


class TestSpan:
    def test_member(self):
        a, b = Element.word("a"), Element.word("b")
        assert in_span(a.scale(2 * P) + b, [a, b])

    def test_combination_of_sums(self):
        u = Element.word("a") + Element.word("d")
        v = Element.word("a") - Element.word("d")
        assert in_span(Element.word("d"), [u, v])

    def test_outside(self):
        assert not in_span(Element.word("a", "b"), [Element.word("a"), Element.word("b")])
