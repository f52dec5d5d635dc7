"""
Small dense matrices over Scalars or Elements, graded Kronecker products and
the R̂ matrix of the two-parameter superplane.
"""

from __future__ import annotations

from dataclasses import dataclass
from logging import getLogger
from typing import Callable, Iterable, Sequence, TypeVar

import sympy
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from utils.algebra import Element, Word
from utils.scalars import Scalar

logger = getLogger("glpq")

R = TypeVar("R", Scalar, Element)

INDEX_PARITY = (0, 1)
PAIRS = [(i, k) for i in range(2) for k in range(2)]


class ConventionCalibrationFailed(Exception):
    """Raised when no candidate Kronecker sign table reproduces the presentation."""


# ---------------------------------------------------------------------------
# Matrix arithmetic
# ---------------------------------------------------------------------------


def _zero_like(entry: R) -> R:
    return Scalar.zero() if isinstance(entry, Scalar) else Element.zero()


def matmul(x: Sequence[Sequence[R]], y: Sequence[Sequence[R]]) -> list[list[R]]:
    zero = _zero_like(x[0][0])
    return [
        [sum((x[i][k] * y[k][j] for k in range(len(y))), zero) for j in range(len(y[0]))]
        for i in range(len(x))
    ]


def matsub(x: Sequence[Sequence[R]], y: Sequence[Sequence[R]]) -> list[list[R]]:
    return [[x[i][j] - y[i][j] for j in range(len(x[0]))] for i in range(len(x))]


def matscale(x: Sequence[Sequence[R]], factor: Scalar) -> list[list[R]]:
    return [[entry * factor for entry in row] for row in x]


def entrywise(x: Sequence[Sequence[R]], f: Callable[[R], R]) -> list[list[R]]:
    return [[f(entry) for entry in row] for row in x]


def identity(n: int) -> list[list[Scalar]]:
    return [[Scalar.one() if i == j else Scalar.zero() for j in range(n)] for i in range(n)]


def lift(x: Sequence[Sequence[Scalar]]) -> list[list[Element]]:
    """View a scalar matrix as a matrix over the algebra."""
    return [[Element.scalar(entry) for entry in row] for row in x]


def is_zero_matrix(x: Iterable[Iterable[Scalar | Element]]) -> bool:
    return all(entry.is_zero() for row in x for entry in row)


# ---------------------------------------------------------------------------
# Graded Kronecker conventions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GradedKroneckerConvention:
    """kron(A, B)[(i,k),(j,l)] = σ(i,j,k,l) A_ij B_kl, σ read off the four index parities."""

    name: str
    parity_sign: Callable[[int, int, int, int], int]

    def __call__(self, i: int, j: int, k: int, l: int) -> int:
        return self.parity_sign(_p(i), _p(j), _p(k), _p(l))


def _p(index: int) -> int:
    return INDEX_PARITY[index]


CONVENTIONS: dict[str, GradedKroneckerConvention] = {
    "ungraded": GradedKroneckerConvention("ungraded", lambda pi, pj, pk, pl: 1),
    "super": GradedKroneckerConvention(
        "super", lambda pi, pj, pk, pl: -1 if (pk * (pi + pj)) % 2 else 1
    ),
    "super-transposed": GradedKroneckerConvention(
        "super-transposed", lambda pi, pj, pk, pl: -1 if (pj * (pk + pl)) % 2 else 1
    ),
}


def kron(x: Sequence[Sequence[R]], y: Sequence[Sequence[R]], convention: GradedKroneckerConvention) -> list[list[R]]:
    """Graded Kronecker product of two 2x2 matrices, rows and columns indexed by PAIRS."""
    out: list[list[R]] = []
    for i, k in PAIRS:
        row = []
        for j, l in PAIRS:
            row.append(x[i][j] * y[k][l] * convention(i, j, k, l))
        out.append(row)
    return out


def first_leg(x: Sequence[Sequence[Element]], convention: GradedKroneckerConvention) -> list[list[Element]]:
    """X_1 = X ⊗ I."""
    return kron(x, lift(identity(2)), convention)


def second_leg(x: Sequence[Sequence[Element]], convention: GradedKroneckerConvention, degree: int = 0) -> list[list[Element]]:
    """
    X_2 = I ⊗ X.

    A matrix of odd form degree (δT, Ω) picks up an overall sign when it is
    carried past the identity leg, so δ(T_2) = -(δT)_2.
    """
    out = kron(lift(identity(2)), x, convention)
    return out if degree % 2 == 0 else [[-entry for entry in row] for row in out]


def kron_scalar(x: Sequence[Sequence[Scalar]], x_parity: Sequence[int], y: Sequence[Sequence[Scalar]],
                y_parity: Sequence[int], convention: GradedKroneckerConvention) -> tuple[list[list[Scalar]], list[int]]:
    """Kronecker product of scalar matrices with arbitrary index parities."""
    n, m = len(x), len(y)
    out = [[Scalar.zero()] * (n * m) for _ in range(n * m)]
    for i in range(n):
        for j in range(n):
            if x[i][j].is_zero():
                continue
            for k in range(m):
                for l in range(m):
                    if y[k][l].is_zero():
                        continue
                    sign = convention.parity_sign(x_parity[i], x_parity[j], y_parity[k], y_parity[l])
                    out[i * m + k][j * m + l] = x[i][j] * y[k][l] * sign
    parity = [(a + b) % 2 for a in x_parity for b in y_parity]
    return out, parity


def parity_similarity() -> list[list[Scalar]]:
    """D = diag((-1)^(p(i)p(k))) on the pair space; the graded conventions differ by conjugation with D."""
    return [
        [Scalar.from_number(-1 if _p(i) * _p(k) else 1) if r == c else Scalar.zero() for c in range(4)]
        for r, (i, k) in enumerate(PAIRS)
    ]


# ---------------------------------------------------------------------------
# R̂
# ---------------------------------------------------------------------------


def build_rhat() -> list[list[Scalar]]:
    p, q, zero, one = Scalar.p(), Scalar.q(), Scalar.zero(), Scalar.one()
    return [
        [q, zero, zero, zero],
        [zero, q - p.inverse(), one, zero],
        [zero, q * p.inverse(), zero, zero],
        [zero, zero, zero, -p.inverse()],
    ]


def rhat_inverse() -> list[list[Scalar]]:
    """From (R̂ - q)(R̂ + p⁻¹) = 0: R̂⁻¹ = p q⁻¹ (R̂ - (q - p⁻¹) I)."""
    p, q = Scalar.p(), Scalar.q()
    shifted = matsub(build_rhat(), matscale(identity(4), q - p.inverse()))
    return matscale(shifted, p * q.inverse())


def rhat_table() -> list[list[str]]:
    return [[str(entry) for entry in row] for row in build_rhat()]


PAIR_PARITY = [(_p(i) + _p(k)) % 2 for i, k in PAIRS]


# ---------------------------------------------------------------------------
# Exact linear algebra over Q(p, q)
# ---------------------------------------------------------------------------

_P, _Q = sympy.symbols("p q")
FIELD = QQ.frac_field(_P, _Q)


def to_sympy(s: Scalar) -> sympy.Expr:
    return sympy.Add(*[
        sympy.Rational(c.numerator, c.denominator) * _P ** i * _Q ** j
        for (i, j), c in s.terms
    ])


def coefficient_rows(elements: Sequence[Element]) -> tuple[list[Word], list[list[Scalar]]]:
    words = sorted({w for e in elements for w in e.words()})
    return words, [[e.coefficient(w) for w in words] for e in elements]


def span_rank(rows: Sequence[Sequence[Scalar]]) -> int:
    if not rows or not rows[0]:
        return 0
    matrix = sympy.Matrix([[to_sympy(entry) for entry in row] for row in rows])
    return DomainMatrix.from_Matrix(matrix).convert_to(FIELD).rank()


def in_span(target: Element, spanning: Sequence[Element]) -> bool:
    """Whether `target` is a Q(p, q)-linear combination of `spanning`."""
    words, rows = coefficient_rows(list(spanning) + [target])
    base = span_rank(rows[:-1])
    extended = span_rank(rows)
    logger.debug(f"span check over {len(words)} words: rank {base} -> {extended}")
    return base == extended
