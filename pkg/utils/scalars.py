"""
Exact Laurent polynomials in the deformation parameters p and q.

A Scalar is a finite sum of terms c * p^i * q^j with rational c and integer
exponents. Values are immutable and hashable, so they can be shared freely
between rule tables and reports.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Exponent = tuple[int, int]
Number = Union[int, Fraction]


class ScalarError(Exception):
    """Base error for coefficient arithmetic."""


class NonUnitSubstitution(ScalarError):
    """Raised when a substituted value is not an invertible monomial."""


def _collect(pairs: Iterable[tuple[Exponent, Fraction]]) -> tuple[tuple[Exponent, Fraction], ...]:
    acc: dict[Exponent, Fraction] = {}
    for exponent, coefficient in pairs:
        acc[exponent] = acc.get(exponent, Fraction(0)) + coefficient
    return tuple(sorted((e, c) for e, c in acc.items() if c != 0))


class Scalar:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Iterable[tuple[Exponent, Number]] = ()):
        self._terms = _collect((tuple(e), Fraction(c)) for e, c in terms)
        self._hash = hash(self._terms)

    # -- constructors -----------------------------------------------------

    @classmethod
    def monomial(cls, i: int = 0, j: int = 0, coefficient: Number = 1) -> "Scalar":
        return cls([((i, j), coefficient)])

    @classmethod
    def from_number(cls, value: Number) -> "Scalar":
        return cls([((0, 0), value)])

    @classmethod
    def zero(cls) -> "Scalar":
        return cls()

    @classmethod
    def one(cls) -> "Scalar":
        return cls.monomial()

    @classmethod
    def p(cls) -> "Scalar":
        return cls.monomial(1, 0)

    @classmethod
    def q(cls) -> "Scalar":
        return cls.monomial(0, 1)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[Exponent, Fraction], ...]:
        """Terms in ascending lexicographic order of the exponent pair."""
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_unit(self) -> bool:
        """True for nonzero monomials, the only invertible elements of the ring."""
        return len(self._terms) == 1

    def constant(self) -> Fraction:
        for exponent, coefficient in self._terms:
            if exponent == (0, 0):
                return coefficient
        return Fraction(0)

    # -- ring operations --------------------------------------------------

    def __add__(self, other: "Scalar | Number") -> "Scalar":
        other = _coerce(other)
        return Scalar(self._terms + other._terms)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar((e, -c) for e, c in self._terms)

    def __sub__(self, other: "Scalar | Number") -> "Scalar":
        return self + (-_coerce(other))

    def __rsub__(self, other: "Scalar | Number") -> "Scalar":
        return _coerce(other) - self

    def __mul__(self, other: "Scalar | Number") -> "Scalar":
        other = _coerce(other)
        return Scalar(
            ((i1 + i2, j1 + j2), c1 * c2)
            for (i1, j1), c1 in self._terms
            for (i2, j2), c2 in other._terms
        )

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self.is_unit():
            raise ScalarError(f"{self} is not invertible in the Laurent ring")
        (i, j), c = self._terms[0]
        return Scalar.monomial(-i, -j, 1 / c)

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        result = Scalar.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar.from_number(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- substitution -----------------------------------------------------

    def substitute(self, assignment: Mapping[str, "Scalar"]) -> "Scalar":
        """Homomorphic substitution of p and/or q by invertible monomials."""
        for name, value in assignment.items():
            if name not in ("p", "q"):
                raise ScalarError(f"Unknown parameter {name!r}")
            if not value.is_unit():
                raise NonUnitSubstitution(f"{name} := {value} is not an invertible monomial")
        p_image = assignment.get("p", Scalar.p())
        q_image = assignment.get("q", Scalar.q())
        total = Scalar.zero()
        for (i, j), c in self._terms:
            total = total + (p_image ** i) * (q_image ** j) * c
        return total

    def classical_limit(self) -> "Scalar":
        return self.substitute({"p": Scalar.one(), "q": Scalar.one()})

    # -- text -------------------------------------------------------------

    def monomial_texts(self) -> list[tuple[int, str]]:
        """(sign, body) per term in printing order, descending on (i, j)."""
        out = []
        for (i, j), c in reversed(self._terms):
            sign = -1 if c < 0 else 1
            out.append((sign, _monomial_body(i, j, abs(c))))
        return out

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for index, (sign, body) in enumerate(self.monomial_texts()):
            if index == 0:
                pieces.append(f"-{body}" if sign < 0 else body)
            else:
                pieces.append(f" - {body}" if sign < 0 else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"


def _power_text(symbol: str, exponent: int) -> str:
    return symbol if exponent == 1 else f"{symbol}^{exponent}"


def _monomial_body(i: int, j: int, magnitude: Fraction, *, keep_one: bool = True) -> str:
    factors = []
    if magnitude != 1:
        factors.append(str(magnitude))
    if i:
        factors.append(_power_text("p", i))
    if j:
        factors.append(_power_text("q", j))
    if not factors:
        return "1" if keep_one else ""
    return "*".join(factors)


def monomial_prefix(scalar: Scalar) -> tuple[int, str]:
    """Sign and factor text of a unit scalar, empty text for +-1."""
    (i, j), c = scalar.terms[0]
    return (-1 if c < 0 else 1), _monomial_body(i, j, abs(c), keep_one=False)


def _coerce(value: "Scalar | Number") -> Scalar:
    if isinstance(value, Scalar):
        return value
    return Scalar.from_number(value)


P = Scalar.p()
Q = Scalar.q()
ONE = Scalar.one()
ZERO = Scalar.zero()


def scalar_add(x: Scalar, y: Scalar) -> Scalar:
    return x + y


def scalar_mul(x: Scalar, y: Scalar) -> Scalar:
    return x * y


def scalar_neg(x: Scalar) -> Scalar:
    return -x


def scalar_eq(x: Scalar, y: Scalar) -> bool:
    return x == y


def scalar_substitute(x: Scalar, assignment: Mapping[str, Scalar]) -> Scalar:
    return x.substitute(assignment)
