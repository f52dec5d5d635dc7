"""
Text form of elements: a small recursive-descent parser and the canonical
printer it inverts.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := rational | 'p' | 'q' | generator | macro | '(' expr ')' | factor '^' integer
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

from utils.algebra import GENERATORS, UNIT, Element, TensorElement, Word, word_text
from utils.scalars import Scalar, monomial_prefix


class ParseError(Exception):
    """Raised when text does not match the expression grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownSymbol(ParseError):
    """Raised for an identifier that is neither a parameter nor a generator."""


class IllegalInverse(ParseError):
    """Raised for a negative power of a non-invertible factor."""


ALIASES = {"β": "b", "γ": "g", "δ": "d"}
INVERTIBLE_POWERS = {"ai": "a", "di": "d"}


# ---------------------------------------------------------------------------
# Syntax tree
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Number:
    value: Fraction
    position: int


@dataclass(frozen=True)
class Parameter:
    name: str
    position: int


@dataclass(frozen=True)
class Symbol:
    name: str
    position: int


@dataclass(frozen=True)
class Negate:
    operand: "SyntaxTree"
    position: int


@dataclass(frozen=True)
class Sum:
    terms: tuple["SyntaxTree", ...]
    signs: tuple[int, ...]
    position: int


@dataclass(frozen=True)
class Product:
    factors: tuple["SyntaxTree", ...]
    position: int


@dataclass(frozen=True)
class Power:
    base: "SyntaxTree"
    exponent: int
    position: int


SyntaxTree = Union[Number, Parameter, Symbol, Negate, Sum, Product, Power]


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([^\W\d_][\w]*)|(\S))", re.UNICODE)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens: list[tuple[str, str, int]] = []
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None or match.end() == position:
            break
        number, name, op = match.groups()
        start = match.start(match.lastindex or 0)
        if number is not None:
            tokens.append(("number", number, start))
        elif name is not None:
            tokens.append(("name", name, start))
        elif op is not None:
            if op not in "+-*^()":
                raise ParseError(f"Unexpected character {op!r}", start)
            tokens.append(("op", op, start))
        position = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, macros: Mapping[str, Element]):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0
        self.macros = macros

    @property
    def current(self) -> tuple[str, str, int]:
        return self.tokens[self.index]

    def advance(self) -> tuple[str, str, int]:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def accept(self, op: str) -> bool:
        kind, value, _ = self.current
        if kind == "op" and value == op:
            self.index += 1
            return True
        return False

    def expect(self, op: str) -> None:
        if not self.accept(op):
            raise ParseError(f"Expected {op!r}", self.current[2])

    def parse(self) -> SyntaxTree:
        tree = self.expr()
        kind, value, position = self.current
        if kind != "end":
            raise ParseError(f"Unexpected {value!r}", position)
        return tree

    def expr(self) -> SyntaxTree:
        start = self.current[2]
        terms: list[SyntaxTree] = []
        signs: list[int] = []
        sign = 1
        if self.accept("-"):
            sign = -1
        else:
            self.accept("+")
        terms.append(self.term())
        signs.append(sign)
        while True:
            if self.accept("+"):
                signs.append(1)
            elif self.accept("-"):
                signs.append(-1)
            else:
                break
            terms.append(self.term())
        if len(terms) == 1 and signs[0] == 1:
            return terms[0]
        return Sum(tuple(terms), tuple(signs), start)

    def term(self) -> SyntaxTree:
        start = self.current[2]
        factors = [self.factor()]
        while self.accept("*"):
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors), start)

    def factor(self) -> SyntaxTree:
        base = self.atom()
        while self.current[0] == "op" and self.current[1] == "^":
            position = self.advance()[2]
            sign = -1 if self.accept("-") else 1
            kind, value, at = self.advance()
            if kind != "number" or "/" in value:
                raise ParseError("Expected an integer exponent", at)
            base = Power(base, sign * int(value), position)
        return base

    def atom(self) -> SyntaxTree:
        kind, value, position = self.advance()
        if kind == "number":
            return Number(Fraction(value), position)
        if kind == "name":
            name = ALIASES.get(value, value)
            if name in ("p", "q"):
                return Parameter(name, position)
            if name in self.macros or name in GENERATORS:
                return Symbol(name, position)
            raise UnknownSymbol(f"Unknown symbol {value!r}", position)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "op" and value == "-":
            return Negate(self.factor(), position)
        if kind == "end":
            raise ParseError("Unexpected end of input", position)
        raise ParseError(f"Unexpected {value!r}", position)


def parse_tree(text: str, macros: Mapping[str, Element] | None = None) -> SyntaxTree:
    return _Parser(text, macros or {}).parse()


def _unit_scalar(e: Element) -> Scalar | None:
    if len(e) == 1:
        c, w = e.terms[0]
        if w == UNIT and c.is_unit():
            return c
    return None


def evaluate(tree: SyntaxTree, macros: Mapping[str, Element] | None = None) -> Element:
    macros = macros or {}
    match tree:
        case Number(value=value):
            return Element.scalar(value)
        case Parameter(name=name):
            return Element.scalar(Scalar.p() if name == "p" else Scalar.q())
        case Symbol(name=name):
            return macros[name] if name in macros else Element.word(name)
        case Negate(operand=operand):
            return -evaluate(operand, macros)
        case Sum(terms=terms, signs=signs):
            total = Element.zero()
            for sign, term in zip(signs, terms):
                value = evaluate(term, macros)
                total = total + value if sign > 0 else total - value
            return total
        case Product(factors=factors):
            result = Element.one()
            for factor in factors:
                result = result * evaluate(factor, macros)
            return result
        case Power(base=base, exponent=exponent, position=position):
            if exponent >= 0:
                return evaluate(base, macros) ** exponent
            if isinstance(base, Symbol) and base.name in INVERTIBLE_POWERS and base.name not in macros:
                return Element.word(INVERTIBLE_POWERS[base.name]) ** (-exponent)
            value = evaluate(base, macros)
            unit = _unit_scalar(value)
            if unit is None:
                raise IllegalInverse("Negative power of a non-invertible factor", position)
            return Element.scalar(unit ** exponent)
    raise TypeError(f"Not a syntax tree node: {tree!r}")


def parse(text: str, macros: Mapping[str, Element] | None = None) -> Element:
    """
    Parse `text` into an exact Element.

    Args:
        text: Expression in the grammar above; whitespace is ignored.
        macros: Names that expand to fixed Elements, such as the antipode
            composites A, B, C, D.
    """
    return evaluate(parse_tree(text, macros), macros)


def parse_word(text: str) -> Word:
    """Parse a bare monomial such as 'dLa*b' into its word."""
    e = parse(text)
    if len(e) != 1 or e.terms[0][0] != Scalar.one():
        raise ParseError(f"{text!r} is not a single word", 0)
    return e.terms[0][1]


# ---------------------------------------------------------------------------
# Printing
# ---------------------------------------------------------------------------


def _signed_pieces(coefficient: Scalar, body: str) -> list[tuple[int, str]]:
    if not body:
        return coefficient.monomial_texts()
    if coefficient.is_unit():
        sign, prefix = monomial_prefix(coefficient)
        return [(sign, f"{prefix}*{body}" if prefix else body)]
    return [(1, f"({coefficient})*{body}")]


def _join(pieces: list[tuple[int, str]]) -> str:
    if not pieces:
        return "0"
    out = []
    for index, (sign, text) in enumerate(pieces):
        if index == 0:
            out.append(f"-{text}" if sign < 0 else text)
        else:
            out.append(f" - {text}" if sign < 0 else f" + {text}")
    return "".join(out)


def format_element(e: Element) -> str:
    """Canonical text: terms by (form degree, length, word), zero as '0'."""
    pieces: list[tuple[int, str]] = []
    for coefficient, word in e.terms:
        pieces.extend(_signed_pieces(coefficient, word_text(word)))
    return _join(pieces)


def format_tensor(t: TensorElement) -> str:
    pieces: list[tuple[int, str]] = []
    for coefficient, words in t.terms:
        body = " @ ".join(word_text(w) or "1" for w in words)
        pieces.extend(_signed_pieces(coefficient, body))
    return _join(pieces)
