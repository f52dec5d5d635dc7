"""
Exterior differentials, Cartan-Maurer one-forms and vector-field realizations.

Composite objects (the inverse-matrix entries A, B, C, D, the one-forms, the
vector fields) are expansions into generator words, never new axioms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from logging import getLogger
from typing import Literal, Mapping

from utils.algebra import Element, Word, generator, grade
from utils.parser import parse
from utils.rewrite import normalize
from utils import rules

logger = getLogger("glpq")

Side = Literal["left", "right"]
SIDES: tuple[Side, ...] = ("left", "right")

SIGMA3 = (1, -1)


class CalculusError(Exception):
    """Base error for the differential calculus."""


class UnsupportedGenerator(CalculusError):
    """Raised when a map is applied to a generator outside its domain."""


def differential(symbol: str, side: Side) -> str:
    return f"d{'L' if side == 'left' else 'R'}{symbol}"


def _default_images(side: Side) -> dict[str, Element]:
    images: dict[str, Element] = {s: Element.word(differential(s, side)) for s in rules.MATRIX}
    for base, inverse in rules.INVERTIBLES.items():
        images[inverse] = -(Element.word(inverse) * images[base] * Element.word(inverse))
    for s in rules.MATRIX:
        images[differential(s, side)] = Element.zero()
    return images


@dataclass(frozen=True)
class DifferentialConvention:
    side: Side
    images: Mapping[str, Element] = field(default_factory=dict)

    @classmethod
    def for_side(cls, side: Side, images: Mapping[str, Element] | None = None) -> "DifferentialConvention":
        return cls(side, dict(images) if images is not None else _default_images(side))

    def image(self, symbol: str) -> Element:
        try:
            return self.images[symbol]
        except KeyError:
            family = generator(symbol).family
            raise UnsupportedGenerator(f"δ_{self.side} is not defined on {symbol} ({family})") from None


def apply_delta(e: Element, conv: DifferentialConvention | Side) -> Element:
    """
    The graded Leibniz extension of δ from generators to words.

    Left: δ(x1..xn) = Σ_k (-1)^|x_k+1..x_n| x1..δx_k..xn.
    Right: δ(x1..xn) = Σ_k (-1)^|x1..x_k-1| x1..δx_k..xn.
    Grades are total (parity plus form degree).
    """
    if isinstance(conv, str):
        conv = DifferentialConvention.for_side(conv)

    def on_word(word: Word) -> Element:
        total = Element.zero()
        for k, symbol in enumerate(word):
            image = conv.image(symbol)
            if image.is_zero():
                continue
            crossed = word[k + 1:] if conv.side == "left" else word[:k]
            sign = -1 if grade(crossed) else 1
            total = total + Element([(word[:k], sign)]) * image * Element([(word[k + 1:], 1)])
        return total

    return e.map_words(on_word)


def calculus(side: Side):
    return rules.left_calculus() if side == "left" else rules.right_calculus()


def reduce(e: Element, side: Side) -> Element:
    return normalize(e, calculus(side))


# ---------------------------------------------------------------------------
# Composites
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def inverse_entries() -> dict[str, Element]:
    """Entries A, B, C, D of T⁻¹ in terms of a⁻¹, d⁻¹."""
    return {
        "A": parse("ai + ai*b*di*g*ai"),
        "B": parse("-ai*b*di"),
        "C": parse("-di*g*ai"),
        "D": parse("di + di*g*ai*b*di"),
    }


INVERSE_MATRIX = (("A", "B"), ("C", "D"))
MATRIX_ENTRIES = (("a", "b"), ("g", "d"))
ONE_FORM_MATRIX = {"left": (("th1", "u1"), ("u2", "th2")), "right": (("w1", "v1"), ("v2", "w2"))}


@lru_cache(maxsize=None)
def one_forms(side: Side) -> dict[str, Element]:
    """Ω_L = T⁻¹ δ_L T or Ω_R = δ_R T T⁻¹, entry by entry."""
    inverse = inverse_entries()
    out: dict[str, Element] = {}
    for i in range(2):
        for j in range(2):
            total = Element.zero()
            for k in range(2):
                if side == "left":
                    total = total + inverse[INVERSE_MATRIX[i][k]] * Element.word(differential(MATRIX_ENTRIES[k][j], side))
                else:
                    total = total + Element.word(differential(MATRIX_ENTRIES[i][k], side)) * inverse[INVERSE_MATRIX[k][j]]
            out[ONE_FORM_MATRIX[side][i][j]] = total
    return out


def differential_expansions(side: Side) -> dict[str, Element]:
    """δT = T Ω_L or δT = Ω_R T, in one-form symbols."""
    out: dict[str, Element] = {}
    forms = ONE_FORM_MATRIX[side]
    for i in range(2):
        for j in range(2):
            total = Element.zero()
            for k in range(2):
                if side == "left":
                    total = total + Element.word(MATRIX_ENTRIES[i][k], forms[k][j])
                else:
                    total = total + Element.word(forms[i][k], MATRIX_ENTRIES[k][j])
            out[differential(MATRIX_ENTRIES[i][j], side)] = total
    return out


def expand_one_forms(e: Element, side: Side) -> Element:
    """Substitute the composite definition for every one-form symbol."""
    forms = one_forms(side)

    def on_word(word: Word) -> Element:
        result = Element.one()
        for s in word:
            result = result * (forms[s] if s in forms else Element.word(s))
        return result

    return e.map_words(on_word)


def macros(side: Side) -> dict[str, Element]:
    """Parser names for the inverse entries and the side's one-forms."""
    return {**inverse_entries(), **one_forms(side)}


@lru_cache(maxsize=None)
def vector_fields(side: Side) -> dict[str, Element]:
    """Quantum Lie algebra generators realized in derivatives."""
    if side == "right":
        fields = {
            "T1": parse("a*pa + b*pb"),
            "Np": parse("g*pa + d*pb"),
            "T2": parse("d*pd + g*pg"),
            "Nm": parse("a*pg + b*pd"),
        }
    else:
        fields = {
            "T1": parse("pLa*a + pLg*g"),
            "Np": parse("pLb*a + pLd*g"),
            "T2": parse("pLb*b + pLd*d"),
            "Nm": parse("pLa*b + pLg*d"),
        }
    fields["X"] = fields["T1"] + fields["T2"]
    fields["Y"] = fields["T1"] - fields["T2"]
    return fields


def derivative_rules(side: Side):
    return rules.right_derivatives() if side == "right" else rules.left_derivatives()


def _derivative_free(e: Element) -> Element:
    return Element((w, c) for c, w in e.terms if all(generator(s).family not in ("rightDerivative", "leftDerivative") for s in w))


def derivative_action(f: Element, symbol: str, side: Side) -> Element:
    """∂_x f for right derivatives, f ∂ᴸ_x for left ones, as a function of the matrix entries."""
    if side == "right":
        ordered = normalize(Element.word(f"p{symbol}") * f, rules.right_derivatives())
    else:
        ordered = normalize(f * Element.word(f"pL{symbol}"), rules.left_derivatives())
    return _derivative_free(ordered)


def delta_via_derivatives(f: Element, side: Side) -> Element:
    """
    Rebuild δf from the derivative tables.

    Right: δ_R f = Σ δ_R x (∂_x f); left: δ_L f = Σ (f ∂ᴸ_x) δ_L x.
    """
    total = Element.zero()
    for s in rules.MATRIX:
        action = derivative_action(f, s, side)
        d = Element.word(differential(s, side))
        total = total + (d * action if side == "right" else action * d)
    return reduce(total, side)


def two_by_two(entries: tuple[tuple[str, str], ...], values: Mapping[str, Element]) -> list[list[Element]]:
    return [[values[name] for name in row] for row in entries]
