"""
Coproduct, counit and antipode on a 2x2 quantum supermatrix, and the
coactions of the left differential algebra built from them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from logging import getLogger
from typing import Callable, Mapping

from utils.algebra import Element, TensorElement, Word, generator, grade, tensor_mul, tensor_of
from utils.differentials import Side, UnsupportedGenerator, apply_delta, differential
from utils.rewrite import RuleSet, normalize
from utils.scalars import Scalar

logger = getLogger("glpq")

MAX_SERIES_TERMS = 16


def tau(e: Element) -> Element:
    """The parity automorphism w -> (-1)^grade(w) w."""
    return Element((w, -c if grade(w) else c) for c, w in e.terms)


def _word(symbol: str) -> Element:
    return Element.word(symbol)


@dataclass
class CoStructure:
    """
    Hopf maps on the algebra generated by the entries of `entries`.

    Args:
        entries: The 2x2 matrix of generator symbols, rows first.
        inverses: Formal inverses of the diagonal entries.
        rules: Rule set used to normalize antipode images.
        koszul: Sign rule for tensor products; off only for the ablation check.
    """

    entries: tuple[tuple[str, str], tuple[str, str]]
    inverses: Mapping[str, str]
    rules: RuleSet
    koszul: bool = True
    _antipode: dict[str, Element] = field(default_factory=dict, repr=False)

    @property
    def symbols(self) -> list[str]:
        return [s for row in self.entries for s in row]

    def _position(self, symbol: str) -> tuple[int, int]:
        for i, row in enumerate(self.entries):
            if symbol in row:
                return i, row.index(symbol)
        raise UnsupportedGenerator(f"{symbol} is not a matrix entry")

    # -- coproduct --------------------------------------------------------

    def coproduct_generator(self, symbol: str) -> TensorElement:
        i, j = self._position(symbol)
        return sum(
            (tensor_of(_word(self.entries[i][k]), _word(self.entries[k][j])) for k in range(2)),
            TensorElement.zero(),
        )

    def multiplicative(self, images: Callable[[str], TensorElement], legs: int = 2) -> Callable[[Element], TensorElement]:
        """Extend a generator map to an algebra map into the graded tensor product."""

        def extend(e: Element) -> TensorElement:
            total = TensorElement.zero(legs)
            for c, w in e.terms:
                term = tensor_of(*([Element.one()] * legs))
                for s in w:
                    term = tensor_mul(term, images(s), koszul=self.koszul)
                total = total + term.scale(c)
            return total

        return extend

    def coproduct(self, e: Element) -> TensorElement:
        return self.multiplicative(self.coproduct_generator)(e)

    # -- counit -----------------------------------------------------------

    def counit_symbol(self, symbol: str) -> Scalar:
        if symbol in self.inverses.values():
            return Scalar.one()
        if generator(symbol).form_degree:
            return Scalar.zero()
        i, j = self._position(symbol)
        return Scalar.one() if i == j else Scalar.zero()

    def counit_word(self, word: Word) -> Scalar:
        value = Scalar.one()
        for s in word:
            value = value * self.counit_symbol(s)
            if value.is_zero():
                break
        return value

    def counit(self, e: Element) -> Scalar:
        total = Scalar.zero()
        for c, w in e.terms:
            total = total + c * self.counit_word(w)
        return total

    # -- antipode ---------------------------------------------------------

    def _composite(self, name: str) -> Element:
        a, b = self.entries[0]
        g, d = self.entries[1]
        ai, di = self.inverses[a], self.inverses[d]
        table = {
            "A": Element.word(ai) + Element.word(ai, b, di, g, ai),
            "B": -Element.word(ai, b, di),
            "C": -Element.word(di, g, ai),
            "D": Element.word(di) + Element.word(di, g, ai, b, di),
        }
        return table[name]

    def antipode_symbol(self, symbol: str) -> Element:
        if symbol in self._antipode:
            return self._antipode[symbol]
        inverse_of = {v: k for k, v in self.inverses.items()}
        if symbol in inverse_of:
            image = series_inverse(self.antipode_symbol(inverse_of[symbol]), self.rules, self._unit_inverse)
        else:
            i, j = self._position(symbol)
            image = self._composite(("A", "B", "C", "D")[2 * i + j])
        self._antipode[symbol] = image
        return image

    def _unit_inverse(self, symbol: str) -> str | None:
        both = dict(self.inverses)
        both.update({v: k for k, v in self.inverses.items()})
        return both.get(symbol)

    def antipode(self, e: Element) -> Element:
        """Graded anti-multiplicative: S(x1..xn) = (-1)^(Σ_i<j |xi||xj|) S(xn)..S(x1)."""
        return normalize(e.map_words(self._anti_multiplicative(self.antipode_symbol)), self.rules)

    def _anti_multiplicative(self, images: Callable[[str], Element]) -> Callable[[Word], Element]:
        def on_word(word: Word) -> Element:
            exponent = 0
            seen = 0
            for s in word:
                g = grade((s,))
                exponent += seen * g
                seen += g
            result = Element.one()
            for s in reversed(word):
                result = result * images(s)
            return result if exponent % 2 == 0 else -result

        return on_word

    # -- coactions on the differential algebra ---------------------------

    def _delta_leg(self, side: Side) -> Callable[[Word], Element]:
        return lambda w: apply_delta(Element([(w, 1)]), side)

    def phi_right(self, symbol: str, side: Side = "left", graded: bool = True) -> TensorElement:
        """
        Δ_R(δx), read off Δx.

        Graded: (δ ⊗ τ)Δx. Printed: (δ ⊗ id)Δx.
        """
        second = (lambda w: tau(Element([(w, 1)]))) if graded else None
        return self.coproduct_generator(symbol).map_legs([self._delta_leg(side), second])

    def phi_left(self, symbol: str, side: Side = "left", graded: bool = True) -> TensorElement:
        """
        Δ_L(δx), read off Δx.

        Graded: (id ⊗ δ)Δx. Printed: (τ ⊗ δ)Δx.
        """
        first = None if graded else (lambda w: tau(Element([(w, 1)])))
        return self.coproduct_generator(symbol).map_legs([first, self._delta_leg(side)])

    def _coaction(self, side: Side, phi: Callable[[str, Side, bool], TensorElement], graded: bool) -> Callable[[Element], TensorElement]:
        prefix = differential("", side)

        def images(symbol: str) -> TensorElement:
            if symbol.startswith(prefix) and generator(symbol).form_degree:
                return phi(symbol[len(prefix):], side, graded)
            return self.coproduct_generator(symbol)

        return self.multiplicative(images)

    def right_coaction(self, e: Element, side: Side = "left", graded: bool = True) -> TensorElement:
        return self._coaction(side, self.phi_right, graded)(e)

    def left_coaction(self, e: Element, side: Side = "left", graded: bool = True) -> TensorElement:
        return self._coaction(side, self.phi_left, graded)(e)

    def antipode_differential(self, symbol: str, side: Side = "left") -> Element:
        """Ŝ(δx) = δS(x) on a matrix entry, normalized in the side's calculus."""
        image = apply_delta(self.antipode_symbol(symbol), side)
        return normalize(image, self.rules)

    def extended_antipode(self, e: Element, side: Side = "left") -> Element:
        """Ŝ on the differential algebra: S on functions, δS on differentials, graded anti-multiplicative."""
        prefix = differential("", side)

        def image(symbol: str) -> Element:
            if symbol.startswith(prefix) and generator(symbol).form_degree:
                return self.antipode_differential(symbol[len(prefix):], side)
            return self.antipode_symbol(symbol)

        return normalize(e.map_words(self._anti_multiplicative(image)), self.rules)


def series_inverse(e: Element, rs: RuleSet, unit_inverse: Callable[[str], str | None]) -> Element:
    """
    Invert u(1 + m) with u an invertible monomial and m nilpotent.

    The result is Σ_k (-m)^k u⁻¹, normalized.
    """
    units = [(c, w) for c, w in e.terms if w and c.is_unit() and all(unit_inverse(s) for s in w)]
    if len(units) != 1:
        raise UnsupportedGenerator(f"{e} has no unique invertible leading term")
    c, w = units[0]
    u_inverse = Element([(tuple(unit_inverse(s) for s in reversed(w)), c.inverse())])
    m = normalize(u_inverse * (e - Element([(w, c)])), rs)
    total = Element.zero()
    power = Element.one()
    for _ in range(MAX_SERIES_TERMS):
        if power.is_zero():
            return normalize(total * u_inverse, rs)
        total = total + power
        power = normalize(-(power * m), rs)
    raise UnsupportedGenerator(f"{m} is not nilpotent within {MAX_SERIES_TERMS} powers")


def matrix_costructure(rules: RuleSet, koszul: bool = True) -> CoStructure:
    return CoStructure((("a", "b"), ("g", "d")), {"a": "ai", "d": "di"}, rules, koszul)


def derivative_costructure(rules: RuleSet, koszul: bool = True) -> CoStructure:
    return CoStructure((("pa", "pb"), ("pg", "pd")), {"pa": "pai", "pd": "pdi"}, rules, koszul)


def normalize_tensor(t: TensorElement, rs: RuleSet) -> TensorElement:
    return t.normalize_legs(lambda e: normalize(e, rs))
