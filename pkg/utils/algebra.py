"""
The Z2-graded free algebra over the fixed generator registry, and its graded
tensor powers.

Words are tuples of ASCII generator symbols. Elements and tensor elements are
immutable linear combinations with Scalar coefficients; products concatenate
words and never reorder them (reordering is the rewrite engine's job).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Literal, Mapping, Union

from utils.scalars import ONE, Number, Scalar

Word = tuple[str, ...]
UNIT: Word = ()

Family = Literal[
    "matrix",
    "matrixInverse",
    "inverseUnit",
    "leftDifferential",
    "rightDifferential",
    "leftOneForm",
    "rightOneForm",
    "rightDerivative",
    "leftDerivative",
    "vectorField",
    "planeCoordinate",
]


class AlgebraError(Exception):
    """Base error for the free algebra."""


class UnknownGenerator(AlgebraError):
    """Raised when a symbol is not in the generator registry."""


@dataclass(frozen=True)
class GeneratorInfo:
    symbol: str
    parity: int
    form_degree: int
    family: Family
    base: str | None = None

    @property
    def grade(self) -> int:
        return (self.parity + self.form_degree) % 2


def _build_registry() -> dict[str, GeneratorInfo]:
    entries: list[GeneratorInfo] = []
    matrix_parity = {"a": 0, "b": 1, "g": 1, "d": 0}
    for s, par in matrix_parity.items():
        entries.append(GeneratorInfo(s, par, 0, "matrix"))
    entries.append(GeneratorInfo("ai", 0, 0, "matrixInverse", base="a"))
    entries.append(GeneratorInfo("di", 0, 0, "matrixInverse", base="d"))
    for s, par in matrix_parity.items():
        entries.append(GeneratorInfo(f"dL{s}", par, 1, "leftDifferential", base=s))
        entries.append(GeneratorInfo(f"dR{s}", par, 1, "rightDifferential", base=s))
    for s, par in (("th1", 0), ("th2", 0), ("u1", 1), ("u2", 1)):
        entries.append(GeneratorInfo(s, par, 1, "leftOneForm"))
    for s, par in (("w1", 0), ("w2", 0), ("v1", 1), ("v2", 1)):
        entries.append(GeneratorInfo(s, par, 1, "rightOneForm"))
    for s, par in matrix_parity.items():
        entries.append(GeneratorInfo(f"p{s}", par, 0, "rightDerivative", base=s))
        entries.append(GeneratorInfo(f"pL{s}", par, 0, "leftDerivative", base=s))
    entries.append(GeneratorInfo("pai", 0, 0, "inverseUnit", base="pa"))
    entries.append(GeneratorInfo("pdi", 0, 0, "inverseUnit", base="pd"))
    for s, par in (("T1", 0), ("T2", 0), ("Np", 1), ("Nm", 1),
                   ("TL1", 0), ("TL2", 0), ("NLp", 1), ("NLm", 1)):
        entries.append(GeneratorInfo(s, par, 0, "vectorField"))
    for s, par in (("x", 0), ("th", 1), ("ph", 1), ("y", 0)):
        entries.append(GeneratorInfo(s, par, 0, "planeCoordinate"))
    return {info.symbol: info for info in entries}


GENERATORS: Mapping[str, GeneratorInfo] = _build_registry()

# Display aliases used in docs and reports.
GREEK = {"b": "β", "g": "γ", "ai": "a⁻¹", "di": "d⁻¹"}


def generator(symbol: str) -> GeneratorInfo:
    try:
        return GENERATORS[symbol]
    except KeyError:
        raise UnknownGenerator(f"Unknown generator {symbol!r}") from None


@lru_cache(maxsize=None)
def _symbol_grade(symbol: str) -> int:
    return generator(symbol).grade


def grade(word: Word) -> int:
    return sum(_symbol_grade(s) for s in word) % 2


def form_degree(word: Word) -> int:
    return sum(generator(s).form_degree for s in word)


def word_key(word: Word) -> tuple:
    return (form_degree(word), len(word), word)


def word_text(word: Word) -> str:
    return "*".join(word)


Coefficient = Union[Scalar, Number]


def _as_scalar(value: Coefficient) -> Scalar:
    return value if isinstance(value, Scalar) else Scalar.from_number(value)


class Element:
    """A finite linear combination of words."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Iterable[tuple[Word, Coefficient]] | Mapping[Word, Coefficient] = ()):
        if isinstance(terms, Mapping):
            terms = terms.items()
        acc: dict[Word, Scalar] = {}
        for word, coefficient in terms:
            word = tuple(word)
            acc[word] = acc.get(word, Scalar.zero()) + _as_scalar(coefficient)
        self._terms: dict[Word, Scalar] = {
            w: c for w, c in sorted(acc.items(), key=lambda item: word_key(item[0])) if not c.is_zero()
        }
        self._hash: int | None = None

    @classmethod
    def word(cls, *symbols: str, coefficient: Coefficient = 1) -> "Element":
        for s in symbols:
            generator(s)
        return cls([(tuple(symbols), coefficient)])

    @classmethod
    def scalar(cls, value: Coefficient) -> "Element":
        return cls([(UNIT, value)])

    @classmethod
    def zero(cls) -> "Element":
        return cls()

    @classmethod
    def one(cls) -> "Element":
        return cls.scalar(ONE)

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> list[tuple[Scalar, Word]]:
        """(coefficient, word) pairs in canonical order."""
        return [(c, w) for w, c in self._terms.items()]

    def words(self) -> list[Word]:
        return list(self._terms)

    def coefficient(self, word: Word) -> Scalar:
        return self._terms.get(tuple(word), Scalar.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def symbols(self) -> set[str]:
        return {s for w in self._terms for s in w}

    def __iter__(self) -> Iterator[tuple[Scalar, Word]]:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self._terms)

    # -- linear structure -------------------------------------------------

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            other = Element.scalar(other)
        return Element(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> "Element":
        return Element((w, -c) for w, c in self._terms.items())

    def __sub__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            other = Element.scalar(other)
        return self + (-other)

    def __rsub__(self, other: Coefficient) -> "Element":
        return Element.scalar(other) - self

    def scale(self, factor: Coefficient) -> "Element":
        factor = _as_scalar(factor)
        return Element((w, c * factor) for w, c in self._terms.items())

    def __mul__(self, other: "Element | Coefficient") -> "Element":
        if isinstance(other, Element):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other: Coefficient) -> "Element":
        return self.scale(other)

    def __pow__(self, n: int) -> "Element":
        result = Element.one()
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # -- maps -------------------------------------------------------------

    def map_words(self, f: Callable[[Word], "Element"]) -> "Element":
        """Linear extension of a word-level map."""
        total: list[tuple[Word, Scalar]] = []
        for w, c in self._terms.items():
            for w2, c2 in f(w)._terms.items():
                total.append((w2, c * c2))
        return Element(total)

    def map_coefficients(self, f: Callable[[Scalar], Scalar]) -> "Element":
        return Element((w, f(c)) for w, c in self._terms.items())

    def substitute(self, assignment: Mapping[str, Scalar]) -> "Element":
        return self.map_coefficients(lambda c: c.substitute(assignment))

    def grades(self) -> set[int]:
        return {grade(w) for w in self._terms}

    # -- text -------------------------------------------------------------

    def __str__(self) -> str:
        from utils.parser import format_element

        return format_element(self)

    def __repr__(self) -> str:
        return f"Element({str(self)!r})"


def mul(x: Element, y: Element) -> Element:
    """Free-algebra product: bilinear concatenation of words."""
    return Element(
        (wx + wy, cx * cy)
        for cx, wx in x.terms
        for cy, wy in y.terms
    )


def product(*factors: Element) -> Element:
    result = Element.one()
    for factor in factors:
        result = mul(result, factor)
    return result


def gen(symbol: str) -> Element:
    return Element.word(symbol)


class TensorElement:
    """A linear combination of tensor words (one word per leg)."""

    __slots__ = ("_terms", "legs")

    def __init__(self, terms: Iterable[tuple[tuple[Word, ...], Coefficient]] = (), legs: int = 2):
        acc: dict[tuple[Word, ...], Scalar] = {}
        for words, coefficient in terms:
            words = tuple(tuple(w) for w in words)
            if len(words) != legs:
                raise AlgebraError(f"Expected {legs} legs, got {len(words)}")
            acc[words] = acc.get(words, Scalar.zero()) + _as_scalar(coefficient)
        self.legs = legs
        self._terms: dict[tuple[Word, ...], Scalar] = {
            ws: c
            for ws, c in sorted(acc.items(), key=lambda item: tuple(word_key(w) for w in item[0]))
            if not c.is_zero()
        }

    @classmethod
    def zero(cls, legs: int = 2) -> "TensorElement":
        return cls(legs=legs)

    @property
    def terms(self) -> list[tuple[Scalar, tuple[Word, ...]]]:
        return [(c, ws) for ws, c in self._terms.items()]

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if self._terms and other._terms and self.legs != other.legs:
            raise AlgebraError("Cannot add tensors with different numbers of legs")
        legs = self.legs if self._terms else other.legs
        return TensorElement(list(self._terms.items()) + list(other._terms.items()), legs=legs)

    def __neg__(self) -> "TensorElement":
        return TensorElement(((ws, -c) for ws, c in self._terms.items()), legs=self.legs)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def scale(self, factor: Coefficient) -> "TensorElement":
        factor = _as_scalar(factor)
        return TensorElement(((ws, c * factor) for ws, c in self._terms.items()), legs=self.legs)

    def __mul__(self, other: "TensorElement | Coefficient") -> "TensorElement":
        if isinstance(other, TensorElement):
            return tensor_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other: Coefficient) -> "TensorElement":
        return self.scale(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self.legs == other.legs and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.legs, tuple(self._terms.items())))

    # -- leg-wise maps ----------------------------------------------------

    def map_legs(self, maps: list[Callable[[Word], "Element | TensorElement"] | None]) -> "TensorElement":
        """
        Apply one linear map per leg, with no implicit Koszul sign.

        A map returning an Element keeps the leg; a map returning a
        TensorElement splices its legs in place. `None` is the identity.
        """
        if len(maps) != self.legs:
            raise AlgebraError(f"Expected {self.legs} leg maps, got {len(maps)}")
        total: TensorElement | None = None
        for c, ws in self.terms:
            pieces: list[TensorElement] = []
            for f, w in zip(maps, ws):
                image = Element([(w, 1)]) if f is None else f(w)
                pieces.append(image if isinstance(image, TensorElement) else tensor_of(image))
            term = _concat_legs(pieces).scale(c)
            total = term if total is None else total + term
        return total if total is not None else TensorElement.zero(self.legs)

    def map_coefficients(self, f: Callable[[Scalar], Scalar]) -> "TensorElement":
        return TensorElement(((ws, f(c)) for ws, c in self._terms.items()), legs=self.legs)

    def multiply_out(self) -> Element:
        """The multiplication map m(u1 ⊗ ... ⊗ un) = u1...un."""
        return Element((sum(ws, ()), c) for ws, c in self._terms.items())

    def counit_leg(self, leg: int, counit: Callable[[Word], Scalar]) -> "TensorElement | Element":
        """Contract one leg against a scalar-valued map."""
        out = []
        for c, ws in self.terms:
            value = counit(ws[leg])
            if not value.is_zero():
                out.append((ws[:leg] + ws[leg + 1:], c * value))
        if self.legs == 2:
            return Element((ws[0], c) for ws, c in out)
        return TensorElement(out, legs=self.legs - 1)

    def normalize_legs(self, normalizer: Callable[[Element], Element]) -> "TensorElement":
        """Normalize every leg independently; nothing crosses the tensor sign."""
        cache: dict[Word, Element] = {}

        def leg_form(w: Word) -> Element:
            if w not in cache:
                cache[w] = normalizer(Element([(w, 1)]))
            return cache[w]

        out: list[tuple[tuple[Word, ...], Scalar]] = []
        for c, ws in self.terms:
            partial: list[tuple[tuple[Word, ...], Scalar]] = [((), c)]
            for w in ws:
                form = leg_form(w)
                partial = [
                    (prefix + (w2,), coeff * c2)
                    for prefix, coeff in partial
                    for c2, w2 in form.terms
                ]
            out.extend(partial)
        return TensorElement(out, legs=self.legs)

    def __str__(self) -> str:
        from utils.parser import format_tensor

        return format_tensor(self)

    def __repr__(self) -> str:
        return f"TensorElement({str(self)!r})"


def tensor_of(*elements: Element) -> TensorElement:
    """Tensor product of elements, expanded multilinearly."""
    partial: list[tuple[tuple[Word, ...], Scalar]] = [((), ONE)]
    for e in elements:
        partial = [(ws + (w,), c * c2) for ws, c in partial for c2, w in e.terms]
    return TensorElement(partial, legs=len(elements))


def _concat_legs(pieces: list[TensorElement]) -> TensorElement:
    partial: list[tuple[tuple[Word, ...], Scalar]] = [((), ONE)]
    for piece in pieces:
        partial = [(ws + ws2, c * c2) for ws, c in partial for c2, ws2 in piece.terms]
    return TensorElement(partial, legs=sum(p.legs for p in pieces))


def koszul_sign(left: tuple[Word, ...], right: tuple[Word, ...]) -> int:
    """(-1)^(sum over i > j of grade(left_i) * grade(right_j))."""
    exponent = 0
    for j, rw in enumerate(right):
        g = grade(rw)
        if not g:
            continue
        for lw in left[j + 1:]:
            exponent += grade(lw)
    return -1 if exponent % 2 else 1


def tensor_mul(x: TensorElement, y: TensorElement, *, koszul: bool = True) -> TensorElement:
    """(A⊗B)(C⊗D) = (-1)^(|B||C|) AC⊗BD, extended to any number of legs."""
    if x.is_zero() or y.is_zero():
        return TensorElement.zero(x.legs if not x.is_zero() else y.legs)
    if x.legs != y.legs:
        raise AlgebraError("Cannot multiply tensors with different numbers of legs")
    out = []
    for cx, wx in x.terms:
        for cy, wy in y.terms:
            sign = koszul_sign(wx, wy) if koszul else 1
            out.append((tuple(a + b for a, b in zip(wx, wy)), cx * cy * sign))
    return TensorElement(out, legs=x.legs)
