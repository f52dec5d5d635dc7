"""
Suites for the left and right differential calculi: consistency of the
tables with the algebra, the printed exchange tables, Cartan-Maurer forms,
nilpotency and the derivative reconstruction of δ.
"""

from __future__ import annotations

from functools import partial
from logging import getLogger
from typing import Callable

from utils import rules
from utils.algebra import Element
from utils.differentials import (
    INVERSE_MATRIX,
    MATRIX_ENTRIES,
    ONE_FORM_MATRIX,
    SIDES,
    SIGMA3,
    Side,
    apply_delta,
    calculus,
    delta_via_derivatives,
    inverse_entries,
    macros,
    one_forms,
    reduce,
    two_by_two,
)
from utils.parser import parse
from utils.reports import DiscrepancyReport, RelationVerdict, compare, relation_verdict
from utils.rewrite import RewriteRule, RuleSet, normalize
from utils.supermatrix import coefficient_rows, identity, lift, matmul, span_rank
from suites import tables
from suites.registry import SuiteContext, registry

logger = getLogger("glpq")

GENERATOR_PRODUCTS = [(x, y) for x in rules.MATRIX for y in rules.MATRIX]


def _relation(rule: RewriteRule) -> Element:
    return Element([(rule.lhs, 1)]) - rule.rhs


def normalizer(rs: RuleSet) -> Callable[[Element], Element]:
    return lambda e: normalize(e, rs)


def table_verdicts(table: str, text: str, side: Side, rs: RuleSet) -> list[RelationVerdict]:
    """Compare each printed `lhs | rhs` line after normalizing both sides in `rs`."""
    names = macros(side)
    return [
        compare(f"{table}.{rid}", parse(rhs, names), parse(lhs, names), normalizer(rs))
        for rid, lhs, rhs in tables.relations(text)
    ]


# ---------------------------------------------------------------------------
# Inverse matrix
# ---------------------------------------------------------------------------


def inverse_check() -> list[RelationVerdict]:
    """T·T⁻¹ = I = T⁻¹·T with the composite entries A, B, C, D."""
    entries = inverse_entries()
    t = two_by_two(MATRIX_ENTRIES, {s: Element.word(s) for s in rules.MATRIX})
    t_inverse = two_by_two(INVERSE_MATRIX, entries)
    one = lift(identity(2))
    fs = normalizer(rules.functions())
    out = []
    for name, product in (("T*Tinv", matmul(t, t_inverse)), ("Tinv*T", matmul(t_inverse, t))):
        for i in range(2):
            for j in range(2):
                out.append(compare(f"inverse.{name}[{i + 1},{j + 1}]", one[i][j], product[i][j], fs))
    return out


@registry.suite("calculus.inverse")
def inverse(context: SuiteContext) -> DiscrepancyReport:
    """The composite inverse matrix and its exchange table with the entries."""
    report = DiscrepancyReport(suite="calculus.inverse", table="inverse matrix entries")
    report.extend(inverse_check())
    report.extend(table_verdicts("inverse-entries", tables.INVERSE_ENTRIES, "left", rules.functions()))
    return report


# ---------------------------------------------------------------------------
# Ideal compatibility and the mirror property
# ---------------------------------------------------------------------------


def _exchange_table(side: Side) -> RuleSet:
    return rules.rs_ldiff() if side == "left" else rules.rs_rdiff()


def _two_form_table(side: Side) -> RuleSet:
    return rules.rs_dd() if side == "left" else rules.rs_dd_r()


def ideal_check(side: Side) -> list[RelationVerdict]:
    """δ maps every presentation and exchange relation into the ideal."""
    out = []
    for table in (rules.rs_a(), _exchange_table(side)):
        for rule in table.rules:
            image = reduce(apply_delta(_relation(rule), side), side)
            out.append(relation_verdict(f"{side}.{rule.id}", 0, image, image))
    return out


def mirror_check(side: Side) -> RelationVerdict:
    """
    The δ-images of the exchange relations span exactly the two-form relations.

    The images are pure two-forms in the differentials, so the comparison is a
    rank computation over Q(p, q).
    """
    exchange = _exchange_table(side)
    base = exchange.union(rules.rs_a(), name=f"{exchange.name}+RS_A")
    images = [normalize(apply_delta(_relation(rule), side), base) for rule in exchange.rules]
    targets = [_relation(rule) for rule in _two_form_table(side).rules]
    _, rows = coefficient_rows(images + targets)
    n = len(images)
    image_rank, target_rank, joint_rank = span_rank(rows[:n]), span_rank(rows[n:]), span_rank(rows)
    return RelationVerdict(
        relation=f"mirror.{side}",
        expected=f"rank {target_rank} two-form relations",
        got=f"rank {image_rank} images, joint rank {joint_rank}",
        residual="0" if image_rank == target_rank == joint_rank else f"joint rank {joint_rank}",
        verdict="match" if image_rank == target_rank == joint_rank else "mismatch",
    )


@registry.suite("calculus.ideal")
def ideal(context: SuiteContext) -> DiscrepancyReport:
    """δ_L and δ_R respect the relations they are imposed on."""
    report = DiscrepancyReport(suite="calculus.ideal", table="δ of the relations")
    for side in SIDES:
        report.extend(ideal_check(side))
        report.add(mirror_check(side))
    return report


# ---------------------------------------------------------------------------
# Printed exchange tables
# ---------------------------------------------------------------------------

SIDE_TABLES: dict[Side, list[tuple[str, str]]] = {
    "left": [
        ("function-oneform.left", tables.FUNCTION_ONEFORM_LEFT),
        ("inverse-differential.left", tables.INVERSE_DIFFERENTIAL_LEFT),
        ("oneform-differential.left", tables.ONEFORM_DIFFERENTIAL_LEFT),
        ("oneform-oneform.left", tables.ONEFORM_ONEFORM_LEFT),
    ],
    "right": [
        ("function-oneform.right", tables.FUNCTION_ONEFORM_RIGHT),
        ("inverse-differential.right", tables.INVERSE_DIFFERENTIAL_RIGHT),
        ("oneform-differential.right", tables.ONEFORM_DIFFERENTIAL_RIGHT),
        ("oneform-oneform.right", tables.ONEFORM_ONEFORM_RIGHT),
    ],
}


@registry.suite("calculus.tables")
def printed_tables(context: SuiteContext) -> DiscrepancyReport:
    """Exchange tables of one-forms, inverse entries and differentials."""
    report = DiscrepancyReport(suite="calculus.tables", table="printed exchange tables")
    for side in SIDES:
        for table, text in SIDE_TABLES[side]:
            report.extend(table_verdicts(table, text, side, calculus(side)))
    return report


# ---------------------------------------------------------------------------
# Cartan-Maurer
# ---------------------------------------------------------------------------


def _sigma3() -> list[list[Element]]:
    return [[Element.scalar(SIGMA3[i]) if i == j else Element.zero() for j in range(2)] for i in range(2)]


def sigma3_form(side: Side) -> list[list[Element]]:
    """Ω σ3 Ω σ3 on the left, σ3 Ω σ3 Ω on the right."""
    omega = two_by_two(ONE_FORM_MATRIX[side], one_forms(side))
    sigma = _sigma3()
    if side == "left":
        return matmul(matmul(matmul(omega, sigma), omega), sigma)
    return matmul(matmul(matmul(sigma, omega), sigma), omega)


def cartan_maurer_check(side: Side) -> list[RelationVerdict]:
    forms, names = one_forms(side), macros(side)
    red = partial(reduce, side=side)
    sigma = sigma3_form(side)
    out = []
    for i, row in enumerate(ONE_FORM_MATRIX[side]):
        for j, name in enumerate(row):
            direct = apply_delta(forms[name], side)
            two_form = parse(tables.TWO_FORMS[side][name], names)
            explicit = parse(tables.CARTAN_MAURER[side][name], names)
            out.append(compare(f"{side}.sigma3.{name}", sigma[i][j], direct, red))
            out.append(compare(f"{side}.two-form.{name}", two_form, direct, red))
            out.append(compare(f"{side}.explicit.{name}", explicit, direct, red))
            out.append(compare(f"{side}.agreement.{name}", two_form, explicit, red))
    return out


@registry.suite("calculus.mc")
def cartan_maurer(context: SuiteContext) -> DiscrepancyReport:
    """Differentials of the one-forms against the printed Cartan-Maurer lines."""
    report = DiscrepancyReport(suite="calculus.mc", table="Cartan-Maurer equations")
    for side in SIDES:
        report.extend(cartan_maurer_check(side))
    return report


# ---------------------------------------------------------------------------
# Nilpotency
# ---------------------------------------------------------------------------


def delta_squared_check(side: Side) -> list[RelationVerdict]:
    """δ² = 0 on the generators, their inverses, products of two and the one-forms."""
    targets: list[tuple[str, Element]] = [(s, Element.word(s)) for s in (*rules.MATRIX, *rules.INVERTIBLES.values())]
    targets += [(f"{x}*{y}", Element.word(x, y)) for x, y in GENERATOR_PRODUCTS]
    targets += list(one_forms(side).items())
    out = []
    for name, e in targets:
        twice = reduce(apply_delta(apply_delta(e, side), side), side)
        out.append(relation_verdict(f"{side}.{name}", 0, twice, twice))
    return out


@registry.suite("calculus.nilpotency")
def nilpotency(context: SuiteContext) -> DiscrepancyReport:
    """δ² vanishes in both calculi."""
    report = DiscrepancyReport(suite="calculus.nilpotency", table="δ²")
    for side in SIDES:
        report.extend(delta_squared_check(side))
    return report


# ---------------------------------------------------------------------------
# Derivatives
# ---------------------------------------------------------------------------


def derivative_table_check(side: Side) -> list[RelationVerdict]:
    """δf rebuilt from the derivative tables equals δf from the Leibniz rule."""
    targets = [(s, Element.word(s)) for s in rules.MATRIX]
    targets += [(f"{x}*{y}", Element.word(x, y)) for x, y in GENERATOR_PRODUCTS]
    out = []
    for name, f in targets:
        expected = reduce(apply_delta(f, side), side)
        got = delta_via_derivatives(f, side)
        out.append(relation_verdict(f"{side}.delta.{name}", expected, got, expected - got))
    prefix, rs = ("p", rules.right_derivatives()) if side == "right" else ("pL", rules.left_derivatives())
    for s in ("b", "g"):
        square = normalize(Element.word(f"{prefix}{s}", f"{prefix}{s}"), rs)
        out.append(relation_verdict(f"{side}.square.{prefix}{s}", 0, square, square))
    return out


@registry.suite("calculus.derivative")
def derivatives(context: SuiteContext) -> DiscrepancyReport:
    """The derivative tables reproduce δ on generators and their products."""
    report = DiscrepancyReport(suite="calculus.derivative", table="derivative reconstruction of δ")
    for side in SIDES:
        report.extend(derivative_table_check(side))
    report.notes.append("the left table reads a*pLa = 1 + p*q*pLa*a")
    report.notes.append("the left table reads d*pLd with bracket coefficient p^-1*q^-1 - 1")
    return report
