"""
Hopf suites: the base co-structure on the matrix entries, its extension to
the left differential algebra, and the co-structure of the right derivatives.
"""

from __future__ import annotations

from logging import getLogger
from typing import Callable, TypeVar

from utils import rules
from utils.algebra import Element, TensorElement, Word, tensor_of
from utils.config import Settings
from utils.costructure import CoStructure, derivative_costructure, matrix_costructure, normalize_tensor, tau
from utils.differentials import apply_delta, differential, macros
from utils.parser import parse
from utils.reports import DiscrepancyReport, RelationVerdict, aggregate, compare, relation_verdict
from utils.rewrite import RewriteRule, RuleSet, normalize
from suites import tables
from suites.registry import SuiteContext, registry

logger = getLogger("glpq")

Pairs = list[tuple[int, str, str]]
T = TypeVar("T")


def _word(w: Word) -> Element:
    return Element([(w, 1)])


def _relation(rule: RewriteRule) -> Element:
    return Element([(rule.lhs, 1)]) - rule.rhs


def _on_words(f: Callable[[Element], T]) -> Callable[[Word], T]:
    return lambda w: f(_word(w))


def _tensor(pairs: Pairs) -> TensorElement:
    return sum((tensor_of(Element.word(x), Element.word(y)).scale(c) for c, x, y in pairs), TensorElement.zero())


def tensor_verdict(relation: str, expected: TensorElement, got: TensorElement, rs: RuleSet, *, gated: bool = True) -> RelationVerdict:
    e, g = normalize_tensor(expected, rs), normalize_tensor(got, rs)
    return relation_verdict(relation, e, g, e - g, gated=gated)


# ---------------------------------------------------------------------------
# hopf.base
# ---------------------------------------------------------------------------


def base_checks(cs: CoStructure) -> list[RelationVerdict]:
    """Coassociativity, counit and antipode laws, and Δ, ε, S on the presentation relations."""
    fs = rules.functions()
    coproduct = _on_words(cs.coproduct)
    antipode = _on_words(cs.antipode)
    out = []
    for s in rules.MATRIX:
        delta = cs.coproduct_generator(s)
        x = Element.word(s)
        unit = Element.scalar(cs.counit_symbol(s))
        out.append(tensor_verdict(f"coassociativity.{s}", delta.map_legs([None, coproduct]), delta.map_legs([coproduct, None]), fs))
        out.append(compare(f"counit.left.{s}", x, delta.counit_leg(0, cs.counit_word), lambda e: e))
        out.append(compare(f"counit.right.{s}", x, delta.counit_leg(1, cs.counit_word), lambda e: e))
        left = normalize(delta.map_legs([antipode, None]).multiply_out(), fs)
        right = normalize(delta.map_legs([None, antipode]).multiply_out(), fs)
        out.append(relation_verdict(f"antipode.left.{s}", unit, left, unit - left))
        out.append(relation_verdict(f"antipode.right.{s}", unit, right, unit - right))
    for rule in rules.rs_a().rules:
        relation = _relation(rule)
        image = normalize_tensor(cs.coproduct(relation), rules.rs_a())
        out.append(relation_verdict(f"coproduct.{rule.id}", 0, image, image))
        counit = cs.counit(relation)
        out.append(relation_verdict(f"counit.{rule.id}", 0, counit, counit))
        antipode_image = cs.antipode(relation)
        out.append(relation_verdict(f"antipode.{rule.id}", 0, antipode_image, antipode_image))
    return out


def koszul_ablation_check() -> RelationVerdict:
    """With the tensor sign rule off, Δ stops preserving at least one presentation relation."""
    unsigned = matrix_costructure(rules.functions(), koszul=False)
    broken = []
    for rule in rules.rs_a().rules:
        image = normalize_tensor(unsigned.coproduct(_relation(rule)), rules.rs_a())
        if not image.is_zero():
            broken.append(f"{rule.id}: {image}")
    return RelationVerdict(
        relation="koszul-ablation",
        expected="some relation broken without signs",
        got=f"{len(broken)} relations broken",
        residual="; ".join(broken) or "0",
        verdict="match" if broken else "mismatch",
    )


@registry.suite("hopf.base")
def base(context: SuiteContext) -> DiscrepancyReport:
    """Hopf superalgebra laws on the matrix entries."""
    settings = context.settings
    report = DiscrepancyReport(suite="hopf.base", table="coproduct, counit, antipode")
    report.extend(base_checks(matrix_costructure(rules.functions(), koszul=settings.koszul)))
    report.add(koszul_ablation_check())
    if not settings.koszul:
        report.notes.append("tensor sign rule disabled")
    return report


# ---------------------------------------------------------------------------
# hopf.extended
# ---------------------------------------------------------------------------

# Printed coaction tables, as (coefficient, first leg, second leg).
RIGHT_COACTION_TABLE: dict[str, Pairs] = {
    "a": [(1, "dLa", "a"), (1, "dLb", "g")],
    "b": [(1, "dLb", "d"), (1, "dLa", "b")],
    "g": [(1, "dLg", "a"), (1, "dLd", "g")],
    "d": [(1, "dLd", "d"), (1, "dLg", "b")],
}

LEFT_COACTION_TABLE: dict[str, Pairs] = {
    "a": [(1, "a", "dLa"), (-1, "b", "dLg")],
    "b": [(1, "a", "dLb"), (-1, "b", "dLd")],
    "g": [(-1, "g", "dLa"), (1, "d", "dLg")],
    "d": [(1, "d", "dLd"), (-1, "g", "dLb")],
}

PRODUCT_TARGETS = [(s, Element.word(s)) for s in rules.MATRIX] + [
    (f"{x}*{y}", Element.word(x, y)) for x in rules.MATRIX for y in rules.MATRIX
]


def _delta_word(w: Word) -> Element:
    return apply_delta(_word(w), "left")


def _tau_word(w: Word) -> Element:
    return tau(_word(w))


def invariance_verdicts(coaction: Callable[[Element], TensorElement], label: str, rule_sets: list[RuleSet]) -> list[RelationVerdict]:
    lc = rules.left_calculus()
    out = []
    for rs in rule_sets:
        for rule in rs.rules:
            image = normalize_tensor(coaction(_relation(rule)), lc)
            out.append(relation_verdict(f"{label}.{rule.id}", 0, image, image))
    return out


def coaction_product_verdicts(cs: CoStructure, side: str, graded: bool) -> list[RelationVerdict]:
    """Δ_R(δu) = (δ ⊗ τ)Δu and Δ_L(δu) = (id ⊗ δ)Δu on generators and their products."""
    lc = rules.left_calculus()
    if side == "right":
        coaction, legs = cs.right_coaction, [_delta_word, _tau_word if graded else None]
    else:
        coaction, legs = cs.left_coaction, [None if graded else _tau_word, _delta_word]
    out = []
    for name, u in PRODUCT_TARGETS:
        expected = cs.coproduct(u).map_legs(legs)
        got = coaction(apply_delta(u, "left"), graded=graded)
        out.append(tensor_verdict(f"{side}.{name}", expected, got, lc))
    return out


def coaction_identities(cs: CoStructure) -> list[RelationVerdict]:
    """Coassociativity and counit of both coactions, and their compatibility."""
    lc = rules.left_calculus()
    coproduct = _on_words(cs.coproduct)
    right = _on_words(cs.right_coaction)
    left = _on_words(cs.left_coaction)
    out = []
    for s in rules.MATRIX:
        ds = differential(s, "left")
        form = Element.word(ds)
        phi_r, phi_l = cs.phi_right(s), cs.phi_left(s)
        out.append(tensor_verdict(f"coassociativity.right.{ds}", phi_r.map_legs([None, coproduct]), phi_r.map_legs([right, None]), lc))
        out.append(compare(f"counit.right.{ds}", form, phi_r.counit_leg(1, cs.counit_word), lambda e: e))
        out.append(tensor_verdict(f"coassociativity.left.{ds}", phi_l.map_legs([coproduct, None]), phi_l.map_legs([None, left]), lc))
        out.append(compare(f"counit.left.{ds}", form, phi_l.counit_leg(0, cs.counit_word), lambda e: e))
        out.append(tensor_verdict(f"compatibility.{ds}", phi_l.map_legs([None, right]), phi_r.map_legs([left, None]), lc))
    return out


def extended_checks(cs: CoStructure) -> list[RelationVerdict]:
    lc = rules.left_calculus()
    two_sets = [rules.rs_ldiff(), rules.rs_dd()]
    out = []
    for s in rules.MATRIX:
        ds = differential(s, "left")
        out.append(tensor_verdict(f"coaction-table.right.{ds}", _tensor(RIGHT_COACTION_TABLE[s]), cs.phi_right(s, graded=False), lc))
        out.append(tensor_verdict(f"coaction-table.left.{ds}", _tensor(LEFT_COACTION_TABLE[s]), cs.phi_left(s, graded=False), lc))

    for side, coaction in (("right", cs.right_coaction), ("left", cs.left_coaction)):
        for rs in two_sets:
            verdicts = invariance_verdicts(coaction, f"invariance.{side}", [rs])
            out.append(aggregate(f"invariance.{side}.{rs.name}", verdicts))
        printed = invariance_verdicts(lambda e, c=coaction: c(e, graded=False), f"invariance.{side}.printed", two_sets)
        out.append(aggregate(f"invariance.{side}.printed-coaction", printed))
        for graded in (True, False):
            label = "graded" if graded else "printed"
            out.append(aggregate(f"coaction-product.{side}.{label}", coaction_product_verdicts(cs, side, graded)))

    out.extend(coaction_identities(cs))

    for s in rules.MATRIX:
        ds = differential(s, "left")
        value = cs.counit(Element.word(ds))
        out.append(relation_verdict(f"counit.{ds}", 0, value, value))
    counit_relations = []
    for rs in two_sets:
        for rule in rs.rules:
            value = cs.counit(_relation(rule))
            counit_relations.append(relation_verdict(rule.id, 0, value, value))
    out.append(aggregate("counit.relations", counit_relations))

    names = macros("left")
    for s in rules.MATRIX:
        out.append(compare(f"antipode-forms.{differential(s, 'left')}", parse(tables.ANTIPODE_FORMS[s], names),
                           cs.antipode_differential(s), lambda e: normalize(e, lc)))
    for s in rules.MATRIX:
        out.append(compare(f"antipode-forms.leibniz.{differential(s, 'left')}", parse(tables.ANTIPODE_FORMS_LEIBNIZ[s], names),
                           cs.antipode_differential(s), lambda e: normalize(e, lc)))
    antipode_relations = []
    for rule in rules.rs_ldiff().rules:
        image = cs.extended_antipode(_relation(rule))
        antipode_relations.append(relation_verdict(rule.id, 0, image, image))
    out.append(aggregate("antipode-invariance", antipode_relations, gated=False,
                         note="graded anti-multiplicative extension; the printed extension carries no sign"))
    return out


@registry.suite("hopf.extended")
def extended(context: SuiteContext) -> DiscrepancyReport:
    """Coactions, counit and antipode on the left differential algebra."""
    cs = matrix_costructure(rules.left_calculus(), koszul=context.settings.koszul)
    report = DiscrepancyReport(suite="hopf.extended", table="extended Hopf structure")
    report.extend(extended_checks(cs))
    report.notes.append("graded coactions: right (δ ⊗ τ)Δ, left (id ⊗ δ)Δ; printed: right (δ ⊗ id)Δ, left (τ ⊗ δ)Δ")
    return report


# ---------------------------------------------------------------------------
# hopf.partial
# ---------------------------------------------------------------------------

DERIVATIVE_COPRODUCT_TABLE: dict[str, Pairs] = {
    "pa": [(1, "pa", "pa"), (1, "pb", "pg")],
    "pb": [(1, "pa", "pb"), (1, "pb", "pd")],
    "pd": [(1, "pd", "pd"), (1, "pg", "pb")],
    "pg": [(1, "pg", "pa"), (1, "pd", "pg")],
}

DERIVATIVE_ANTIPODE_TABLE = {
    "pa": "pai + pai*pb*pdi*pg*pai",
    "pb": "-pai*pb*pdi",
    "pg": "-pdi*pg*pai",
    "pd": "pdi + pdi*pg*pai*pb*pdi",
}

DERIVATIVES = ("pa", "pb", "pg", "pd")


def partial_checks(settings: Settings) -> list[RelationVerdict]:
    di = rules.derivative_inverses()
    dcs = derivative_costructure(di, koszul=settings.koszul)
    mcs = matrix_costructure(rules.functions(), koszul=settings.koszul)
    antipode = _on_words(dcs.antipode)
    out = []
    for s in DERIVATIVES:
        out.append(tensor_verdict(f"coproduct.{s}", _tensor(DERIVATIVE_COPRODUCT_TABLE[s]), dcs.coproduct_generator(s), di))
        out.append(relation_verdict(f"counit.{s}", 1 if s in ("pa", "pd") else 0, dcs.counit_symbol(s),
                                    dcs.counit_symbol(s) - (1 if s in ("pa", "pd") else 0)))
        out.append(compare(f"antipode.{s}", parse(DERIVATIVE_ANTIPODE_TABLE[s]), dcs.antipode_symbol(s), lambda e: normalize(e, di)))
        unit = Element.scalar(dcs.counit_symbol(s))
        delta = dcs.coproduct_generator(s)
        law = normalize(delta.map_legs([antipode, None]).multiply_out(), di)
        out.append(relation_verdict(f"antipode-law.{s}", unit, law, unit - law))

    def mixed(symbol: str) -> TensorElement:
        return dcs.coproduct_generator(symbol) if symbol in DERIVATIVES else mcs.coproduct_generator(symbol)

    coproduct = dcs.multiplicative(mixed)
    rd = rules.right_derivatives()
    function_derivative = []
    derivative_derivative = []
    for rule in rules.rs_rderiv().rules:
        target = derivative_derivative if rule.id.startswith("PP") else function_derivative
        rs = rules.rs_pderiv() if rule.id.startswith("PP") else rd
        image = normalize_tensor(coproduct(_relation(rule)), rs)
        target.append(relation_verdict(f"invariance.{rule.id}", 0, image, image, gated=False))
    out.extend(function_derivative)
    out.extend(derivative_derivative)
    out.append(aggregate("invariance.function-derivative", function_derivative))
    out.append(aggregate("invariance.derivative-derivative", derivative_derivative))
    return out


@registry.suite("hopf.partial")
def partial(context: SuiteContext) -> DiscrepancyReport:
    """The co-structure of the right derivatives and its action on their relations."""
    report = DiscrepancyReport(suite="hopf.partial", table="derivative Hopf structure")
    report.extend(partial_checks(context.settings))
    return report
