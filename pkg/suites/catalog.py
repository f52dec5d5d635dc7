"""
The tensor product rule of the graded tensor algebra, as printed and as used.
"""

from __future__ import annotations

from utils import rules
from utils.algebra import Element, TensorElement, koszul_sign, tensor_mul, tensor_of
from utils.costructure import matrix_costructure
from utils.reports import DiscrepancyReport, RelationVerdict, relation_verdict
from suites.registry import SuiteContext, registry


def printed_product(x: TensorElement, y: TensorElement) -> TensorElement:
    """(A⊗B)(C⊗D) = (-1)^(|B||C|) AC⊗BC, the rule exactly as printed."""
    out = []
    for cx, (a, b) in x.terms:
        for cy, (c, _) in y.terms:
            out.append(((a + c, b + c), cx * cy * koszul_sign((a, b), (c, ()))))
    return TensorElement(out)


def koszul_check() -> list[RelationVerdict]:
    cs = matrix_costructure(rules.functions())
    delta = {s: cs.coproduct_generator(s) for s in rules.MATRIX}
    out = []

    expected = tensor_mul(delta["a"], delta["b"])
    got = printed_product(delta["a"], delta["b"])
    out.append(relation_verdict("printed-bc", expected, got, expected - got))

    one, b, g = Element.one(), Element.word("b"), Element.word("g")
    swap = tensor_mul(tensor_of(one, b), tensor_of(g, one))
    target = tensor_of(g, b).scale(-1)
    out.append(relation_verdict("odd-exchange", target, swap, target - swap))

    for x, y, z in (("a", "b", "g"), ("b", "g", "d"), ("g", "b", "g")):
        left = tensor_mul(tensor_mul(delta[x], delta[y]), delta[z])
        right = tensor_mul(delta[x], tensor_mul(delta[y], delta[z]))
        out.append(relation_verdict(f"associativity.{x}{y}{z}", left, right, left - right))
    return out


@registry.suite("catalog.koszul")
def koszul(context: SuiteContext) -> DiscrepancyReport:
    """The tensor product rule: the printed AC⊗BC reading against AC⊗BD."""
    report = DiscrepancyReport(suite="catalog.koszul", table="graded tensor product")
    report.extend(koszul_check())
    report.notes.append("the rule in use is (A⊗B)(C⊗D) = (-1)^(|B||C|) AC⊗BD")
    return report
