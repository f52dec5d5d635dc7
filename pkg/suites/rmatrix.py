"""
R-matrix suites: the Hecke and braid identities of R̂, covariance of the
superplane and its dual, the RTT presentation of the algebra and the
R-matrix form of the left differential calculus.
"""

from __future__ import annotations

from logging import getLogger
from typing import Sequence

from utils import rules
from utils.algebra import Element
from utils.config import VerifyConfig
from utils.costructure import tau
from utils.differentials import (
    MATRIX_ENTRIES,
    ONE_FORM_MATRIX,
    DifferentialConvention,
    Side,
    apply_delta,
    differential,
    expand_one_forms,
    reduce,
    two_by_two,
)
from utils.reports import DiscrepancyReport, RelationVerdict, matrix_verdict, relation_verdict
from utils.rewrite import RuleSet, normalize
from utils.scalars import Scalar
from utils.supermatrix import (
    CONVENTIONS,
    PAIR_PARITY,
    ConventionCalibrationFailed,
    GradedKroneckerConvention,
    build_rhat,
    entrywise,
    first_leg,
    identity,
    in_span,
    kron,
    kron_scalar,
    lift,
    matmul,
    matscale,
    matsub,
    parity_similarity,
    rhat_inverse,
    second_leg,
)
from suites.registry import SuiteContext, registry

logger = getLogger("glpq")

PAIR_LABELS = ["11", "12", "21", "22"]
TRIPLE_LABELS = [f"{i}{k}{l}" for i in (1, 2) for k in (1, 2) for l in (1, 2)]
Matrix = list[list[Element]]


def _same(e: Element) -> Element:
    return e


def _scalar_verdict(relation: str, lhs: Sequence[Sequence[Scalar]], rhs: Sequence[Sequence[Scalar]],
                    labels: Sequence[str], *, gated: bool = True, note: str | None = None) -> RelationVerdict:
    return matrix_verdict(relation, lift(lhs), lift(rhs), _same, labels=labels, gated=gated, note=note)


def frozen_convention(config: VerifyConfig) -> GradedKroneckerConvention:
    """The serialized convention, or a fresh calibration when none is recorded."""
    if config.kronecker_convention is None:
        classes = calibration_classes(calibrate())
        if len(classes) > 1:
            raise ConventionCalibrationFailed(
                f"Inequivalent Kronecker conventions reproduce the presentation: {classes}; record one in the config"
            )
        return CONVENTIONS[classes[0][0]]
    try:
        return CONVENTIONS[config.kronecker_convention]
    except KeyError:
        raise ConventionCalibrationFailed(
            f"Unknown Kronecker convention {config.kronecker_convention!r}; expected one of {', '.join(CONVENTIONS)}"
        ) from None


# ---------------------------------------------------------------------------
# rmatrix.hecke
# ---------------------------------------------------------------------------


def braid_sides(convention: GradedKroneckerConvention) -> tuple[list[list[Scalar]], list[list[Scalar]]]:
    """(R̂⊗I)(I⊗R̂)(R̂⊗I) and (I⊗R̂)(R̂⊗I)(I⊗R̂) on the triple tensor space."""
    rhat = build_rhat()
    r12, _ = kron_scalar(rhat, PAIR_PARITY, identity(2), [0, 1], convention)
    r23, _ = kron_scalar(identity(2), [0, 1], rhat, PAIR_PARITY, convention)
    return matmul(matmul(r12, r23), r12), matmul(matmul(r23, r12), r23)


def one_parameter_rhat() -> list[list[Scalar]]:
    q, zero, one = Scalar.q(), Scalar.zero(), Scalar.one()
    return [
        [q, zero, zero, zero],
        [zero, q - q.inverse(), one, zero],
        [zero, one, zero, zero],
        [zero, zero, zero, -q.inverse()],
    ]


def classical_rhat() -> list[list[Scalar]]:
    zero, one = Scalar.zero(), Scalar.one()
    return [
        [one, zero, zero, zero],
        [zero, zero, one, zero],
        [zero, one, zero, zero],
        [zero, zero, zero, -one],
    ]


def hecke_and_braid_check(convention: GradedKroneckerConvention) -> tuple[list[RelationVerdict], list[str]]:
    rhat = build_rhat()
    p, q = Scalar.p(), Scalar.q()
    one = identity(4)
    zero = [[Scalar.zero()] * 4 for _ in range(4)]
    notes = []

    hecke = matmul(matsub(rhat, matscale(one, q)), matsub(rhat, matscale(one, -p.inverse())))
    out = [
        _scalar_verdict("hecke", hecke, zero, PAIR_LABELS),
        _scalar_verdict("inverse", matmul(rhat, rhat_inverse()), one, PAIR_LABELS),
        _scalar_verdict("inverse.left", matmul(rhat_inverse(), rhat), one, PAIR_LABELS),
    ]

    graded = braid_sides(convention)
    out.append(_scalar_verdict(f"braid.{convention.name}", *graded, TRIPLE_LABELS))
    if convention.name != "ungraded":
        plain = braid_sides(CONVENTIONS["ungraded"])
        if plain == graded:
            notes.append(f"graded ({convention.name}) and ungraded Kronecker products agree on R̂")
        else:
            out.append(_scalar_verdict("braid.ungraded", *plain, TRIPLE_LABELS, gated=False))

    classical = [[entry.classical_limit() for entry in row] for row in rhat]
    out.append(_scalar_verdict("classical-limit", classical, classical_rhat(), PAIR_LABELS))
    specialized = [[entry.substitute({"p": q}) for entry in row] for row in rhat]
    out.append(_scalar_verdict("one-parameter", specialized, one_parameter_rhat(), PAIR_LABELS))
    return out, notes


@registry.suite("rmatrix.hecke")
def hecke(context: SuiteContext) -> DiscrepancyReport:
    """Hecke identity, invertibility and braid relation of R̂, and its specializations."""
    convention = frozen_convention(context.config)
    report = DiscrepancyReport(suite="rmatrix.hecke", table="R̂")
    verdicts, notes = hecke_and_braid_check(convention)
    report.extend(verdicts)
    report.notes.extend(notes)
    return report


# ---------------------------------------------------------------------------
# rmatrix.plane
# ---------------------------------------------------------------------------


def _transform(entries: tuple[tuple[str, str], ...], first: str, second: str) -> tuple[Element, Element]:
    """Row-by-row action of a 2x2 matrix of symbols on the column (first, second)."""
    top, bottom = entries
    return (
        Element.word(top[0], first) + Element.word(top[1], second),
        Element.word(bottom[0], first) + Element.word(bottom[1], second),
    )


LEFT_DIFFERENTIALS = tuple(tuple(differential(s, "left") for s in row) for row in MATRIX_ENTRIES)


def covariance_check() -> list[RelationVerdict]:
    """T and δ_L T carry the plane and its dual into the plane relations."""
    cov = rules.plane_covariance()
    out = []

    def vanish(relation: str, e: Element) -> None:
        image = normalize(e, cov)
        out.append(relation_verdict(relation, 0, image, image))

    x, th = _transform(MATRIX_ENTRIES, "x", "th")
    vanish("covariance.plane.x-th", x * th - th * x * Scalar.p())
    vanish("covariance.plane.th-th", th * th)

    ph, y = _transform(MATRIX_ENTRIES, "ph", "y")
    vanish("covariance.dual.ph-ph", ph * ph)
    vanish("covariance.dual.ph-y", ph * y - y * ph * Scalar.q().inverse())

    # δ_L T sends the plane to the dual plane and back.
    ph, y = _transform(LEFT_DIFFERENTIALS, "x", "th")
    vanish("differential.to-dual.ph-ph", ph * ph)
    vanish("differential.to-dual.ph-y", ph * y - y * ph * Scalar.q().inverse())

    x, th = _transform(LEFT_DIFFERENTIALS, "ph", "y")
    vanish("differential.to-plane.x-th", x * th - th * x * Scalar.p())
    vanish("differential.to-plane.th-th", th * th)
    return out


def _tensor_column(left: Sequence[str], right: Sequence[str], signs: Sequence[int] = (1, 1)) -> list[list[Element]]:
    """(u ⊗ v)_(i,k) = sign_i u_i v_k as a column over the pair index."""
    return [[Element.word(left[i], right[k], coefficient=signs[i])] for i in range(2) for k in range(2)]


def vector_form_check() -> list[RelationVerdict]:
    rhat = lift(build_rhat())
    p, q = Scalar.p(), Scalar.q()
    plane = rules.rs_plane()
    mixed = rules.plane_mixed()
    xx = _tensor_column(("x", "th"), ("x", "th"))
    out = [
        matrix_verdict("vector.plane", xx, matscale(matmul(rhat, xx), q.inverse()),
                       lambda e: normalize(e, plane), labels=PAIR_LABELS),
    ]
    graded = _tensor_column(("x", "th"), ("ph", "y"), signs=(1, -1))
    swapped = _tensor_column(("ph", "y"), ("x", "th"))
    out.append(matrix_verdict("vector.mixed", graded, matscale(matmul(rhat, swapped), p),
                              lambda e: normalize(e, mixed), labels=PAIR_LABELS))
    return out


def leibniz_check(side: Side) -> list[RelationVerdict]:
    """Reading the dual coordinates as differentials, δ must respect the plane relations."""
    conv = DifferentialConvention.for_side(
        side,
        {"x": Element.word("ph"), "th": Element.word("y"), "ph": Element.zero(), "y": Element.zero()},
    )
    mixed = rules.plane_mixed()
    out = []
    for name, relation in (("x-th", Element.word("x", "th") - Element.word("th", "x", coefficient=Scalar.p())),
                           ("th-th", Element.word("th", "th"))):
        image = normalize(apply_delta(relation, conv), mixed)
        out.append(relation_verdict(f"leibniz.{side}.{name}", 0, image, image))
    return out


@registry.suite("rmatrix.plane")
def plane(context: SuiteContext) -> DiscrepancyReport:
    """Covariance of the superplane and its dual, and their vector forms with R̂."""
    report = DiscrepancyReport(suite="rmatrix.plane", table="quantum superplane")
    report.extend(covariance_check())
    report.extend(vector_form_check())
    for side in ("left", "right"):
        report.extend(leibniz_check(side))
    report.notes.append("dual coordinates read as δx = ph, δth = y")
    return report


# ---------------------------------------------------------------------------
# rmatrix.rtt
# ---------------------------------------------------------------------------


def matrix_t() -> Matrix:
    return two_by_two(MATRIX_ENTRIES, {s: Element.word(s) for s in rules.MATRIX})


def rtt_residual(convention: GradedKroneckerConvention) -> Matrix:
    """R̂T₁T₂ − T₁T₂R̂, unnormalized."""
    rhat = lift(build_rhat())
    t = matrix_t()
    t12 = matmul(first_leg(t, convention), second_leg(t, convention))
    return matsub(matmul(rhat, t12), matmul(t12, rhat))


def _vanishes(m: Matrix, rs: RuleSet) -> bool:
    return all(normalize(entry, rs).is_zero() for row in m for entry in row)


def conjugate_conventions(first: GradedKroneckerConvention, second: GradedKroneckerConvention) -> bool:
    """Whether `second` is `first` conjugated by the parity similarity, with R̂ fixed by it."""
    ones = [[Scalar.one(), Scalar.one()], [Scalar.one(), Scalar.one()]]
    d, rhat = parity_similarity(), build_rhat()
    if matmul(matmul(d, rhat), d) != rhat:
        return False
    return kron(ones, ones, second) == matmul(matmul(d, kron(ones, ones, first)), d)


def calibrate() -> list[str]:
    """Every candidate convention under which the RTT equation reproduces the presentation."""
    rs = rules.rs_a()
    passing = [name for name, convention in CONVENTIONS.items() if _vanishes(rtt_residual(convention), rs)]
    if not passing:
        raise ConventionCalibrationFailed("No Kronecker sign convention reproduces the presentation relations")
    logger.debug(f"calibration: {', '.join(passing)} reproduce the presentation")
    return passing


def calibration_classes(passing: Sequence[str]) -> list[list[str]]:
    """Passing conventions grouped up to conjugation by the parity similarity."""
    classes: list[list[str]] = []
    for name in passing:
        for group in classes:
            if conjugate_conventions(CONVENTIONS[group[0]], CONVENTIONS[name]):
                group.append(name)
                break
        else:
            classes.append([name])
    return classes


def rtt_check(config: VerifyConfig) -> list[RelationVerdict]:
    rs = rules.rs_a()
    passing = calibrate()
    classes = calibration_classes(passing)
    out = []
    for name in CONVENTIONS:
        ok = name in passing
        out.append(RelationVerdict(
            relation=f"calibration.{name}",
            expected="16 zero entries",
            got="16 zero entries" if ok else "nonzero entries",
            residual="0" if ok else "RTT does not close under RS_A",
            verdict="match" if ok else "mismatch",
            gated=False,
        ))
    described = "; ".join(", ".join(group) for group in classes)
    out.append(RelationVerdict(
        relation="calibration.equivalence",
        expected="one class up to parity conjugation",
        got=f"{len(classes)} class(es): {described}",
        residual="0" if len(classes) == 1 else f"inequivalent conventions pass: {described}",
        verdict="match" if len(classes) == 1 else "mismatch",
    ))
    recorded = config.kronecker_convention
    selected = recorded if recorded in passing else passing[0]
    out.append(RelationVerdict(
        relation="calibration.frozen",
        expected=str(recorded),
        got=selected,
        residual="0" if recorded in (None, *passing) else f"passing: {', '.join(passing)}",
        verdict="match" if recorded in (None, *passing) else "mismatch",
    ))

    residual = rtt_residual(CONVENTIONS[selected])
    for r, row in enumerate(residual):
        for c, entry in enumerate(row):
            image = normalize(entry, rs)
            out.append(relation_verdict(f"entry.{PAIR_LABELS[r]},{PAIR_LABELS[c]}", 0, image, image))

    raw = [entry for row in residual for entry in row]
    for rule in rs.rules:
        relation = Element([(rule.lhs, 1)]) - rule.rhs
        found = in_span(relation, raw)
        out.append(RelationVerdict(
            relation=f"span.{rule.id}",
            expected="in the span of the RTT entries",
            got="in span" if found else "outside span",
            residual="0" if found else str(relation),
            verdict="match" if found else "mismatch",
        ))
    return out


@registry.suite("rmatrix.rtt")
def rtt(context: SuiteContext) -> DiscrepancyReport:
    """R̂T₁T₂ = T₁T₂R̂ against the presentation, with the Kronecker convention calibrated."""
    report = DiscrepancyReport(suite="rmatrix.rtt", table="RTT relation")
    report.extend(rtt_check(context.config))
    return report


# ---------------------------------------------------------------------------
# rmatrix.calculus
# ---------------------------------------------------------------------------


def _left(e: Element) -> Element:
    return reduce(expand_one_forms(e, "left"), "left")


def _delta(e: Element) -> Element:
    return apply_delta(e, "left")


def calculus_from_r_check(convention: GradedKroneckerConvention) -> list[RelationVerdict]:
    """
    The left calculus in matrix form.

    Primes are the parity automorphism applied entrywise. δ(T_2) differentiates
    the entries of T_2, while (δT)_2 and Ω_2 embed matrices of form degree one
    in the second leg. Every entry is normalized in the left calculus with the
    one-forms expanded.
    """
    p, q = Scalar.p(), Scalar.q()
    qp = q * p.inverse()
    rhat, rinv = lift(build_rhat()), lift(rhat_inverse())
    t = matrix_t()
    omega = two_by_two(ONE_FORM_MATRIX["left"], {s: Element.word(s) for row in ONE_FORM_MATRIX["left"] for s in row})

    t1, t2 = first_leg(t, convention), second_leg(t, convention)
    dt1, dt2 = entrywise(t1, _delta), entrywise(t2, _delta)
    dt_2 = second_leg(entrywise(t, _delta), convention, degree=1)
    t2p = entrywise(t2, tau)
    o1, o2 = first_leg(omega, convention), second_leg(omega, convention, degree=1)
    o2p = entrywise(o2, tau)

    def sandwich(middle: Matrix, factor: Scalar) -> Matrix:
        return matscale(matmul(matmul(rinv, middle), rinv), factor)

    def check(relation: str, lhs: Matrix, rhs: Matrix) -> RelationVerdict:
        return matrix_verdict(relation, lhs, rhs, _left, labels=PAIR_LABELS)

    return [
        check("differential-rtt", matmul(t1, dt2), sandwich(matmul(dt1, t2p), qp)),
        check("differential-rtt.sign-carried", matmul(t1, dt_2), sandwich(matmul(dt1, t2p), -qp)),
        check("differential-second-leg", dt2, matscale(dt_2, -Scalar.one())),
        check("two-form-rtt", matmul(dt1, entrywise(dt2, tau)), sandwich(matmul(dt1, entrywise(t2p, _delta)), qp)),
        check("oneform-function", matmul(o1, t2p), matscale(matmul(matmul(matmul(t2, rhat), o2), rhat), -p * q.inverse())),
        check("oneform-differential", matmul(o1, entrywise(dt2, tau)), matmul(matmul(matmul(dt2, rhat), o2p), rinv)),
        check(
            "oneform-oneform",
            matmul(matmul(matmul(rhat, o2), rhat), o2p),
            matscale(matmul(matmul(matmul(o2, rhat), o2p), rinv), -qp),
        ),
    ]


@registry.suite("rmatrix.calculus")
def calculus_from_r(context: SuiteContext) -> DiscrepancyReport:
    """Matrix equations of the left calculus built from R̂."""
    convention = frozen_convention(context.config)
    report = DiscrepancyReport(suite="rmatrix.calculus", table="R-matrix form of the left calculus")
    report.extend(calculus_from_r_check(convention))
    report.notes.append(f"Kronecker convention: {convention.name}")
    return report

