"""
The shipped rewrite tables.

Only the presentation relations, the differential and derivative tables and
the plane relations are axioms; every other table the suites compare against
is recomputed from these. Each table is kept in the `id | lhs | rhs` text
form and parsed once on first use.
"""

from __future__ import annotations

import re
from functools import lru_cache
from logging import getLogger
from typing import Callable

from utils.algebra import Element, generator, grade
from utils.rewrite import RewriteRule, RuleSet, complete_inverses

logger = getLogger("glpq")

FUNCTION_RANK = ["g", "b", "d", "di", "a", "ai"]
LEFT_DIFFERENTIAL_RANK = ["dLg", "dLb", "dLd", "dLa"]
RIGHT_DIFFERENTIAL_RANK = ["dRg", "dRb", "dRd", "dRa"]
RIGHT_DERIVATIVE_RANK = ["pg", "pb", "pd", "pdi", "pa", "pai"]
LEFT_DERIVATIVE_RANK = ["pLg", "pLb", "pLd", "pLa"]
PLANE_RANK = ["y", "ph", "th", "x"]

MATRIX = ("a", "b", "g", "d")
INVERTIBLES = {"a": "ai", "d": "di"}
DERIVATIVE_INVERTIBLES = {"pa": "pai", "pd": "pdi"}

RS_A_TEXT = """
A1 | a*b | q*b*a
A2 | d*b | q*b*d
A3 | a*g | p*g*a
A4 | d*g | p*g*d
A5 | b*g | -p*q^-1*g*b
A6 | b*b | 0
A7 | g*g | 0
A8 | a*d | d*a + (p - q^-1)*g*b
"""

RS_DD_TEXT = """
DD1 | dLa*dLb | p^-1*dLb*dLa
DD2 | dLd*dLb | p^-1*dLb*dLd
DD3 | dLa*dLg | q^-1*dLg*dLa
DD4 | dLd*dLg | q^-1*dLg*dLd
DD5 | dLa*dLd | -dLd*dLa
DD6 | dLa*dLa | 0
DD7 | dLd*dLd | 0
DD8 | dLb*dLg | p*q^-1*dLg*dLb + (p - q^-1)*dLd*dLa
"""

# The fourth rule multiplies the whole bracket by (q^-1 - p); this is the
# reading under which the left calculus is locally confluent.
RS_LDIFF_TEXT = """
LD1 | dLa*a | p*q*a*dLa
LD2 | dLa*b | -q*b*dLa + (1 - p*q)*a*dLb
LD3 | dLa*g | -p*g*dLa + (1 - p*q)*a*dLg
LD4 | dLa*d | d*dLa + (q^-1 - p)*(q*p^-1*b*dLg - g*dLb + (p^-1 - q)*a*dLd)
LD5 | dLb*a | p*a*dLb
LD6 | dLb*g | p*q^-1*g*dLb + (p - q^-1)*a*dLd
LD7 | dLb*b | b*dLb
LD8 | dLb*d | q^-1*d*dLb + (p^-1*q^-1 - 1)*b*dLd
LD9 | dLg*a | q*a*dLg
LD10 | dLg*b | q*p^-1*b*dLg + (p^-1 - q)*a*dLd
LD11 | dLg*g | g*dLg
LD12 | dLg*d | p^-1*d*dLg + (p^-1*q^-1 - 1)*g*dLd
LD13 | dLd*a | a*dLd
LD14 | dLd*b | -p^-1*b*dLd
LD15 | dLd*g | -q^-1*g*dLd
LD16 | dLd*d | p^-1*q^-1*d*dLd
"""

RS_RDIFF_TEXT = """
RD1 | a*dRa | p*q*dRa*a
RD2 | a*dRb | q*dRb*a + (p*q - 1)*dRa*b
RD3 | a*dRg | p*dRg*a + (p*q - 1)*dRa*g
RD4 | a*dRd | dRd*a + (p - q^-1)*(dRg*b - q*p^-1*dRb*g + (q - p^-1)*dRa*d)
RD5 | b*dRa | -p*dRa*b
RD6 | b*dRb | dRb*b
RD7 | b*dRg | p*q^-1*dRg*b + (p - q^-1)*dRa*d
RD8 | b*dRd | -q^-1*dRd*b + (1 - p^-1*q^-1)*dRb*d
RD9 | g*dRa | -q*dRa*g
RD10 | g*dRg | dRg*g
RD11 | g*dRb | q*p^-1*dRb*g + (p^-1 - q)*dRa*d
RD12 | g*dRd | -p^-1*dRd*g + (1 - p^-1*q^-1)*dRg*d
RD13 | d*dRa | dRa*d
RD14 | d*dRb | p^-1*dRb*d
RD15 | d*dRg | q^-1*dRg*d
RD16 | d*dRd | p^-1*q^-1*dRd*d
"""

RS_PFUNC_TEXT = """
PR1 | pa*a | 1 + p*q*a*pa + (p*q - 1)*((1 - p^-1*q^-1)*d*pd + b*pb + g*pg)
PR2 | pa*b | p*b*pa + (q^-1 - p)*d*pg
PR3 | pa*g | q*g*pa + (q - p^-1)*d*pb
PR4 | pa*d | d*pa
PR5 | pb*a | q*a*pb + (p^-1 - q)*g*pd
PR6 | pb*d | p^-1*d*pb
PR7 | pb*b | 1 - b*pb + (p^-1*q^-1 - 1)*d*pd
PR8 | pb*g | -q*p^-1*g*pb
PR9 | pg*a | p*a*pg + (p - q^-1)*b*pd
PR10 | pg*b | -p*q^-1*b*pg
PR11 | pg*g | 1 - g*pg + (p^-1*q^-1 - 1)*d*pd
PR12 | pg*d | q^-1*d*pg
PR13 | pd*a | a*pd
PR14 | pd*b | q^-1*b*pd
PR15 | pd*g | p^-1*g*pd
PR16 | pd*d | 1 + p^-1*q^-1*d*pd
"""

RS_PDERIV_TEXT = """
PP1 | pa*pb | p^-1*pb*pa
PP2 | pd*pb | p^-1*pb*pd
PP3 | pa*pg | q^-1*pg*pa
PP4 | pd*pg | q^-1*pg*pd
PP5 | pb*pg | -p*q^-1*pg*pb
PP6 | pb*pb | 0
PP7 | pg*pg | 0
PP8 | pa*pd | pd*pa + (p - q^-1)*pg*pb
"""

# The first rule is read without the stray trailing factor: a*pLa has no
# homogeneous reading with three symbols on the right. The bracket in the
# last rule carries p^-1*q^-1 - 1; with the opposite sign the table has
# unresolved overlaps.
RS_LFUNC_TEXT = """
PL1 | a*pLa | 1 + p*q*pLa*a
PL2 | a*pLd | pLd*a
PL3 | a*pLb | p*pLb*a
PL4 | a*pLg | q*pLg*a
PL5 | b*pLa | q*pLa*b
PL6 | b*pLb | 1 - pLb*b + (p*q - 1)*pLa*a
PL7 | b*pLg | -q*p^-1*pLg*b
PL8 | b*pLd | p^-1*pLd*b + (q - p^-1)*pLg*a
PL9 | g*pLa | p*pLa*g
PL10 | g*pLg | 1 - pLg*g + (p*q - 1)*pLa*a
PL11 | g*pLb | -p*q^-1*pLb*g
PL12 | g*pLd | q^-1*pLd*g + (q^-1 - p)*pLb*a
PL13 | d*pLa | pLa*d
PL14 | d*pLb | q^-1*pLb*d + (p - q^-1)*pLa*g
PL15 | d*pLg | p^-1*pLg*d + (p^-1 - q)*pLa*b
PL16 | d*pLd | 1 + p^-1*q^-1*pLd*d + (p^-1*q^-1 - 1)*((1 - p*q)*pLa*a + pLb*b + pLg*g)
"""

RS_PLANE_TEXT = """
PLANE1 | x*th | p*th*x
PLANE2 | th*th | 0
PLANE3 | ph*ph | 0
PLANE4 | ph*y | q^-1*y*ph
"""

RS_PLANE_MIXED_TEXT = """
MIX1 | x*ph | p*q*ph*x
MIX2 | x*y | p*y*x + (p*q - 1)*ph*th
MIX3 | th*ph | -q*ph*th
MIX4 | th*y | y*th
"""


def _relabel(text: str, mapping: dict[str, str], prefix: tuple[str, str]) -> str:
    """Rename symbols and the id prefix of a rule table, token by token."""
    def swap(match: re.Match) -> str:
        token = match.group(0)
        return mapping.get(token, token)

    out = []
    for line in text.strip().splitlines():
        rule_id, lhs, rhs = (part.strip() for part in line.split("|"))
        rule_id = rule_id.replace(prefix[0], prefix[1], 1)
        lhs = re.sub(r"[A-Za-z]\w*", swap, lhs)
        rhs = re.sub(r"[A-Za-z]\w*", swap, rhs)
        out.append(f"{rule_id} | {lhs} | {rhs}")
    return "\n".join(out)


RS_DD_R_TEXT = _relabel(RS_DD_TEXT, {f"dL{s}": f"dR{s}" for s in MATRIX}, ("DD", "DR"))
RS_LDERIV_PP_TEXT = _relabel(RS_PDERIV_TEXT, {f"p{s}": f"pL{s}" for s in MATRIX}, ("PP", "PLL"))


def _graded_commutation(name: str, movers: list[str], stayers: list[str], rank: list[str], prefix: str) -> RuleSet:
    """Rules X*M -> (-1)^(|X||M|) M*X moving every `stayer` M left of every `mover` X."""
    rules = []
    for x in movers:
        for m in stayers:
            sign = -1 if grade((x,)) and grade((m,)) else 1
            rules.append(RewriteRule(f"{prefix}.{x}.{m}", (x, m), Element.word(m, x, coefficient=sign)))
    return RuleSet(name, rules, rank)


# ---------------------------------------------------------------------------
# Named tables
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def rs_a() -> RuleSet:
    return RuleSet.from_text(RS_A_TEXT, name="RS_A", rank=FUNCTION_RANK)


@lru_cache(maxsize=None)
def rs_dd() -> RuleSet:
    return RuleSet.from_text(RS_DD_TEXT, name="RS_DD", rank=LEFT_DIFFERENTIAL_RANK)


@lru_cache(maxsize=None)
def rs_dd_r() -> RuleSet:
    return RuleSet.from_text(RS_DD_R_TEXT, name="RS_DD_R", rank=RIGHT_DIFFERENTIAL_RANK)


@lru_cache(maxsize=None)
def rs_ldiff() -> RuleSet:
    return RuleSet.from_text(RS_LDIFF_TEXT, name="RS_LDIFF", rank=FUNCTION_RANK + LEFT_DIFFERENTIAL_RANK)


@lru_cache(maxsize=None)
def rs_rdiff() -> RuleSet:
    return RuleSet.from_text(RS_RDIFF_TEXT, name="RS_RDIFF", rank=RIGHT_DIFFERENTIAL_RANK + FUNCTION_RANK)


@lru_cache(maxsize=None)
def rs_pderiv() -> RuleSet:
    return RuleSet.from_text(RS_PDERIV_TEXT, name="RS_PDERIV", rank=RIGHT_DERIVATIVE_RANK)


@lru_cache(maxsize=None)
def rs_rderiv() -> RuleSet:
    text = RS_PFUNC_TEXT + RS_PDERIV_TEXT
    return RuleSet.from_text(text, name="RS_RDERIV", rank=FUNCTION_RANK + RIGHT_DERIVATIVE_RANK)


@lru_cache(maxsize=None)
def rs_lderiv() -> RuleSet:
    text = RS_LFUNC_TEXT + "\n" + RS_LDERIV_PP_TEXT
    return RuleSet.from_text(text, name="RS_LDERIV", rank=LEFT_DERIVATIVE_RANK + FUNCTION_RANK)


@lru_cache(maxsize=None)
def rs_plane() -> RuleSet:
    return RuleSet.from_text(RS_PLANE_TEXT, name="RS_PLANE", rank=PLANE_RANK)


@lru_cache(maxsize=None)
def plane_mixed() -> RuleSet:
    """The plane and its dual with the mixed commutation rules between them."""
    return RuleSet.from_text(RS_PLANE_TEXT + RS_PLANE_MIXED_TEXT, name="plane_mixed", rank=PLANE_RANK)


@lru_cache(maxsize=None)
def rs_plane_cov() -> RuleSet:
    """Matrix entries and left differentials graded-commute with plane coordinates."""
    stayers = FUNCTION_RANK + LEFT_DIFFERENTIAL_RANK
    return _graded_commutation("RS_PLANE_COV", PLANE_RANK, stayers, stayers + PLANE_RANK, "COV")


# ---------------------------------------------------------------------------
# Working sets
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def functions() -> RuleSet:
    """The presentation relations with a⁻¹, d⁻¹ adjoined."""
    return complete_inverses(rs_a(), INVERTIBLES, name="functions")


@lru_cache(maxsize=None)
def left_calculus() -> RuleSet:
    base = rs_ldiff().union(rs_a(), rs_dd(), name="RS_A+RS_LDIFF+RS_DD")
    return complete_inverses(base, INVERTIBLES, name="left_calculus")


@lru_cache(maxsize=None)
def right_calculus() -> RuleSet:
    base = rs_rdiff().union(rs_a(), rs_dd_r(), name="RS_A+RS_RDIFF+RS_DD_R")
    return complete_inverses(base, INVERTIBLES, name="right_calculus")


@lru_cache(maxsize=None)
def right_derivatives() -> RuleSet:
    return rs_rderiv().union(rs_a(), name="right_derivatives")


@lru_cache(maxsize=None)
def left_derivatives() -> RuleSet:
    return rs_lderiv().union(rs_a(), name="left_derivatives")


@lru_cache(maxsize=None)
def derivative_inverses() -> RuleSet:
    """The derivative relations with formal inverses of the diagonal derivatives."""
    return complete_inverses(rs_pderiv(), DERIVATIVE_INVERTIBLES, name="derivative_inverses")


@lru_cache(maxsize=None)
def plane_covariance() -> RuleSet:
    return rs_plane_cov().union(left_calculus(), rs_plane(), name="plane_covariance")


NAMED_SETS: dict[str, Callable[[], RuleSet]] = {
    "RS_A": rs_a,
    "RS_DD": rs_dd,
    "RS_DD_R": rs_dd_r,
    "RS_LDIFF": rs_ldiff,
    "RS_RDIFF": rs_rdiff,
    "RS_RDERIV": rs_rderiv,
    "RS_PDERIV": rs_pderiv,
    "RS_LDERIV": rs_lderiv,
    "RS_PLANE": rs_plane,
    "plane_mixed": plane_mixed,
    "RS_PLANE_COV": rs_plane_cov,
    "functions": functions,
    "left_calculus": left_calculus,
    "right_calculus": right_calculus,
    "right_derivatives": right_derivatives,
    "left_derivatives": left_derivatives,
    "derivative_inverses": derivative_inverses,
    "plane_covariance": plane_covariance,
}

AXIOM_SETS = ("RS_A", "RS_DD", "RS_DD_R", "RS_LDIFF", "RS_RDIFF", "RS_RDERIV", "RS_PDERIV", "RS_LDERIV", "RS_PLANE")


def rule_set(name: str) -> RuleSet:
    try:
        factory = NAMED_SETS[name]
    except KeyError:
        raise KeyError(f"Unknown rule set {name!r}; expected one of {', '.join(NAMED_SETS)}") from None
    rs = factory()
    logger.debug(f"Loaded {rs!r}")
    return rs


def is_graded_commutation(rule: RewriteRule) -> bool:
    """True when `rule` reads xy = ±yx with the graded sign, or xy = 0 for x odd."""
    x, y = rule.lhs
    sign = -1 if generator(x).grade and generator(y).grade else 1
    if rule.rhs.is_zero():
        return x == y and generator(x).grade == 1
    return rule.rhs == Element.word(y, x, coefficient=sign)
