"""
Oriented rewriting over the free algebra: exhaustive normalization, a local
confluence audit, and the inverse-adjunction completion used for a⁻¹, d⁻¹.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from logging import getLogger
from typing import Callable, Iterable, Mapping, Sequence

from utils.algebra import Element, Word, form_degree, grade, word_text
from utils.scalars import Scalar

logger = getLogger("glpq")

DEFAULT_STEP_LIMIT = 1_000_000


class RewriteError(Exception):
    """Base error for rewriting."""


class StepLimitExceeded(RewriteError):
    """Raised when normalization does not finish within the step limit."""

    def __init__(self, message: str, overlap: Word | None = None):
        super().__init__(message)
        self.overlap = overlap


class UnsolvableRule(RewriteError):
    """Raised when a rule cannot be formally solved for an inverse generator."""


class InvalidRuleSet(RewriteError):
    """Raised when a rule set breaks the orientation or homogeneity discipline."""


@dataclass(frozen=True)
class RewriteRule:
    id: str
    lhs: Word
    rhs: Element

    def to_text(self) -> str:
        return f"{self.id} | {word_text(self.lhs)} | {self.rhs}"


def _is_sorted(word: Word, rank: Mapping[str, int]) -> bool:
    return all(rank[x] <= rank[y] for x, y in zip(word, word[1:]))


def _validate_rule(rule: RewriteRule, rank: Mapping[str, int]) -> None:
    lhs = rule.lhs
    if len(lhs) not in (1, 2):
        raise InvalidRuleSet(f"Rule {rule.id}: lhs must have one or two symbols")
    for symbol in set(lhs) | rule.rhs.symbols():
        if symbol not in rank:
            raise InvalidRuleSet(f"Rule {rule.id}: {symbol!r} is not ranked")
    g, f = grade(lhs), form_degree(lhs)
    for _, w in rule.rhs.terms:
        if grade(w) != g or form_degree(w) != f:
            raise InvalidRuleSet(f"Rule {rule.id}: {word_text(w)} is not homogeneous with {word_text(lhs)}")
        if any(w[i:i + len(lhs)] == lhs for i in range(len(w) - len(lhs) + 1)):
            raise InvalidRuleSet(f"Rule {rule.id}: lhs reappears in its rhs")
        if len(w) >= len(lhs) and not _is_sorted(w, rank):
            raise InvalidRuleSet(f"Rule {rule.id}: rhs word {word_text(w)} is neither sorted nor shorter")
    if len(lhs) == 2:
        descending = rank[lhs[0]] > rank[lhs[1]]
        shrinking = all(len(w) < 2 for _, w in rule.rhs.terms)
        if not (descending or shrinking):
            raise InvalidRuleSet(f"Rule {rule.id}: lhs {word_text(lhs)} is already sorted")


class RuleSet:
    """
    An immutable, validated collection of rewrite rules with a rank order.

    Rules are tried in declaration order. Normal forms of single words are
    memoized per rule set.
    """

    def __init__(self, name: str, rules: Iterable[RewriteRule], rank: Sequence[str], *, validate: bool = True):
        self.name = name
        self.rules: tuple[RewriteRule, ...] = tuple(rules)
        self.rank_order: tuple[str, ...] = tuple(dict.fromkeys(rank))
        self.rank: dict[str, int] = {s: i for i, s in enumerate(self.rank_order)}
        self._index: dict[Word, RewriteRule] = {}
        for rule in self.rules:
            if rule.lhs in self._index:
                raise InvalidRuleSet(f"{name}: duplicate lhs {word_text(rule.lhs)} in {rule.id}")
            self._index[rule.lhs] = rule
        if validate:
            for rule in self.rules:
                _validate_rule(rule, self.rank)
        self._cache: dict[Word, Element] = {}

    def __repr__(self) -> str:
        return f"RuleSet({self.name!r}, {len(self.rules)} rules)"

    def __len__(self) -> int:
        return len(self.rules)

    def rule(self, rule_id: str) -> RewriteRule:
        for rule in self.rules:
            if rule.id == rule_id:
                return rule
        raise KeyError(rule_id)

    def lookup(self, lhs: Word) -> RewriteRule | None:
        return self._index.get(lhs)

    def union(self, *others: "RuleSet", name: str | None = None) -> "RuleSet":
        """Merge rule lists and ranks; rank of self wins, new symbols append in order."""
        rules = list(self.rules)
        seen = {r.lhs: r for r in rules}
        rank = list(self.rank_order)
        for other in others:
            for rule in other.rules:
                if rule.lhs in seen:
                    if seen[rule.lhs].rhs != rule.rhs:
                        raise InvalidRuleSet(f"Conflicting rules for {word_text(rule.lhs)}: {seen[rule.lhs].id} and {rule.id}")
                    continue
                seen[rule.lhs] = rule
                rules.append(rule)
            rank = _merge_ranks(rank, list(other.rank_order))
        merged = name or "+".join([self.name] + [o.name for o in others])
        return RuleSet(merged, rules, rank)

    def renamed(self, name: str) -> "RuleSet":
        return RuleSet(name, self.rules, self.rank_order, validate=False)

    def map_coefficients(self, f: Callable[[Scalar], Scalar]) -> list[RewriteRule]:
        return [RewriteRule(r.id, r.lhs, r.rhs.map_coefficients(f)) for r in self.rules]

    # -- text format ------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"# name: {self.name}", f"# rank: {' '.join(self.rank_order)}"]
        lines.extend(rule.to_text() for rule in self.rules)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, *, name: str | None = None, rank: Sequence[str] | None = None) -> "RuleSet":
        from utils.parser import parse, parse_word

        parsed_name, parsed_rank = name, list(rank) if rank is not None else None
        rules: list[RewriteRule] = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, _, value = line[1:].partition(":")
                if key.strip() == "name" and parsed_name is None:
                    parsed_name = value.strip()
                elif key.strip() == "rank" and parsed_rank is None:
                    parsed_rank = value.split()
                continue
            try:
                rule_id, lhs_text, rhs_text = (part.strip() for part in line.split("|"))
            except ValueError:
                raise InvalidRuleSet(f"Malformed rule line: {raw!r}") from None
            rules.append(RewriteRule(rule_id, parse_word(lhs_text), parse(rhs_text)))
        if parsed_rank is None:
            raise InvalidRuleSet("Rule text carries no rank order")
        return cls(parsed_name or "rules", rules, parsed_rank)


def _merge_ranks(left: list[str], right: list[str]) -> list[str]:
    """Insert unseen symbols of `right` after their nearest ranked predecessor."""
    merged = list(left)
    anchor = -1
    for symbol in right:
        if symbol in merged:
            anchor = merged.index(symbol)
            continue
        merged.insert(anchor + 1, symbol)
        anchor += 1
    return merged


def _leftmost_redex(word: Word, index: Mapping[Word, RewriteRule], order: Mapping[str, int]) -> tuple[int, RewriteRule] | None:
    for i in range(len(word)):
        single = index.get(word[i:i + 1])
        pair = index.get(word[i:i + 2]) if i + 1 < len(word) else None
        if single and pair:
            return (i, single) if order[single.id] <= order[pair.id] else (i, pair)
        if single or pair:
            return i, single or pair
    return None


def _apply(word: Word, position: int, rule: RewriteRule) -> list[tuple[Word, Scalar]]:
    prefix, suffix = word[:position], word[position + len(rule.lhs):]
    return [(prefix + w + suffix, c) for c, w in rule.rhs.terms]


def rewrite(
    e: Element,
    rules: Sequence[RewriteRule],
    *,
    step_limit: int = DEFAULT_STEP_LIMIT,
    cache: dict[Word, Element] | None = None,
) -> Element:
    """
    Leftmost-innermost rewriting of `e` to a fixpoint.

    Works on any rule list; the rule list is not validated, so callers that
    need a termination witness should go through `normalize`.
    """
    index: dict[Word, RewriteRule] = {}
    for rule in rules:
        index.setdefault(rule.lhs, rule)
    order = {rule.id: i for i, rule in enumerate(rules)}
    cache = {} if cache is None else cache

    result: dict[Word, Scalar] = {}
    steps = 0
    for top_coefficient, top_word in e.terms:
        if top_word in cache:
            normal = cache[top_word]
        else:
            pending: dict[Word, Scalar] = {top_word: Scalar.one()}
            done: dict[Word, Scalar] = {}
            while pending:
                word, coefficient = pending.popitem()
                if coefficient.is_zero():
                    continue
                if word in cache:
                    for c, w in cache[word].terms:
                        done[w] = done.get(w, Scalar.zero()) + coefficient * c
                    continue
                redex = _leftmost_redex(word, index, order)
                if redex is None:
                    done[word] = done.get(word, Scalar.zero()) + coefficient
                    continue
                steps += 1
                if steps > step_limit:
                    raise StepLimitExceeded(f"Normalization exceeded {step_limit} steps")
                for w, c in _apply(word, redex[0], redex[1]):
                    pending[w] = pending.get(w, Scalar.zero()) + coefficient * c
            normal = Element(done.items())
            cache[top_word] = normal
        for c, w in normal.terms:
            result[w] = result.get(w, Scalar.zero()) + top_coefficient * c
    return Element(result.items())


def normalize(e: Element, rs: RuleSet, step_limit: int = DEFAULT_STEP_LIMIT) -> Element:
    """Normal form of `e` modulo `rs`; deterministic and idempotent."""
    missing = e.symbols() - set(rs.rank)
    if missing:
        raise RewriteError(f"{rs.name} does not rank {', '.join(sorted(missing))}")
    return rewrite(e, rs.rules, step_limit=step_limit, cache=rs._cache)


def random_normalize(e: Element, rs: RuleSet, rng: random.Random, step_limit: int = DEFAULT_STEP_LIMIT) -> Element:
    """Normalize by firing a randomly chosen applicable redex at each step."""
    pending: dict[Word, Scalar] = dict((w, c) for c, w in e.terms)
    done: dict[Word, Scalar] = {}
    steps = 0
    while pending:
        word = rng.choice(sorted(pending))
        coefficient = pending.pop(word)
        if coefficient.is_zero():
            continue
        redexes = [
            (i, rule)
            for i in range(len(word))
            for rule in (rs.lookup(word[i:i + 1]), rs.lookup(word[i:i + 2]) if i + 1 < len(word) else None)
            if rule is not None
        ]
        if not redexes:
            done[word] = done.get(word, Scalar.zero()) + coefficient
            continue
        steps += 1
        if steps > step_limit:
            raise StepLimitExceeded(f"Random normalization exceeded {step_limit} steps")
        position, rule = rng.choice(redexes)
        for w, c in _apply(word, position, rule):
            pending[w] = pending.get(w, Scalar.zero()) + coefficient * c
    return Element(done.items())


# ---------------------------------------------------------------------------
# Confluence audit
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Overlap:
    word: Word
    first: str
    second: str
    residual: Element

    @property
    def resolved(self) -> bool:
        return self.residual.is_zero()


@dataclass
class ConfluenceReport:
    rule_set: str
    max_length: int
    overlaps: list[Overlap] = field(default_factory=list)

    @property
    def confluent(self) -> bool:
        return all(o.resolved for o in self.overlaps)

    def unresolved(self) -> list[Overlap]:
        return [o for o in self.overlaps if not o.resolved]


def _ambiguities(rs: RuleSet, max_length: int) -> list[tuple[Word, int, RewriteRule, int, RewriteRule]]:
    found = []
    for r1 in rs.rules:
        for r2 in rs.rules:
            l1, l2 = r1.lhs, r2.lhs
            # proper overlaps: suffix of l1 equals prefix of l2
            for k in range(1, min(len(l1), len(l2)) + 1):
                if k == len(l1) and k == len(l2):
                    continue
                if l1[-k:] == l2[:k]:
                    word = l1 + l2[k:]
                    if len(word) <= max_length:
                        found.append((word, 0, r1, len(l1) - k, r2))
            # inclusions: l2 strictly inside l1
            if r1 is not r2 and len(l2) < len(l1):
                for i in range(len(l1) - len(l2) + 1):
                    if l1[i:i + len(l2)] == l2 and len(l1) <= max_length:
                        found.append((l1, 0, r1, i, r2))
    found.sort(key=lambda item: (len(item[0]), item[0], item[2].id, item[4].id))
    return found


def critical_pairs(rs: RuleSet, max_length: int = 4, step_limit: int = DEFAULT_STEP_LIMIT) -> ConfluenceReport:
    """
    Resolve every ambiguity of `rs` whose overlap word has at most
    `max_length` symbols. With lhs of length at most two, every proper overlap
    has length three, so any bound of three or more is exhaustive.
    """
    if max_length < 3:
        raise ValueError("max_length must be at least 3")
    report = ConfluenceReport(rule_set=rs.name, max_length=max_length)
    seen: set[tuple[Word, int, str, int, str]] = set()
    for word, i, r1, j, r2 in _ambiguities(rs, max_length):
        key = (word, i, r1.id, j, r2.id)
        if key in seen:
            continue
        seen.add(key)
        try:
            left = normalize(Element(_apply(word, i, r1)), rs, step_limit)
            right = normalize(Element(_apply(word, j, r2)), rs, step_limit)
        except StepLimitExceeded as exc:
            raise StepLimitExceeded(f"{exc} while resolving {word_text(word)}", overlap=word) from exc
        report.overlaps.append(Overlap(word, r1.id, r2.id, left - right))
    logger.debug(
        f"{rs.name}: {len(report.overlaps)} overlaps, {len(report.unresolved())} unresolved"
    )
    return report


# ---------------------------------------------------------------------------
# Inverse completion
# ---------------------------------------------------------------------------


def _unit_rules(generator_symbol: str, inverse_symbol: str) -> list[RewriteRule]:
    one = Element.one()
    return [
        RewriteRule(f"unit.{generator_symbol}{inverse_symbol}", (generator_symbol, inverse_symbol), one),
        RewriteRule(f"unit.{inverse_symbol}{generator_symbol}", (inverse_symbol, generator_symbol), one),
    ]


def complete_inverses(
    rs: RuleSet,
    invertibles: Mapping[str, str] | None = None,
    *,
    name: str | None = None,
    step_limit: int = DEFAULT_STEP_LIMIT,
) -> RuleSet:
    """
    Adjoin inverse generators to `rs`.

    For each invertible y (in mapping order) and each ranked symbol x, the rule
    resolving x·y or y·x is multiplied by y⁻¹ on both sides, solved for the
    unsorted two-letter word among x·y⁻¹ and y⁻¹·x, and its right-hand side is
    normalized with everything derived so far.

    Args:
        rs: A rule set whose rank already places every inverse symbol.
        invertibles: Generator to inverse-symbol map; defaults to a -> ai, d -> di.
        name: Name of the completed set.
    """
    invertibles = dict(invertibles or {"a": "ai", "d": "di"})
    for inverse in invertibles.values():
        if inverse not in rs.rank:
            raise InvalidRuleSet(f"{rs.name} does not rank {inverse}")

    inverse_symbols = set(invertibles.values())
    units: list[RewriteRule] = []
    raw: list[RewriteRule] = []
    processed: list[str] = []

    for y, y_inv in invertibles.items():
        units.extend(_unit_rules(y, y_inv))
        alphabet = [s for s in rs.rank_order if s not in inverse_symbols or s in processed]
        for x in alphabet:
            if x in (y, y_inv):
                continue
            known = {r.lhs: r for r in list(rs.rules) + raw}
            rule = known.get((x, y)) or known.get((y, x))
            if rule is None:
                raise UnsolvableRule(f"No rule resolves {x}·{y} or {y}·{x} in {rs.name}")
            relation = Element([(rule.lhs, 1)]) - rule.rhs
            sandwiched = Element.word(y_inv) * relation * Element.word(y_inv)
            reduced = rewrite(sandwiched, units, step_limit=step_limit)
            candidates = [(x, y_inv), (y_inv, x)]
            unsorted = [w for w in candidates if rs.rank[w[0]] > rs.rank[w[1]]]
            if not unsorted:
                raise UnsolvableRule(f"Cannot orient {x} against {y_inv}")
            lhs = unsorted[0]
            coefficient = reduced.coefficient(lhs)
            if not coefficient.is_unit():
                raise UnsolvableRule(f"{word_text(lhs)} has non-invertible coefficient {coefficient} in {rule.id}")
            rhs = (Element([(lhs, coefficient)]) - reduced).scale(coefficient.inverse())
            raw.append(RewriteRule(f"{rule.id}/{y_inv}", lhs, rhs))
        processed.append(y_inv)

    solved: list[RewriteRule] = []
    working = list(rs.rules) + units + raw
    for rule in raw:
        rhs = rewrite(rule.rhs, working, step_limit=step_limit)
        solved.append(RewriteRule(rule.id, rule.lhs, rhs))
    completed = RuleSet(name or f"{rs.name}+inv", list(rs.rules) + units + solved, rs.rank_order)
    logger.debug(f"{completed.name}: added {len(units) + len(solved)} inverse rules")
    return completed
