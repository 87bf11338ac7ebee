"""Core data model for ground extended logic programs.

Provides literals (with strong negation), body literals (with default
negation), rules, programs, and the concrete text syntax: one rule per line,
``HEAD :- B1, ..., Bn.`` or ``HEAD.``, ``not `` for default negation, ``-``
for strong negation, ``%`` for comments. ``not`` is a reserved word and not a
valid atom name. Rule ids default to positional labels ``r1..rn``; a trailing
``% #id NAME`` comment overrides the id and the printer re-emits it whenever
the id differs from the positional default, so parse/print round-trips.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


class ProgramSyntaxError(ValueError):
    """Raised when program text does not match the rule grammar."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.reason = message
        self.line = line
        self.column = column


class DuplicateRuleIdError(ValueError):
    """Raised when two rules end up with the same id."""

    def __init__(self, rule_id: str):
        super().__init__(f"duplicate rule id {rule_id!r}")
        self.rule_id = rule_id


class UnknownRuleError(KeyError):
    """Raised when a rule id is not present in a program."""

    def __init__(self, rule_id: str):
        super().__init__(rule_id)
        self.rule_id = rule_id


@dataclass(frozen=True, order=True)
class Literal:
    """A propositional atom, optionally strongly negated."""

    atom: str
    strong_neg: bool = False

    def complement(self) -> Literal:
        """The strongly complementary literal."""
        return Literal(self.atom, not self.strong_neg)

    def token(self) -> str:
        return f"-{self.atom}" if self.strong_neg else self.atom

    def __str__(self) -> str:
        return self.token()


@dataclass(frozen=True, order=True)
class BodyLiteral:
    """A literal as it occurs in a rule body, optionally default-negated.

    Ordering is canonical: by atom name, then strong negation, then default
    negation. This single comparator drives every sorted output downstream.
    """

    literal: Literal
    default_neg: bool = False

    def token(self) -> str:
        """Compact form used in extension keys, e.g. ``~-t``."""
        return ("~" if self.default_neg else "") + self.literal.token()

    def text(self) -> str:
        """Program-text form, e.g. ``not -t``."""
        return ("not " if self.default_neg else "") + self.literal.token()

    def __str__(self) -> str:
        return self.text()


@dataclass(frozen=True)
class Rule:
    """A ground rule: head literal plus a duplicate-free body."""

    id: str
    head: Literal
    body: tuple[BodyLiteral, ...] = ()

    @cached_property
    def body_pos(self) -> frozenset[Literal]:
        return frozenset(bl.literal for bl in self.body if not bl.default_neg)

    @cached_property
    def body_neg(self) -> frozenset[Literal]:
        return frozenset(bl.literal for bl in self.body if bl.default_neg)

    def atoms(self) -> frozenset[str]:
        names = {self.head.atom}
        names.update(bl.literal.atom for bl in self.body)
        return frozenset(names)

    def text(self) -> str:
        if not self.body:
            return f"{self.head.token()}."
        inner = ", ".join(bl.text() for bl in self.body)
        return f"{self.head.token()} :- {inner}."

    def __str__(self) -> str:
        return self.text()


@dataclass(frozen=True)
class Program:
    """An ordered, duplicate-id-free collection of rules."""

    rules: tuple[Rule, ...] = ()

    @cached_property
    def _index(self) -> dict[str, Rule]:
        return {r.id: r for r in self.rules}

    def rule(self, rule_id: str) -> Rule:
        try:
            return self._index[rule_id]
        except KeyError:
            raise UnknownRuleError(rule_id) from None

    def __contains__(self, rule_id: str) -> bool:
        return rule_id in self._index

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def rule_ids(self) -> tuple[str, ...]:
        return tuple(r.id for r in self.rules)

    def atoms(self) -> frozenset[str]:
        names: set[str] = set()
        for r in self.rules:
            names.update(r.atoms())
        return frozenset(names)

    def is_core(self) -> bool:
        """True when the program has no facts (empty-body rules)."""
        return all(r.body for r in self.rules)

    def replace(self, rule: Rule) -> Program:
        """A copy with the same-id rule swapped in place."""
        if rule.id not in self._index:
            raise UnknownRuleError(rule.id)
        return Program(tuple(rule if r.id == rule.id else r for r in self.rules))


def natural_key(rule_id: str):
    """Numeric-aware sort key, so r2 < r10."""
    parts = re.split(r"(\d+)", rule_id)
    return tuple((0, int(p)) if p.isdigit() else (1, p) for p in parts if p)


_ATOM_RE = re.compile(r"[a-z][A-Za-z0-9_]*")
_ID_NOTE_RE = re.compile(r"#id\s+(\S+)")
_TOKEN_RE = re.compile(r"(~|not\s+)?(-)?([a-z][A-Za-z0-9_]*)\Z")


def parse_body_token(token: str) -> BodyLiteral:
    """Parse a compact body-literal token such as ``~-t`` or ``not -t``."""
    m = _TOKEN_RE.match(token.strip())
    if m is None or m.group(3) == "not":
        raise ValueError(f"not a body literal token: {token!r}")
    return BodyLiteral(Literal(m.group(3), m.group(2) == "-"), m.group(1) is not None)


def parse_literal_token(token: str) -> Literal:
    bl = parse_body_token(token)
    if bl.default_neg:
        raise ValueError(f"not a plain literal token: {token!r}")
    return bl.literal


class _LineParser:
    """Cursor-based scanner for a single rule line."""

    def __init__(self, text: str, line: int):
        self.text = text
        self.line = line
        self.pos = 0

    def error(self, message: str):
        raise ProgramSyntaxError(message, self.line, self.pos + 1)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def take(self, token: str) -> bool:
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def parse_literal(self) -> Literal:
        strong = self.take("-")
        m = _ATOM_RE.match(self.text, self.pos)
        if m is None:
            self.error("expected an atom (lowercase letter first)")
        if m.group() == "not":
            self.error("'not' is a reserved word, not an atom")
        self.pos = m.end()
        return Literal(m.group(), strong)

    def parse_body_literal(self) -> BodyLiteral:
        default = False
        m = _ATOM_RE.match(self.text, self.pos)
        if m is not None and m.group() == "not":
            rest = self.text[m.end() :]
            if rest[:1].isspace():
                default = True
                self.pos = m.end()
                self.skip_ws()
        return BodyLiteral(self.parse_literal(), default)

    def parse_rule(self) -> tuple[Literal, tuple[BodyLiteral, ...]]:
        self.skip_ws()
        head = self.parse_literal()
        self.skip_ws()
        body: list[BodyLiteral] = []
        if self.take(":-"):
            while True:
                self.skip_ws()
                bl = self.parse_body_literal()
                if bl not in body:
                    body.append(bl)
                self.skip_ws()
                if not self.take(","):
                    break
        if not self.take("."):
            self.error("expected '.' at end of rule")
        self.skip_ws()
        if not self.at_end():
            self.error("unexpected text after rule")
        return head, tuple(body)


def parse_program(text: str) -> Program:
    """Parse program text, assigning positional ids unless annotated."""
    parsed: list[tuple[str | None, Literal, tuple[BodyLiteral, ...]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        code, _, comment = raw.partition("%")
        note = _ID_NOTE_RE.search(comment)
        if not code.strip():
            if note is not None:
                raise ProgramSyntaxError("id annotation without a rule", lineno, raw.find("%") + 1)
            continue
        head, body = _LineParser(code.rstrip(), lineno).parse_rule()
        parsed.append((note.group(1) if note else None, head, body))
    rules: list[Rule] = []
    seen: set[str] = set()
    for index, (explicit_id, head, body) in enumerate(parsed, start=1):
        rule_id = explicit_id if explicit_id is not None else f"r{index}"
        if rule_id in seen:
            raise DuplicateRuleIdError(rule_id)
        seen.add(rule_id)
        rules.append(Rule(rule_id, head, body))
    return Program(tuple(rules))


def print_program(p: Program) -> str:
    """Render a program; inverse of parse_program up to structural equality."""
    lines = []
    for index, rule in enumerate(p.rules, start=1):
        line = rule.text()
        if rule.id != f"r{index}":
            line += f" % #id {rule.id}"
        lines.append(line + "\n")
    return "".join(lines)


def structurally_equal(p: Program, q: Program) -> bool:
    """Same rules in the same order, comparing bodies as sets."""
    if len(p.rules) != len(q.rules):
        return False
    return all(
        a.id == b.id and a.head == b.head and set(a.body) == set(b.body)
        for a, b in zip(p.rules, q.rules)
    )


def sort_body_literals(literals: Iterable[BodyLiteral]) -> tuple[BodyLiteral, ...]:
    """Canonically sorted, duplicate-free body literal tuple."""
    return tuple(sorted(set(literals)))
