"""Conflict-resolving body extensions.

A pair of rules with strongly complementary heads conflicts when their bodies
are jointly satisfiable. A blocker is a single body literal whose addition to
the first rule keeps that rule's body satisfiable but breaks joint
satisfiability with one opponent. Minimal resolving extensions are the
minimal internally consistent hitting sets of the per-opponent blocker
families; a cautious filter then drops extensions that use a strongly negated
positive literal where the default-negated variant is also on offer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .model import BodyLiteral, Literal, Program, Rule, natural_key, parse_body_token, sort_body_literals
from .semantics import body_satisfiable

MAX_EXTENSIONS = 1000


class InconsistentExtensionError(ValueError):
    """Raised when applying literals would make a rule body unsatisfiable."""


class ExtensionOverflowError(Exception):
    """Raised when extension search exceeds its result cap."""


@dataclass(frozen=True, order=True)
class LambdaExtension:
    """A canonical (sorted, duplicate-free) set of body literals."""

    literals: tuple[BodyLiteral, ...]

    @classmethod
    def of(cls, literals: Iterable[BodyLiteral]) -> LambdaExtension:
        return cls(sort_body_literals(literals))

    @property
    def key(self) -> str:
        """Compact comma-joined token form, e.g. ``~t,~-t``."""
        return ",".join(bl.token() for bl in self.literals)

    def __str__(self) -> str:
        return self.key


def extension_from_key(key: str) -> LambdaExtension:
    """Parse a compact key back into an extension."""
    return LambdaExtension.of(parse_body_token(tok) for tok in key.split(","))


def key_sort_key(key: str):
    """Canonical comparator for extension keys (literal order, not text order)."""
    return extension_from_key(key).literals


def _jointly_satisfiable(r: Rule, other: Rule) -> bool:
    pos = r.body_pos | other.body_pos
    return body_satisfiable(
        [BodyLiteral(lit) for lit in pos]
        + [BodyLiteral(lit, True) for lit in r.body_neg | other.body_neg]
    )


def blockers(r: Rule, opponent: Rule, *, reserved_atoms: frozenset[str] = frozenset()) -> list[BodyLiteral]:
    """Single literals that extend r's body consistently and break the opponent.

    Candidates come from the opponent's body: the default-negated and strongly
    complementary variants of its positive literals, and the plain variants of
    its default-negated literals. Candidates over reserved atoms are skipped.
    """
    candidates: set[BodyLiteral] = set()
    for lit in opponent.body_pos:
        candidates.add(BodyLiteral(lit, True))
        candidates.add(BodyLiteral(lit.complement()))
    for lit in opponent.body_neg:
        candidates.add(BodyLiteral(lit))
    valid = []
    for cand in candidates:
        if cand.literal.atom in reserved_atoms:
            continue
        extended = _extend(r, (cand,))
        if extended is None:
            continue
        if not _jointly_satisfiable(extended, opponent):
            valid.append(cand)
    return sorted(valid)


def _extend(r: Rule, literals: Iterable[BodyLiteral]) -> Rule | None:
    """r with extra body literals appended, or None when unsatisfiable."""
    fresh = [bl for bl in sort_body_literals(literals) if bl not in r.body]
    body = r.body + tuple(fresh)
    if not body_satisfiable(body):
        return None
    return Rule(r.id, r.head, body)


def min_extensions(
    r: Rule,
    opponents: Sequence[Rule],
    *,
    reserved: Mapping[str, frozenset[str]] | None = None,
    max_extensions: int = MAX_EXTENSIONS,
) -> list[LambdaExtension]:
    """Minimal extensions of r that break every opponent at once.

    Returns the empty list when some opponent has no blockers at all. Raises
    ExtensionOverflowError past max_extensions results.
    """
    reserved = reserved or {}
    families = []
    for opp in sorted(opponents, key=lambda o: natural_key(o.id)):
        fam = blockers(r, opp, reserved_atoms=reserved.get(opp.id, frozenset()))
        if not fam:
            return []
        families.append(fam)
    families.sort(key=lambda fam: (len(fam), fam))
    found: list[frozenset[BodyLiteral]] = []

    def hit(chosen: frozenset[BodyLiteral], fam: list[BodyLiteral]) -> bool:
        return any(bl in chosen for bl in fam)

    def search(chosen: frozenset[BodyLiteral]) -> None:
        for fam in families:
            if not hit(chosen, fam):
                for cand in fam:
                    extended = _extend(r, chosen | {cand})
                    if extended is not None:
                        search(chosen | {cand})
                return
        if chosen not in found:
            found.append(chosen)
            if len(found) > max_extensions:
                raise ExtensionOverflowError(f"more than {max_extensions} extensions for {r.id}")

    search(frozenset())
    minimal = [s for s in found if not any(o < s for o in found)]
    return sorted(LambdaExtension.of(s) for s in minimal)


def cautious_filter(extensions: Sequence[LambdaExtension]) -> list[LambdaExtension]:
    """Drop extensions using a strongly negated positive literal when the
    default-negated variant of the same atom is also offered."""
    pool = {ext.literals for ext in extensions}
    kept = []
    for ext in extensions:
        shadowed = False
        for bl in ext.literals:
            if bl.default_neg or not bl.literal.strong_neg:
                continue
            swap = BodyLiteral(Literal(bl.literal.atom), True)
            variant = sort_body_literals(lit if lit != bl else swap for lit in ext.literals)
            if variant in pool and variant != ext.literals:
                shadowed = True
                break
        if not shadowed:
            kept.append(ext)
    return kept


def apply_extension(p: Program, rule_id: str, extension: LambdaExtension | Iterable[BodyLiteral]) -> Program:
    """Append an extension's missing literals to one rule's body.

    Idempotent for already-present literals; raises
    InconsistentExtensionError when the result would be unsatisfiable.
    """
    literals = extension.literals if isinstance(extension, LambdaExtension) else sort_body_literals(extension)
    r = p.rule(rule_id)
    extended = _extend(r, literals)
    if extended is None:
        raise InconsistentExtensionError(
            f"extension {LambdaExtension.of(literals).key} makes rule {rule_id} unsatisfiable"
        )
    if extended.body == r.body:
        return p
    return p.replace(extended)
