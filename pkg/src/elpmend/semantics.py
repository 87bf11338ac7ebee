"""Answer-set semantics for ground extended logic programs.

A candidate set S is checked via the reduct: drop rules whose default-negated
body intersects S, strip default negation from the rest, then take the least
fixpoint. The closure of the default-negation-free rules survives every
reduct; when that closure is inconsistent the program is contradictory (the
set of all literals is its answer set) and no consistent answer set exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import kernel
from .model import BodyLiteral, Literal, Program, Rule

DEFAULT_ATOM_CAP = 20
KERNEL_ATOM_CAP = 31
GUESS_CAP = 22


class TooLargeError(Exception):
    """Raised when an exhaustive scan would exceed its configured cap."""


def is_consistent(literals: Iterable[Literal]) -> bool:
    """No strongly complementary pair present."""
    seen = set(literals)
    return all(lit.complement() not in seen for lit in seen)


def body_satisfiable(body: Iterable[BodyLiteral]) -> bool:
    """Some consistent literal set satisfies the body.

    Holds exactly when the positive part is consistent and disjoint from the
    default-negated part.
    """
    pos = {bl.literal for bl in body if not bl.default_neg}
    neg = {bl.literal for bl in body if bl.default_neg}
    return is_consistent(pos) and not (pos & neg)


def satisfies(s: frozenset[Literal] | set[Literal], item) -> bool:
    """Whether literal set s satisfies a literal, body literal, body, or rule."""
    if isinstance(item, Literal):
        return item in s
    if isinstance(item, BodyLiteral):
        return (item.literal in s) != item.default_neg
    if isinstance(item, Rule):
        return item.head in s or not all(satisfies(s, bl) for bl in item.body)
    return all(satisfies(s, bl) for bl in item)


def reduct(p: Program, s: frozenset[Literal] | set[Literal]) -> Program:
    """The default-negation-free program induced by candidate set s."""
    kept = []
    for r in p.rules:
        if r.body_neg & s:
            continue
        kept.append(Rule(r.id, r.head, tuple(bl for bl in r.body if not bl.default_neg)))
    return Program(tuple(kept))


@dataclass(frozen=True)
class AnswerSetResult:
    """All answer sets of a program, with the contradiction marker.

    ``contradictory`` is True when the inconsistent set of all literals is an
    answer set; ``sets`` then stays empty because no consistent set qualifies.
    """

    sets: tuple[frozenset[Literal], ...]
    contradictory: bool

    @property
    def consistent(self) -> bool:
        return bool(self.sets)


class Encoding:
    """Bitmask encoding of a program for the kernel backends."""

    def __init__(self, p: Program, extra_atoms: Iterable[str] = ()):
        names = set(p.atoms())
        names.update(extra_atoms)
        self.atoms: list[str] = sorted(names)
        self.index: dict[str, int] = {a: i for i, a in enumerate(self.atoms)}
        self.bit_count = 2 * len(self.atoms)
        self.evens = kernel.even_mask(self.bit_count)
        self.heads: list[int] = []
        self.pos_masks: list[int] = []
        self.neg_masks: list[int] = []
        self.neg_universe = 0
        for r in p.rules:
            self.heads.append(self.literal_bit(r.head))
            self.pos_masks.append(self.mask(r.body_pos))
            neg = self.mask(r.body_neg)
            self.neg_masks.append(neg)
            self.neg_universe |= neg

    def literal_bit(self, lit: Literal) -> int:
        return self.index[lit.atom] * 2 + (1 if lit.strong_neg else 0)

    def mask(self, literals: Iterable[Literal]) -> int:
        m = 0
        for lit in literals:
            m |= 1 << self.literal_bit(lit)
        return m

    def decode(self, mask: int) -> frozenset[Literal]:
        out = []
        for i, atom in enumerate(self.atoms):
            if mask & (1 << (2 * i)):
                out.append(Literal(atom))
            if mask & (1 << (2 * i + 1)):
                out.append(Literal(atom, True))
        return frozenset(out)


def answer_sets(p: Program, *, max_atoms: int = DEFAULT_ATOM_CAP) -> AnswerSetResult:
    """Compute every answer set by scanning guesses over default-negated literals."""
    atom_count = len(p.atoms())
    if atom_count > min(max_atoms, KERNEL_ATOM_CAP):
        raise TooLargeError(f"program has {atom_count} atoms; cap is {max_atoms}")
    enc = Encoding(p)
    if bin(enc.neg_universe).count("1") > GUESS_CAP:
        raise TooLargeError(f"more than {GUESS_CAP} distinct default-negated literals")
    masks, contradictory = kernel.answer_set_scan(
        enc.heads, enc.pos_masks, enc.neg_masks, 0, enc.neg_universe, enc.evens
    )
    decoded = sorted(
        (enc.decode(m) for m in masks),
        key=lambda s: (len(s), sorted(lit.token() for lit in s)),
    )
    return AnswerSetResult(tuple(decoded), contradictory)


def is_contradictory(p: Program, *, max_atoms: int = DEFAULT_ATOM_CAP) -> bool:
    """Whether the closure of the default-negation-free rules is inconsistent."""
    atom_count = len(p.atoms())
    if atom_count > min(max_atoms, KERNEL_ATOM_CAP):
        raise TooLargeError(f"program has {atom_count} atoms; cap is {max_atoms}")
    enc = Encoding(p)
    scanned, failures, _ = kernel.facts_scan(
        enc.heads, enc.pos_masks, enc.neg_masks, enc.neg_universe, enc.evens, [0], 1
    )
    return bool(failures) and failures[0][1] == 1
