"""Brute-force reference implementations used to cross-check the package.

Every function here recomputes its result from first principles by exhaustive
enumeration. Only the data model is shared with the package; none of the
package's algorithm modules are imported.
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Iterable, Mapping

from elpmend.model import BodyLiteral, Literal, Program, Rule


def is_consistent_set(literals: Iterable[Literal]) -> bool:
    lits = set(literals)
    return not any(l.complement() in lits for l in lits)


def consistent_literal_sets(atoms: Iterable[str]):
    """Yield every consistent literal set over the given atoms."""
    names = sorted(set(atoms))
    for choices in product((None, False, True), repeat=len(names)):
        yield frozenset(
            Literal(name, strong)
            for name, strong in zip(names, choices)
            if strong is not None
        )


def rule_atoms(rule: Rule) -> set[str]:
    atoms = {rule.head.atom}
    atoms.update(bl.literal.atom for bl in rule.body)
    return atoms


def satisfies_body(s: frozenset[Literal], body: Iterable[BodyLiteral]) -> bool:
    for bl in body:
        if bl.default_neg:
            if bl.literal in s:
                return False
        elif bl.literal not in s:
            return False
    return True


def body_satisfiable(body: Iterable[BodyLiteral]) -> bool:
    pos = {bl.literal for bl in body if not bl.default_neg}
    neg = {bl.literal for bl in body if bl.default_neg}
    return is_consistent_set(pos) and not (pos & neg)


def oracle_is_conflicting(r1: Rule, r2: Rule) -> bool:
    """Witness search over every consistent literal set of the pair's atoms."""
    if r1.head != r2.head.complement():
        return False
    atoms = rule_atoms(r1) | rule_atoms(r2)
    return any(
        satisfies_body(s, r1.body) and satisfies_body(s, r2.body)
        for s in consistent_literal_sets(atoms)
    )


def oracle_all_conflicts(p: Program) -> set[frozenset[str]]:
    return {
        frozenset({r1.id, r2.id})
        for r1, r2 in combinations(p.rules, 2)
        if oracle_is_conflicting(r1, r2)
    }


def blocker_candidates(r2: Rule, reserved_atoms: frozenset[str] = frozenset()) -> set[BodyLiteral]:
    """All literals that could block joint satisfiability with r2's body."""
    cands: set[BodyLiteral] = set()
    for lit in r2.body_pos:
        if lit.atom in reserved_atoms:
            continue
        cands.add(BodyLiteral(lit, True))
        cands.add(BodyLiteral(lit.complement(), False))
    for lit in r2.body_neg:
        if lit.atom in reserved_atoms:
            continue
        cands.add(BodyLiteral(lit, False))
    return cands


def extend_rule(r: Rule, extra: Iterable[BodyLiteral]) -> Rule:
    present = set(r.body)
    merged = list(r.body) + [bl for bl in sorted(extra) if bl not in present]
    return Rule(r.id, r.head, tuple(merged))


def oracle_min_extensions(
    r: Rule,
    opponents: Iterable[Rule],
    reserved_by_opponent: Mapping[str, frozenset[str]] | None = None,
) -> set[frozenset[BodyLiteral]]:
    """All minimal resolving extensions, by subset enumeration over candidates."""
    opponents = list(opponents)
    reserved_by_opponent = reserved_by_opponent or {}
    universe: set[BodyLiteral] = set()
    for r2 in opponents:
        universe |= blocker_candidates(
            r2, reserved_by_opponent.get(r2.id, frozenset())
        )
    ordered = sorted(universe)
    valid: list[frozenset[BodyLiteral]] = []
    for size in range(len(ordered) + 1):
        for combo in combinations(ordered, size):
            x = frozenset(combo)
            if any(v <= x for v in valid):
                continue
            extended = extend_rule(r, x)
            if not body_satisfiable(extended.body):
                continue
            if any(oracle_is_conflicting(extended, r2) for r2 in opponents):
                continue
            valid.append(x)
    return set(valid)


def closure(rules: list[tuple[Literal, frozenset[Literal]]], start: set[Literal]) -> set[Literal]:
    """Least fixpoint of default-negation-free rules from the start set."""
    derived = set(start)
    changed = True
    while changed:
        changed = False
        for head, pos in rules:
            if head not in derived and pos <= derived:
                derived.add(head)
                changed = True
    return derived


def oracle_answer_sets(p: Program) -> tuple[set[frozenset[Literal]], bool]:
    """(consistent answer sets, contradictory flag) by subset enumeration."""
    atoms = sorted({a for r in p.rules for a in rule_atoms(r)})
    negfree = [(r.head, r.body_pos) for r in p.rules if not r.body_neg]
    contradictory = not is_consistent_set(closure(negfree, set()))
    sets: set[frozenset[Literal]] = set()
    for s in consistent_literal_sets(atoms):
        survivors = [(r.head, r.body_pos) for r in p.rules if not (r.body_neg & s)]
        t = closure(survivors, set())
        if is_consistent_set(t) and frozenset(t) == s:
            sets.add(frozenset(t))
    return sets, contradictory


def oracle_groups(p: Program) -> tuple[set[frozenset[str]], dict[frozenset[frozenset[str]], set[str]]]:
    """(all conflicts, conflict-set -> anchor rule ids) by definition."""
    conflicts = oracle_all_conflicts(p)
    groups: dict[frozenset[frozenset[str]], set[str]] = {}
    for r in p.rules:
        mine = frozenset(c for c in conflicts if r.id in c)
        if mine:
            groups.setdefault(mine, set()).add(r.id)
    return conflicts, groups


def oracle_reserved_atoms(p: Program, rep: Rule, opponent: Rule) -> frozenset[str]:
    """Atoms claimed by other rules that also conflict with the opponent."""
    reserved: set[str] = set()
    for r3 in p.rules:
        if r3.id in (rep.id, opponent.id):
            continue
        if oracle_is_conflicting(r3, opponent):
            reserved.update(bl.literal.atom for bl in r3.body)
    return frozenset(reserved)


def oracle_representatives(
    p: Program, conflict_set: frozenset[frozenset[str]]
) -> dict[str, set[frozenset[BodyLiteral]]]:
    """Valid representative -> its minimal extensions, for one conflict group."""
    common = set.intersection(*[set(c) for c in conflict_set])
    out: dict[str, set[frozenset[BodyLiteral]]] = {}
    for rid in sorted(common):
        r = p.rule(rid)
        opponents = [p.rule(next(iter(c - {rid}))) for c in conflict_set]
        reserved = {o.id: oracle_reserved_atoms(p, r, o) for o in opponents}
        exts = oracle_min_extensions(r, opponents, reserved)
        if exts:
            out[rid] = exts
    return out


def oracle_min_cover_families(p: Program):
    """(minimal covering group families, conflict-set -> representatives map).

    A family is a set of resolvable conflict-sets such that every conflict of
    the program lies in at least one member; only inclusion-minimal families
    are returned.
    """
    conflicts, groups = oracle_groups(p)
    reps = {cs: oracle_representatives(p, cs) for cs in groups}
    usable = sorted(
        (cs for cs in groups if reps[cs]),
        key=lambda cs: sorted(sorted(c) for c in cs),
    )
    families: list[frozenset[frozenset[frozenset[str]]]] = []
    for size in range(len(usable) + 1):
        for combo in combinations(usable, size):
            fam = frozenset(combo)
            if any(f <= fam for f in families):
                continue
            if all(any(c in cs for cs in fam) for c in conflicts):
                families.append(fam)
    return families, reps


def oracle_min_clique_covers(
    node_ids: Iterable[str], cliques: Mapping[str, tuple[frozenset[str], int]]
) -> list[set[str]]:
    """All minimum-cardinality label families covering every node."""
    nodes = set(node_ids)
    labels = sorted(cliques)
    for size in range(len(labels) + 1):
        found = []
        for combo in combinations(labels, size):
            covered: set[str] = set()
            for label in combo:
                covered |= cliques[label][0]
            if covered >= nodes:
                found.append(set(combo))
        if found:
            return found
    return [set()]


def oracle_cover_analysis(p: Program):
    """(coverable minimal families, reps, uncoverable conflicts).

    The lenient counterpart of oracle_min_cover_families: conflicts with no
    usable group are split off and the families cover only the remainder.
    """
    conflicts, groups = oracle_groups(p)
    reps = {cs: oracle_representatives(p, cs) for cs in groups}
    usable = sorted(
        (cs for cs in groups if reps[cs]),
        key=lambda cs: sorted(sorted(c) for c in cs),
    )
    coverable = {c for c in conflicts if any(c in cs for cs in usable)}
    families: list[frozenset[frozenset[frozenset[str]]]] = []
    for size in range(len(usable) + 1):
        for combo in combinations(usable, size):
            fam = frozenset(combo)
            if any(f <= fam for f in families):
                continue
            if all(any(c in cs for cs in fam) for c in coverable):
                families.append(fam)
    return families, reps, conflicts - coverable
