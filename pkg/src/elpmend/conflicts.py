"""Conflict detection, conflict groups, and minimal group covers.

Two rules conflict when their heads are strongly complementary and their
bodies are jointly satisfiable, i.e. the union of the positive parts is
consistent and disjoint from the union of the default-negated parts. A rule's
conflict group is the set of conflicts it participates in; groups with equal
conflict sets are identified. A cover picks resolvable groups so that every
conflict lies in some picked group, then fixes one representative per group.

Representative extensions are program-scoped: when a third rule also
conflicts with the same opponent, candidate literals over that rule's body
atoms are reserved for it and excluded here, so concurrent repairs cannot
trample each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .extensions import LambdaExtension, cautious_filter, min_extensions
from .model import Program, Rule, natural_key
from .semantics import is_consistent

MAX_COVERS = 10000


class NotConflictingError(ValueError):
    """Raised when asking for the conflict group of a conflict-free rule."""

    def __init__(self, rule_id: str):
        super().__init__(f"rule {rule_id} is not part of any conflict")
        self.rule_id = rule_id


class UnresolvableRulesError(ValueError):
    """Raised by strict cover enumeration when some conflict has no
    resolvable group containing it."""

    def __init__(self, conflicts: tuple[frozenset[str], ...]):
        pairs = ", ".join("{" + ",".join(sorted(c, key=natural_key)) + "}" for c in conflicts)
        super().__init__(f"no resolvable group covers: {pairs}")
        self.conflicts = conflicts


def is_conflicting(r: Rule, other: Rule) -> bool:
    """Strongly complementary heads plus jointly satisfiable bodies."""
    if r.head != other.head.complement():
        return False
    pos = r.body_pos | other.body_pos
    if not is_consistent(pos):
        return False
    return not (pos & (r.body_neg | other.body_neg))


def all_conflicts(p: Program) -> list[frozenset[str]]:
    """Every conflicting pair, sorted by natural rule ids."""
    found = []
    rules = p.rules
    for i, r in enumerate(rules):
        for other in rules[i + 1 :]:
            if is_conflicting(r, other):
                found.append(frozenset({r.id, other.id}))
    return sorted(found, key=lambda c: sorted(map(natural_key, c)))


@dataclass(frozen=True)
class ConflictGroup:
    """A set of conflicts treated as one resolution unit."""

    conflicts: frozenset[frozenset[str]]

    @cached_property
    def members(self) -> frozenset[str]:
        out: set[str] = set()
        for c in self.conflicts:
            out.update(c)
        return frozenset(out)

    @cached_property
    def common(self) -> frozenset[str]:
        """Rules present in every conflict: the representative candidates."""
        it = iter(self.conflicts)
        acc = set(next(it))
        for c in it:
            acc &= c
        return frozenset(acc)

    @property
    def size(self) -> int:
        return len(self.conflicts)

    def sorted_conflicts(self) -> tuple[tuple[str, ...], ...]:
        pairs = [tuple(sorted(c, key=natural_key)) for c in self.conflicts]
        return tuple(sorted(pairs, key=lambda pair: tuple(map(natural_key, pair))))


def _conflict_map(p: Program) -> dict[str, frozenset[frozenset[str]]]:
    by_rule: dict[str, set[frozenset[str]]] = {}
    for c in all_conflicts(p):
        for rid in c:
            by_rule.setdefault(rid, set()).add(c)
    return {rid: frozenset(cs) for rid, cs in by_rule.items()}


def conflict_group(p: Program, rule_id: str) -> ConflictGroup:
    """The group of all conflicts the given rule participates in."""
    p.rule(rule_id)
    groups = _conflict_map(p)
    if rule_id not in groups:
        raise NotConflictingError(rule_id)
    return ConflictGroup(groups[rule_id])


def reserved_atoms(p: Program, rep_id: str, opponent: Rule) -> frozenset[str]:
    """Body atoms of other rules that conflict with the same opponent."""
    atoms: set[str] = set()
    for r in p.rules:
        if r.id in (rep_id, opponent.id):
            continue
        if is_conflicting(r, opponent):
            atoms.update(bl.literal.atom for bl in r.body)
    return frozenset(atoms)


def representative_candidates(
    p: Program,
    group: ConflictGroup,
    *,
    declined: frozenset[tuple[str, str]] = frozenset(),
) -> list[tuple[str, tuple[LambdaExtension, ...]]]:
    """Valid representatives with their filtered extension menus.

    A candidate must sit in every conflict of the group and keep at least one
    extension after program-scoped reservation, the cautious filter, and the
    removal of declined (rule id, key) pairs.
    """
    out = []
    for rid in sorted(group.common, key=natural_key):
        r = p.rule(rid)
        opponents = []
        for conflict in group.conflicts:
            (other_id,) = conflict - {rid}
            opponents.append(p.rule(other_id))
        reserved = {opp.id: reserved_atoms(p, rid, opp) for opp in opponents}
        exts = cautious_filter(min_extensions(r, opponents, reserved=reserved))
        exts = [ext for ext in exts if (rid, ext.key) not in declined]
        if exts:
            out.append((rid, tuple(exts)))
    return out


@dataclass(frozen=True)
class CoverGroup:
    """One picked group with its representative and extension menu."""

    id: str
    group: ConflictGroup
    representative: str
    extensions: tuple[LambdaExtension, ...]

    @property
    def weight(self) -> int:
        return self.group.size


@dataclass(frozen=True)
class GroupCover:
    """A conflict-covering family of groups, one representative each."""

    groups: tuple[CoverGroup, ...]
    approximate: bool = False

    def group_ids(self) -> tuple[str, ...]:
        return tuple(g.id for g in self.groups)

    def group(self, group_id: str) -> CoverGroup:
        for g in self.groups:
            if g.id == group_id:
                return g
        raise KeyError(group_id)


@dataclass(frozen=True)
class CoverAnalysis:
    """Everything cover enumeration learns about a program."""

    conflicts: tuple[frozenset[str], ...]
    groups: tuple[ConflictGroup, ...]
    covers: tuple[GroupCover, ...]
    uncoverable: tuple[frozenset[str], ...]
    approximate: bool


def _display_id(cgr_map, group: ConflictGroup, rep: str, anchors: list[str]) -> str:
    if cgr_map.get(rep) == group.conflicts:
        return rep
    return anchors[0]


def _minimal_families(conflicts, groups_for, max_families):
    """All inclusion-minimal families of group indices covering the conflicts."""
    families: list[frozenset[int]] = []
    overflow = False

    def search(chosen: frozenset[int], covered: frozenset) -> None:
        nonlocal overflow
        if overflow:
            return
        for conflict in conflicts:
            if conflict not in covered:
                for gi in groups_for[conflict]:
                    if gi not in chosen:
                        search(chosen | {gi}, covered | _coverage[gi])
                return
        if chosen not in families:
            families.append(chosen)
            if len(families) > max_families:
                overflow = True

    _coverage: dict[int, frozenset] = {}
    for gis in groups_for.values():
        for gi in gis:
            _coverage.setdefault(gi, frozenset())
    for conflict, gis in groups_for.items():
        for gi in gis:
            _coverage[gi] |= {conflict}
    search(frozenset(), frozenset())
    if overflow:
        chosen: set[int] = set()
        covered: set = set()
        while len(covered) < len(conflicts):
            best = max(
                _coverage,
                key=lambda gi: (len(_coverage[gi] - covered), -gi),
            )
            chosen.add(best)
            covered |= _coverage[best]
        return [frozenset(chosen)], True
    minimal = [f for f in families if not any(o < f for o in families)]
    return minimal, False


def analyze_covers(
    p: Program,
    *,
    declined: frozenset[tuple[str, str]] = frozenset(),
    max_covers: int = MAX_COVERS,
) -> CoverAnalysis:
    """Lenient cover enumeration: uncovered conflicts are reported, not fatal."""
    conflicts = tuple(all_conflicts(p))
    cgr_map = _conflict_map(p)
    distinct = sorted(
        {cs for cs in cgr_map.values()},
        key=lambda cs: ConflictGroup(cs).sorted_conflicts(),
    )
    groups = tuple(ConflictGroup(cs) for cs in distinct)
    anchors_by_group = {
        g.conflicts: sorted((rid for rid, cs in cgr_map.items() if cs == g.conflicts), key=natural_key)
        for g in groups
    }
    candidates = {g.conflicts: representative_candidates(p, g, declined=declined) for g in groups}
    resolvable = [g for g in groups if candidates[g.conflicts]]
    groups_for: dict[frozenset[str], list[int]] = {}
    coverable = []
    uncoverable = []
    for conflict in conflicts:
        containing = [i for i, g in enumerate(resolvable) if conflict in g.conflicts]
        if containing:
            groups_for[conflict] = containing
            coverable.append(conflict)
        else:
            uncoverable.append(conflict)
    families, approx = _minimal_families(coverable, groups_for, max_covers)
    covers: list[GroupCover] = []
    truncated = False
    for family in families:
        fam_groups = [resolvable[i] for i in sorted(family)]
        rep_menus = [candidates[g.conflicts] for g in fam_groups]
        for picks in product(*rep_menus):
            cover_groups = []
            for g, (rep, exts) in zip(fam_groups, picks):
                gid = _display_id(cgr_map, g, rep, anchors_by_group[g.conflicts])
                cover_groups.append(CoverGroup(gid, g, rep, exts))
            cover_groups.sort(key=lambda cg: natural_key(cg.id))
            covers.append(GroupCover(tuple(cover_groups), approximate=approx))
            if len(covers) >= max_covers:
                truncated = True
                break
        if truncated:
            break
    covers.sort(
        key=lambda c: (
            len(c.groups),
            tuple(natural_key(g.id) for g in c.groups),
            tuple(natural_key(g.representative) for g in c.groups),
        )
    )
    return CoverAnalysis(
        conflicts=conflicts,
        groups=groups,
        covers=tuple(covers),
        uncoverable=tuple(uncoverable),
        approximate=approx or truncated,
    )


def enumerate_min_covers(p: Program, *, max_covers: int = MAX_COVERS) -> tuple[GroupCover, ...]:
    """Strict cover enumeration: every conflict must be coverable."""
    analysis = analyze_covers(p, max_covers=max_covers)
    if analysis.uncoverable:
        raise UnresolvableRulesError(analysis.uncoverable)
    return analysis.covers
