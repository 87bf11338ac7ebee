"""Interactive conflict-resolution sessions.

A session wraps a program and walks it toward conflict-freedom: it keeps the
current cover, graph, clique cover, and orderings in sync after every choice,
remembers which (representative, key) offers were declined so they stop
reappearing, supports undo by replaying history from the initial program, and
can sweep fact sets to confirm the repaired core stays consistent under any
consistent input data.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass

from . import kernel
from .conflicts import GroupCover, analyze_covers
from .extensions import apply_extension, extension_from_key
from .lambda_graph import (
    CliqueCover,
    LambdaGraph,
    build_graph,
    enumerate_min_clique_covers,
    graph_to_dict,
)
from .model import Literal, Program, natural_key, parse_program, print_program
from .ordering import order_groups, order_json
from .semantics import KERNEL_ATOM_CAP, Encoding, TooLargeError

UNIFORM_EXHAUSTIVE_LIMIT = 1_000_000
UNIFORM_MAX_FAILURES = 25


class InvalidTargetError(ValueError):
    """Raised when a choice names a target outside the offered clique."""


class StaleExtensionError(ValueError):
    """Raised when a choice names an extension key not currently offered."""


class EmptyHistoryError(ValueError):
    """Raised by undo on a session with no applied choices."""


class BadChoiceIndexError(ValueError):
    """Raised when an explicit cover or clique-cover index is out of range."""


@dataclass(frozen=True)
class HistoryEntry:
    extension: str
    targets: tuple[str, ...]
    timestamp: float


@dataclass(frozen=True)
class ChoiceResult:
    resolved_now: tuple[tuple[str, str], ...]
    status: str


@dataclass(frozen=True)
class UniformFailure:
    facts: tuple[str, ...]
    kind: str


@dataclass(frozen=True)
class UniformReport:
    scanned: int
    exhaustive: bool
    failures: tuple[UniformFailure, ...]
    truncated: bool

    @property
    def ok(self) -> bool:
        return not self.failures


def _sorted_pair(conflict: frozenset[str]) -> tuple[str, str]:
    a, b = sorted(conflict, key=natural_key)
    return (a, b)


def _sorted_pairs(conflicts) -> list[tuple[str, str]]:
    return sorted((_sorted_pair(c) for c in conflicts), key=lambda p: tuple(map(natural_key, p)))


class Session:
    """One program being repaired interactively."""

    def __init__(
        self,
        program: Program | str,
        *,
        cover_choice: int | str = "auto",
        clique_choice: int | str = "auto",
    ):
        if isinstance(program, str):
            program = parse_program(program)
        self._initial = program
        self._cover_choice = cover_choice
        self._clique_choice = clique_choice
        self._reset()

    def _reset(self) -> None:
        self.program = self._initial
        self._declined: set[tuple[str, str]] = set()
        self._history: list[HistoryEntry] = []
        self._resolved_records: list[dict] = []
        self._preferred_cover: frozenset | None = None
        self._preferred_labels: tuple[str, ...] | None = None
        self._recompute(first=True)

    # -- analysis bookkeeping -------------------------------------------------

    def _cover_signature(self, cover: GroupCover) -> frozenset:
        return frozenset((g.group.conflicts, g.representative) for g in cover.groups)

    def _select_cover(self, covers, first: bool) -> int:
        if first and isinstance(self._cover_choice, int):
            if not 0 <= self._cover_choice < len(covers):
                raise BadChoiceIndexError(
                    f"cover index {self._cover_choice} out of range (have {len(covers)})"
                )
            return self._cover_choice
        if self._preferred_cover is not None:
            current = set()
            for c in self.analysis.conflicts:
                current.add(c)
            expected = set()
            for conflicts, rep in self._preferred_cover:
                remaining = frozenset(c for c in conflicts if c in current)
                if remaining:
                    expected.add((conflicts, rep))
            for i, cover in enumerate(covers):
                if self._cover_signature(cover) == frozenset(expected):
                    return i
        return 0

    def _select_cliques(self, options, first: bool) -> int:
        if first and isinstance(self._clique_choice, int):
            if not 0 <= self._clique_choice < len(options):
                raise BadChoiceIndexError(
                    f"clique cover index {self._clique_choice} out of range (have {len(options)})"
                )
            return self._clique_choice
        if self._preferred_labels is not None:
            for i, option in enumerate(options):
                if option.labels == self._preferred_labels:
                    return i
        return 0

    def _recompute(self, first: bool = False) -> None:
        self.analysis = analyze_covers(self.program, declined=frozenset(self._declined))
        covers = self.analysis.covers
        self.cover_index = self._select_cover(covers, first)
        self.cover: GroupCover = covers[self.cover_index]
        self._preferred_cover = self._cover_signature(self.cover)
        self.graph: LambdaGraph = build_graph(self.program, self.cover)
        self.clique_options = enumerate_min_clique_covers(self.graph)
        self.clique_index = self._select_cliques(self.clique_options, first)
        self.clique_cover: CliqueCover = self.clique_options[self.clique_index]
        self._preferred_labels = self.clique_cover.labels

    @property
    def status(self) -> str:
        if not self.analysis.conflicts:
            return "clean"
        if len(self.analysis.uncoverable) == len(self.analysis.conflicts):
            return "blocked"
        return "resolving"

    @property
    def history(self) -> tuple[HistoryEntry, ...]:
        return tuple(self._history)

    @property
    def declined(self) -> frozenset[tuple[str, str]]:
        return frozenset(self._declined)

    def group_order(self) -> list[str]:
        return [r.group_id for r in order_groups(self.graph)]

    # -- choices ---------------------------------------------------------------

    def _resolve_targets(self, clique_members: tuple[str, ...], targets) -> list[str]:
        by_id = {g.id: g for g in self.cover.groups if g.id in clique_members}
        by_rep: dict[str, list[str]] = {}
        for g in by_id.values():
            by_rep.setdefault(g.representative, []).append(g.id)
        resolved: list[str] = []
        for target in targets:
            if target in by_id:
                picked = [target]
            elif target in by_rep:
                picked = by_rep[target]
            else:
                raise InvalidTargetError(
                    f"target {target} is not in the {clique_members} clique"
                )
            for gid in picked:
                if gid not in resolved:
                    resolved.append(gid)
        return resolved

    def choose(self, extension_key: str, targets, *, timestamp: float | None = None) -> ChoiceResult:
        """Apply one offered extension to the chosen clique members.

        Non-targeted members of the clique have this offer declined for their
        representatives, so it will not be offered to them again.
        """
        try:
            ext = extension_from_key(extension_key)
        except ValueError as exc:
            raise StaleExtensionError(str(exc)) from None
        try:
            clique = self.graph.clique(ext.key)
        except KeyError:
            raise StaleExtensionError(f"extension {ext.key} is not currently offered") from None
        if not targets:
            raise InvalidTargetError("at least one target is required")
        picked = self._resolve_targets(clique.members, targets)
        prev_conflicts = set(self.analysis.conflicts)
        prev_groups = list(self.cover.groups)
        program = self.program
        for gid in picked:
            program = apply_extension(program, self.cover.group(gid).representative, ext)
        declines = []
        for gid in clique.members:
            if gid not in picked:
                declines.append((self.cover.group(gid).representative, ext.key))
        self.program = program
        self._declined.update(declines)
        self._history.append(
            HistoryEntry(ext.key, tuple(picked), time.time() if timestamp is None else timestamp)
        )
        self._recompute()
        now_conflicts = set(self.analysis.conflicts)
        resolved_now = [c for c in prev_conflicts if c not in now_conflicts]
        for g in prev_groups:
            if all(c not in now_conflicts for c in g.group.conflicts):
                self._resolved_records.append(
                    {
                        "id": g.id,
                        "anchor": g.id,
                        "representative": g.representative,
                        "conflicts": [list(pair) for pair in g.group.sorted_conflicts()],
                        "size": g.group.size,
                        "resolved": True,
                        "extension": ext.key if g.id in picked else None,
                        "extensions": [],
                    }
                )
        return ChoiceResult(tuple(_sorted_pairs(resolved_now)), self.status)

    def undo(self) -> None:
        """Discard the latest choice by replaying the rest from scratch."""
        if not self._history:
            raise EmptyHistoryError("no choices to undo")
        entries = self._history[:-1]
        self._replay(entries)

    def _replay(self, entries) -> None:
        self._reset()
        for entry in entries:
            self.choose(entry.extension, list(entry.targets), timestamp=entry.timestamp)

    # -- uniform data sweep ------------------------------------------------------

    def check_uniform(
        self,
        sample_count: int | None = None,
        *,
        seed: int = 0,
        exhaustive_limit: int = UNIFORM_EXHAUSTIVE_LIMIT,
        max_failures: int = UNIFORM_MAX_FAILURES,
    ) -> UniformReport:
        """Sweep consistent fact sets over the body literals of the program.

        A fact set fails when the program plus those facts has no consistent
        answer set; the failure kind distinguishes an outright contradiction
        (every literal derivable) from mere answer-set-freedom. Exhaustive when
        the space fits under the limit and no sample count is given.
        """
        p = self.program
        if len(p.atoms()) > KERNEL_ATOM_CAP:
            raise TooLargeError(f"program has {len(p.atoms())} atoms; cap is {KERNEL_ATOM_CAP}")
        enc = Encoding(p)
        by_atom: dict[str, set[Literal]] = {}
        for r in p.rules:
            for bl in r.body:
                by_atom.setdefault(bl.literal.atom, set()).add(bl.literal)
        options = []
        for atom in sorted(by_atom):
            bits = tuple(1 << enc.literal_bit(lit) for lit in sorted(by_atom[atom]))
            options.append((0, *bits))
        total = 1
        for opts in options:
            total *= len(opts)
        if sample_count is None:
            if total > exhaustive_limit:
                raise TooLargeError(
                    f"{total} consistent fact sets exceed the exhaustive limit; pass sample_count"
                )
            scanned, failures, truncated = kernel.uniform_scan(
                enc.heads, enc.pos_masks, enc.neg_masks, enc.neg_universe, enc.evens,
                options, max_failures,
            )
            exhaustive = True
        else:
            rng = random.Random(seed)
            masks = []
            for _ in range(sample_count):
                mask = 0
                for opts in options:
                    mask |= rng.choice(opts)
                masks.append(mask)
            scanned, failures, truncated = kernel.facts_scan(
                enc.heads, enc.pos_masks, enc.neg_masks, enc.neg_universe, enc.evens,
                masks, max_failures,
            )
            exhaustive = False
        reports = tuple(
            UniformFailure(
                tuple(lit.token() for lit in sorted(enc.decode(mask))),
                "contradictory" if kind == 1 else "incoherent",
            )
            for mask, kind in failures
        )
        return UniformReport(scanned, exhaustive, reports, truncated)

    # -- presentation and persistence ---------------------------------------------

    def state_payload(self) -> dict:
        """JSON-ready snapshot of everything a client needs to render."""
        active_groups = []
        for g in self.cover.groups:
            active_groups.append(
                {
                    "id": g.id,
                    "anchor": g.id,
                    "representative": g.representative,
                    "conflicts": [list(pair) for pair in g.group.sorted_conflicts()],
                    "size": g.group.size,
                    "resolved": False,
                    "extension": None,
                    "extensions": [
                        {"literals": [bl.token() for bl in ext.literals], "key": ext.key}
                        for ext in g.extensions
                    ],
                }
            )
        resolved_pairs = [
            pair
            for record in self._resolved_records
            for pair in record["conflicts"]
        ]
        return {
            "status": self.status,
            "program": print_program(self.program),
            "conflicts": [list(pair) for pair in _sorted_pairs(self.analysis.conflicts)],
            "resolved": sorted(resolved_pairs, key=lambda p: tuple(map(natural_key, p))),
            "unresolvable": [list(pair) for pair in _sorted_pairs(self.analysis.uncoverable)],
            "groups": active_groups + self._resolved_records,
            "group_order": self.group_order(),
            "order": order_json(self.graph),
            "graph": graph_to_dict(self.graph),
            "clique_cover": {
                "labels": list(self.clique_cover.labels),
                "approximate": self.clique_cover.approximate,
            },
            "clique_covers": [list(option.labels) for option in self.clique_options],
            "covers": [list(cover.group_ids()) for cover in self.analysis.covers],
            "cover_index": self.cover_index,
            "history": [
                {
                    "extension": entry.extension,
                    "targets": list(entry.targets),
                    "timestamp": entry.timestamp,
                }
                for entry in self._history
            ],
        }

    def save(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_dict(), fh, indent=2)
            fh.write("\n")

    def to_dict(self) -> dict:
        data: dict = {
            "program": print_program(self._initial),
            "history": [
                {"extension": entry.extension, "targets": list(entry.targets)}
                for entry in self._history
            ],
        }
        if isinstance(self._cover_choice, int):
            data["cover"] = self._cover_choice
        if isinstance(self._clique_choice, int):
            data["clique_cover"] = self._clique_choice
        return data

    @classmethod
    def from_dict(cls, data: dict) -> Session:
        session = cls(
            data["program"],
            cover_choice=data.get("cover", "auto"),
            clique_choice=data.get("clique_cover", "auto"),
        )
        for step in data.get("history", ()):
            session.choose(step["extension"], list(step["targets"]))
        return session

    @classmethod
    def load(cls, path: str) -> Session:
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))


def start_session(
    program: Program | str,
    cover_choice: int | str = "auto",
    clique_choice: int | str = "auto",
) -> Session:
    """Open an interactive session over the given program."""
    return Session(program, cover_choice=cover_choice, clique_choice=clique_choice)
