"""Property-based invariants over randomly generated programs and graphs."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from elpmend.conflicts import (
    UnresolvableRulesError,
    all_conflicts,
    analyze_covers,
    conflict_group,
    enumerate_min_covers,
    is_conflicting,
    representative_candidates,
)
from elpmend.extensions import (
    LambdaExtension,
    apply_extension,
    cautious_filter,
    extension_from_key,
    key_sort_key,
    min_extensions,
)
from elpmend.lambda_graph import (
    GraphNode,
    LambdaClique,
    LambdaGraph,
    build_graph,
    enumerate_min_clique_covers,
)
from elpmend.model import (
    BodyLiteral,
    Literal,
    Program,
    Rule,
    natural_key,
    parse_program,
    print_program,
)
from elpmend.semantics import answer_sets, body_satisfiable
from elpmend.session import Session

ATOMS = "abcd"


def literal_st():
    return st.builds(Literal, st.sampled_from(ATOMS), st.booleans())


def body_literal_st():
    return st.builds(BodyLiteral, literal_st(), st.booleans())


@st.composite
def program_st(draw, max_rules: int = 5, max_body: int = 3):
    count = draw(st.integers(min_value=0, max_value=max_rules))
    rules = []
    for i in range(count):
        head = draw(literal_st())
        body = draw(st.lists(body_literal_st(), max_size=max_body))
        dedup: list[BodyLiteral] = []
        for bl in body:
            if bl not in dedup:
                dedup.append(bl)
        rules.append(Rule(f"r{i + 1}", head, tuple(dedup)))
    return Program(tuple(rules))


@settings(deadline=None)
@given(program_st())
def test_print_parse_round_trip(p):
    text = print_program(p)
    again = parse_program(text)
    assert again.rules == p.rules
    assert print_program(again) == text


@settings(deadline=None)
@given(program_st())
def test_answer_sets_match_oracle(p):
    want_sets, want_marker = oracles.oracle_answer_sets(p)
    got = answer_sets(p)
    assert set(got.sets) == want_sets
    assert got.contradictory == want_marker
    # A contradictory program has no consistent answer sets and vice versa.
    assert not (got.contradictory and got.sets)


@settings(deadline=None)
@given(program_st(max_rules=4, max_body=2))
def test_negation_free_answer_sets_match_oracle(p):
    stripped = Program(
        tuple(
            Rule(r.id, r.head, tuple(bl for bl in r.body if not bl.default_neg))
            for r in p.rules
        )
    )
    want_sets, want_marker = oracles.oracle_answer_sets(stripped)
    got = answer_sets(stripped)
    assert set(got.sets) == want_sets
    assert got.contradictory == want_marker
    # Without default negation the least closure always exists, so the
    # result is exactly one answer set or the contradictory marker.
    assert (len(got.sets) == 1) != got.contradictory


@settings(deadline=None)
@given(program_st())
def test_conflicts_match_oracle(p):
    got = {frozenset(c) for c in all_conflicts(p)}
    assert got == oracles.oracle_all_conflicts(p)
    for r in p.rules:
        for other in p.rules:
            assert is_conflicting(r, other) == is_conflicting(other, r)
    for rid in sorted({rid for c in got for rid in c}, key=natural_key):
        group = conflict_group(p, rid)
        assert group.size == sum(1 for c in got if rid in c)


@settings(deadline=None)
@given(program_st())
def test_min_extensions_match_oracle_per_conflict(p):
    for conflict in all_conflicts(p):
        a, b = sorted(conflict, key=natural_key)
        for rid, oid in ((a, b), (b, a)):
            r, opp = p.rule(rid), p.rule(oid)
            got = min_extensions(r, [opp])
            want = oracles.oracle_min_extensions(r, [opp])
            assert {e.literals for e in got} == {
                tuple(sorted(s)) for s in want
            }, (rid, oid)


@settings(deadline=None)
@given(program_st())
def test_extensions_are_sound_and_minimal(p):
    before = {frozenset(c) for c in all_conflicts(p)}
    for conflict in all_conflicts(p):
        for rid in sorted(conflict, key=natural_key):
            (oid,) = conflict - {rid}
            r, opp = p.rule(rid), p.rule(oid)
            exts = min_extensions(r, [opp])
            for ext in exts:
                q = apply_extension(p, rid, ext)
                after = {frozenset(c) for c in all_conflicts(q)}
                assert frozenset(conflict) not in after
                # Growing one body never creates a conflict elsewhere.
                assert after <= before
                # Dropping any literal of a minimal extension stops breaking
                # the opponent or leaves another minimal set inside.
                for bl in ext.literals:
                    smaller = frozenset(ext.literals) - {bl}
                    assert not any(
                        set(o.literals) == smaller for o in exts if o is not ext
                    )


@settings(deadline=None)
@given(st.lists(st.builds(LambdaExtension.of, st.lists(body_literal_st(), min_size=1, max_size=3)), max_size=6))
def test_cautious_filter_invariants(extensions):
    kept = cautious_filter(extensions)
    assert set(kept) <= set(extensions)
    if extensions:
        assert kept, "filter must never empty a nonempty menu"
    assert cautious_filter(kept) == kept


@settings(deadline=None)
@given(program_st())
def test_representatives_match_oracle(p):
    seen = set()
    for conflict in all_conflicts(p):
        group = conflict_group(p, sorted(conflict, key=natural_key)[0])
        if group.conflicts in seen:
            continue
        seen.add(group.conflicts)
        got = dict(representative_candidates(p, group))
        want = oracles.oracle_representatives(p, group.conflicts)
        filtered = {
            rid: cautious_filter(sorted(LambdaExtension.of(s) for s in exts))
            for rid, exts in want.items()
        }
        assert {rid for rid in got} == {rid for rid in filtered}
        for rid, exts in got.items():
            assert list(exts) == filtered[rid]


@settings(deadline=None, max_examples=60)
@given(program_st())
def test_covers_match_oracle_families(p):
    analysis = analyze_covers(p)
    families, reps, uncoverable = oracles.oracle_cover_analysis(p)
    got = {
        frozenset(g.group.conflicts for g in cover.groups)
        for cover in analysis.covers
    }
    assert got == set(families)
    assert set(analysis.uncoverable) == uncoverable
    for cover in analysis.covers:
        for g in cover.groups:
            assert g.representative in reps[g.group.conflicts]
    # The strict enumerator refuses exactly when something is uncoverable.
    strict, _ = oracles.oracle_min_cover_families(p)
    if uncoverable:
        assert strict == []
        with pytest.raises(UnresolvableRulesError):
            enumerate_min_covers(p)
    else:
        assert set(strict) == got
        assert [c.group_ids() for c in enumerate_min_covers(p)] == [
            c.group_ids() for c in analysis.covers
        ]


@settings(deadline=None)
@given(program_st())
def test_built_graph_structure(p):
    analysis = analyze_covers(p)
    if not analysis.covers:
        return
    cover = analysis.covers[0]
    g = build_graph(p, cover)
    node_weight = {n.group_id: n.weight for n in g.nodes}
    assert node_weight == {cg.id: cg.weight for cg in cover.groups}
    expected_edges = set()
    for clique in g.cliques:
        # Clique weight sums its member nodes' weights.
        assert clique.weight == sum(node_weight[m] for m in clique.members)
        members = sorted(clique.members, key=natural_key)
        if len(members) == 1:
            expected_edges.add((members[0], members[0], clique.label))
        else:
            for i, a in enumerate(members):
                for b in members[i + 1 :]:
                    expected_edges.add((a, b, clique.label))
    # Per-label completeness: the edges are exactly every member pair of
    # every clique, with a self-loop for singleton cliques.
    assert {(e.a, e.b, e.label) for e in g.edges} == expected_edges
    # Every node is covered by at least one clique.
    covered = {m for q in g.cliques for m in q.members}
    assert covered == set(node_weight)


@st.composite
def graph_st(draw):
    node_count = draw(st.integers(min_value=1, max_value=5))
    weights = {
        f"r{i + 1}": draw(st.integers(min_value=1, max_value=3))
        for i in range(node_count)
    }
    ids = sorted(weights, key=natural_key)
    clique_count = draw(st.integers(min_value=0, max_value=5))
    member_sets = []
    for _ in range(clique_count):
        member_sets.append(
            draw(st.lists(st.sampled_from(ids), min_size=1, max_size=node_count, unique=True))
        )
    covered = {m for members in member_sets for m in members}
    for nid in ids:
        if nid not in covered:
            member_sets.append([nid])
    cliques = tuple(
        LambdaClique(
            f"k{j}",
            tuple(sorted(members, key=natural_key)),
            sum(weights[m] for m in members),
        )
        for j, members in enumerate(member_sets)
    )
    nodes = tuple(GraphNode(nid, weights[nid]) for nid in ids)
    return LambdaGraph(nodes, (), cliques)


@settings(deadline=None)
@given(graph_st())
def test_min_clique_covers_match_oracle(g):
    cliques = {q.label: (frozenset(q.members), q.weight) for q in g.cliques}
    want = oracles.oracle_min_clique_covers([n.group_id for n in g.nodes], cliques)
    got = enumerate_min_clique_covers(g)
    assert {frozenset(c.labels) for c in got} == {frozenset(w) for w in want}
    weigh = lambda labels: sum(cliques[label][1] for label in labels)
    assert weigh(got[0].labels) == max(weigh(w) for w in want)
    # Labels inside each cover are reported in canonical key order.
    for cover in got:
        assert list(cover.labels) == sorted(cover.labels, key=key_sort_key)


@settings(deadline=None, max_examples=60)
@given(program_st())
def test_session_replay_and_undo(p):
    session = Session(p)
    if session.status != "resolving":
        assert session.graph.cliques == ()
        return
    initial = session.state_payload()
    conflicts_before = len(all_conflicts(session.program))
    clique = session.graph.cliques[0]
    session.choose(clique.label, list(clique.members))
    # Monotone progress: a successful choice strictly shrinks the conflicts.
    assert len(all_conflicts(session.program)) < conflicts_before
    stepped = session.state_payload()
    # Round-tripping through the save format replays to the same state.
    copy = Session.from_dict(session.to_dict())
    replayed = copy.state_payload()
    for payload in (stepped, replayed):
        for entry in payload["history"]:
            entry.pop("timestamp")
    assert replayed == stepped
    # Undo restores the initial analysis exactly.
    session.undo()
    back = session.state_payload()
    assert back == initial


@settings(deadline=None)
@given(program_st())
def test_resolution_loop_terminates(p):
    """Repeatedly taking the first clique ends clean or blocked, never loops."""
    session = Session(p)
    budget = len(all_conflicts(p))
    steps = 0
    while session.status == "resolving":
        assert steps <= budget, "loop failed to terminate"
        clique = session.graph.cliques[0]
        session.choose(clique.label, list(clique.members))
        steps += 1
    remaining = {frozenset(c) for c in all_conflicts(session.program)}
    if session.status == "clean":
        assert remaining == set()
    else:
        # Blocked: everything left is unresolvable, and is reported as such.
        assert remaining == {frozenset(c) for c in session.analysis.uncoverable}
        assert remaining


@settings(deadline=None)
@given(st.lists(body_literal_st(), min_size=1, max_size=4))
def test_extension_key_round_trip(literals):
    ext = LambdaExtension.of(literals)
    assert extension_from_key(ext.key) == ext
    assert key_sort_key(ext.key) == tuple(ext.literals)


@settings(deadline=None)
@given(st.lists(body_literal_st(), max_size=5))
def test_body_satisfiable_matches_oracle(body):
    assert body_satisfiable(body) == oracles.body_satisfiable(body)
