"""Solution graph over a selected group cover.

Nodes are the cover's groups, weighted by conflict count. Two groups sharing
an extension key are joined by an edge labeled with that key; a key offered by
exactly one group becomes a self-loop. Every key therefore induces one clique
(its member set), weighted by the sum of member node weights. A minimum
clique cover picks the fewest keys whose cliques touch every node, breaking
ties by total weight (higher first) and then by canonical key order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .conflicts import GroupCover
from .extensions import key_sort_key
from .model import Program, natural_key


class UnknownFormatError(ValueError):
    """Raised for an unsupported graph export format."""


class UnknownGroupError(KeyError):
    """Raised when a group id is not a node of the graph."""

    def __init__(self, group_id: str):
        super().__init__(group_id)
        self.group_id = group_id


@dataclass(frozen=True)
class GraphNode:
    group_id: str
    weight: int


@dataclass(frozen=True)
class GraphEdge:
    a: str
    b: str
    label: str


@dataclass(frozen=True)
class LambdaClique:
    label: str
    members: tuple[str, ...]
    weight: int


@dataclass(frozen=True)
class CliqueCover:
    labels: tuple[str, ...]
    approximate: bool = False


@dataclass(frozen=True)
class LambdaGraph:
    nodes: tuple[GraphNode, ...]
    edges: tuple[GraphEdge, ...]
    cliques: tuple[LambdaClique, ...]

    def node(self, group_id: str) -> GraphNode:
        for n in self.nodes:
            if n.group_id == group_id:
                return n
        raise UnknownGroupError(group_id)

    def clique(self, label: str) -> LambdaClique:
        for q in self.cliques:
            if q.label == label:
                return q
        raise KeyError(label)

    def cliques_of(self, group_id: str) -> tuple[LambdaClique, ...]:
        self.node(group_id)
        return tuple(q for q in self.cliques if group_id in q.members)


def build_graph(p: Program, cover: GroupCover) -> LambdaGraph:
    """Assemble the labeled graph and its per-key cliques for one cover."""
    nodes = tuple(
        GraphNode(g.id, g.weight)
        for g in sorted(cover.groups, key=lambda g: natural_key(g.id))
    )
    weights = {n.group_id: n.weight for n in nodes}
    members_by_label: dict[str, list[str]] = {}
    for g in cover.groups:
        for ext in g.extensions:
            members_by_label.setdefault(ext.key, []).append(g.id)
    edges: list[GraphEdge] = []
    cliques: list[LambdaClique] = []
    for label, members in members_by_label.items():
        members = sorted(set(members), key=natural_key)
        cliques.append(LambdaClique(label, tuple(members), sum(weights[m] for m in members)))
        if len(members) == 1:
            edges.append(GraphEdge(members[0], members[0], label))
        else:
            for i, a in enumerate(members):
                for b in members[i + 1 :]:
                    edges.append(GraphEdge(a, b, label))
    edges.sort(key=lambda e: (key_sort_key(e.label), natural_key(e.a), natural_key(e.b)))
    cliques.sort(key=lambda q: (-q.weight, key_sort_key(q.label)))
    return LambdaGraph(nodes, tuple(edges), tuple(cliques))


EXACT_COVER_LABEL_CAP = 24


def enumerate_min_clique_covers(g: LambdaGraph, *, max_labels_exact: int = EXACT_COVER_LABEL_CAP) -> list[CliqueCover]:
    """All minimum-cardinality clique covers, best tie-break first.

    Past the exact-search label cap a single greedy cover is returned with the
    approximate flag set.
    """
    node_ids = [n.group_id for n in g.nodes]
    if not node_ids:
        return [CliqueCover(())]
    cliques = list(g.cliques)
    covering: dict[str, list[int]] = {nid: [] for nid in node_ids}
    for qi, q in enumerate(cliques):
        for m in q.members:
            covering[m].append(qi)
    if any(not qis for qis in covering.values()):
        # A node with an empty extension menu cannot appear in a cover's
        # graph, but guard anyway.
        uncovered = [nid for nid, qis in covering.items() if not qis]
        raise UnknownGroupError(uncovered[0])
    if len(cliques) > max_labels_exact:
        chosen: set[int] = set()
        covered: set[str] = set()
        while len(covered) < len(node_ids):
            best = max(
                range(len(cliques)),
                key=lambda qi: (len(set(cliques[qi].members) - covered), cliques[qi].weight, qi),
            )
            chosen.add(best)
            covered.update(cliques[best].members)
        labels = sorted((cliques[qi].label for qi in chosen), key=key_sort_key)
        return [CliqueCover(tuple(labels), approximate=True)]
    order = sorted(node_ids, key=lambda nid: len(covering[nid]))
    best_size = len(cliques) + 1
    families: list[frozenset[int]] = []

    def search(chosen: frozenset[int], covered: frozenset[str]) -> None:
        nonlocal best_size, families
        if len(chosen) > best_size:
            return
        target = next((nid for nid in order if nid not in covered), None)
        if target is None:
            if len(chosen) < best_size:
                best_size = len(chosen)
                families = [chosen]
            elif len(chosen) == best_size and chosen not in families:
                families.append(chosen)
            return
        if len(chosen) == best_size:
            return
        for qi in covering[target]:
            if qi not in chosen:
                search(chosen | {qi}, covered | set(cliques[qi].members))

    search(frozenset(), frozenset())
    scored = []
    for family in families:
        labels = tuple(sorted((cliques[qi].label for qi in family), key=key_sort_key))
        total = sum(cliques[qi].weight for qi in family)
        scored.append((-total, tuple(key_sort_key(label) for label in labels), labels))
    scored.sort()
    return [CliqueCover(labels) for _, _, labels in scored]


def min_clique_cover(g: LambdaGraph, *, max_labels_exact: int = EXACT_COVER_LABEL_CAP) -> CliqueCover:
    """The best minimum clique cover under the standard tie-breaks."""
    return enumerate_min_clique_covers(g, max_labels_exact=max_labels_exact)[0]


def graph_to_dict(g: LambdaGraph) -> dict:
    return {
        "nodes": [{"group": n.group_id, "weight": n.weight} for n in g.nodes],
        "edges": [{"a": e.a, "b": e.b, "label": e.label} for e in g.edges],
        "cliques": [
            {"label": q.label, "members": list(q.members), "weight": q.weight}
            for q in g.cliques
        ],
    }


def graph_from_dict(data: dict) -> LambdaGraph:
    nodes = tuple(GraphNode(n["group"], int(n["weight"])) for n in data.get("nodes", ()))
    edges = tuple(GraphEdge(e["a"], e["b"], e["label"]) for e in data.get("edges", ()))
    cliques = tuple(
        LambdaClique(q["label"], tuple(q["members"]), int(q["weight"]))
        for q in data.get("cliques", ())
    )
    return LambdaGraph(nodes, edges, cliques)


def graph_from_json(text: str) -> LambdaGraph:
    return graph_from_dict(json.loads(text))


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_graph(g: LambdaGraph, fmt: str = "json") -> str:
    """Serialize the graph as pretty JSON or Graphviz DOT."""
    if fmt == "json":
        return json.dumps(graph_to_dict(g), indent=2) + "\n"
    if fmt == "dot":
        lines = ["graph lambda {"]
        for n in g.nodes:
            name = _dot_quote(f"cgr({n.group_id})")
            label = _dot_quote(f"cgr({n.group_id}) [{n.weight}]")
            lines.append(f"  {name} [label={label}];")
        for e in g.edges:
            a = _dot_quote(f"cgr({e.a})")
            b = _dot_quote(f"cgr({e.b})")
            lines.append(f"  {a} -- {b} [label={_dot_quote(e.label)}];")
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise UnknownFormatError(fmt)
