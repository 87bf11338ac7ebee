"""Ordering strategies over the solution graph.

Groups are ranked by how few cliques they sit in (fewer first: fewer shared
repair options means less room to wait), then by the total weight of those
cliques (higher first), then by natural id. Within a group, extensions are
ranked by their clique's weight (higher first: a heavier key repairs more),
then by canonical key order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .extensions import key_sort_key
from .lambda_graph import LambdaGraph
from .model import natural_key


@dataclass(frozen=True)
class GroupRank:
    group_id: str
    cliques: int
    weight: int


@dataclass(frozen=True)
class ExtensionRank:
    key: str
    weight: int


def order_groups(g: LambdaGraph) -> list[GroupRank]:
    """All graph nodes in recommended resolution order."""
    ranks = []
    for node in g.nodes:
        containing = g.cliques_of(node.group_id)
        ranks.append(
            GroupRank(node.group_id, len(containing), sum(q.weight for q in containing))
        )
    ranks.sort(key=lambda r: (r.cliques, -r.weight, natural_key(r.group_id)))
    return ranks


def order_extensions(g: LambdaGraph, group_id: str) -> list[ExtensionRank]:
    """One group's extension keys in recommended order."""
    containing = g.cliques_of(group_id)
    pairs = [(q.label, q.weight) for q in containing]
    pairs.sort(key=lambda kv: (-kv[1], key_sort_key(kv[0])))
    return [ExtensionRank(key, weight) for key, weight in pairs]


def order_json(g: LambdaGraph) -> dict:
    """The combined ordering report used by the CLI and the service."""
    groups = order_groups(g)
    return {
        "groups": [
            {"id": r.group_id, "cliques": r.cliques, "weight": r.weight} for r in groups
        ],
        "extensions": {
            r.group_id: [
                {"key": e.key, "weight": e.weight}
                for e in order_extensions(g, r.group_id)
            ]
            for r in groups
        },
    }
