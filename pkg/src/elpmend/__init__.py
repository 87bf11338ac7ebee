"""elpmend: an interactive consistency workbench for ground rule programs.

Detects conflicting rule pairs, enumerates minimal conflict-resolving body
extensions, organizes them into weighted solution graphs with clique covers
and recommendation orders, and drives interactive repair sessions via a
Python API, a CLI, and a local HTTP service.
"""

from __future__ import annotations

from .conflicts import (
    ConflictGroup,
    CoverAnalysis,
    CoverGroup,
    GroupCover,
    NotConflictingError,
    UnresolvableRulesError,
    all_conflicts,
    analyze_covers,
    conflict_group,
    enumerate_min_covers,
    is_conflicting,
    representative_candidates,
)
from .extensions import (
    ExtensionOverflowError,
    InconsistentExtensionError,
    LambdaExtension,
    apply_extension,
    blockers,
    cautious_filter,
    extension_from_key,
    min_extensions,
)
from .lambda_graph import (
    CliqueCover,
    GraphEdge,
    GraphNode,
    LambdaClique,
    LambdaGraph,
    UnknownFormatError,
    UnknownGroupError,
    build_graph,
    enumerate_min_clique_covers,
    export_graph,
    graph_from_json,
    min_clique_cover,
)
from .model import (
    BodyLiteral,
    DuplicateRuleIdError,
    Literal,
    Program,
    ProgramSyntaxError,
    Rule,
    UnknownRuleError,
    natural_key,
    parse_body_token,
    parse_program,
    print_program,
    structurally_equal,
)
from .ordering import ExtensionRank, GroupRank, order_extensions, order_groups, order_json
from .semantics import (
    AnswerSetResult,
    TooLargeError,
    answer_sets,
    body_satisfiable,
    is_consistent,
    reduct,
    satisfies,
)
from .session import (
    ChoiceResult,
    EmptyHistoryError,
    InvalidTargetError,
    Session,
    StaleExtensionError,
    UniformFailure,
    UniformReport,
    start_session,
)

__version__ = "0.1.0"

__all__ = [
    "AnswerSetResult",
    "BodyLiteral",
    "ChoiceResult",
    "CliqueCover",
    "ConflictGroup",
    "CoverAnalysis",
    "CoverGroup",
    "DuplicateRuleIdError",
    "EmptyHistoryError",
    "ExtensionOverflowError",
    "ExtensionRank",
    "GraphEdge",
    "GraphNode",
    "GroupCover",
    "GroupRank",
    "InconsistentExtensionError",
    "InvalidTargetError",
    "LambdaClique",
    "LambdaExtension",
    "LambdaGraph",
    "Literal",
    "NotConflictingError",
    "Program",
    "ProgramSyntaxError",
    "Rule",
    "Session",
    "StaleExtensionError",
    "TooLargeError",
    "UniformFailure",
    "UniformReport",
    "UnknownFormatError",
    "UnknownGroupError",
    "UnknownRuleError",
    "UnresolvableRulesError",
    "all_conflicts",
    "analyze_covers",
    "answer_sets",
    "apply_extension",
    "blockers",
    "body_satisfiable",
    "build_graph",
    "cautious_filter",
    "conflict_group",
    "enumerate_min_clique_covers",
    "enumerate_min_covers",
    "export_graph",
    "extension_from_key",
    "graph_from_json",
    "is_conflicting",
    "is_consistent",
    "min_clique_cover",
    "min_extensions",
    "natural_key",
    "order_extensions",
    "order_groups",
    "order_json",
    "parse_body_token",
    "parse_program",
    "print_program",
    "reduct",
    "representative_candidates",
    "satisfies",
    "start_session",
    "structurally_equal",
]
