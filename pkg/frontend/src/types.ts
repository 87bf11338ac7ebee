/**
 * Typed mirrors of the workbench service's JSON payloads.
 *
 * The shapes here follow the server exactly; the UI never derives or
 * reorders anything that the service already reports.
 */

/** A conflicting rule pair, ids in server order. */
export type ConflictPair = [string, string];

/** One minimal body extension offered for a rule. */
export interface ExtensionOffer {
  literals: string[];
  key: string;
}

/** A conflict group row as the server reports it. */
export interface GroupRow {
  id: string;
  anchor: string;
  representative: string;
  conflicts: ConflictPair[];
  size: number;
  resolved: boolean;
  /** Extension key recorded when the group was resolved, if any. */
  extension: string | null;
  extensions: ExtensionOffer[];
}

/** Server-computed group rank: clique count and touched weight. */
export interface GroupRank {
  id: string;
  cliques: number;
  weight: number;
}

/** Server-computed extension rank inside one group's menu. */
export interface ExtensionRank {
  key: string;
  weight: number;
}

/** Both recommendation orders, exactly as the server sorted them. */
export interface OrderPayload {
  groups: GroupRank[];
  extensions: Record<string, ExtensionRank[]>;
}

export interface GraphNodePayload {
  group: string;
  weight: number;
}

export interface GraphEdgePayload {
  a: string;
  b: string;
  label: string;
}

export interface CliquePayload {
  label: string;
  members: string[];
  weight: number;
}

export interface GraphPayload {
  nodes: GraphNodePayload[];
  edges: GraphEdgePayload[];
  cliques: CliquePayload[];
}

export interface CliqueCoverPayload {
  labels: string[];
  approximate: boolean;
}

export interface HistoryEntry {
  extension: string;
  targets: string[];
  timestamp: number;
}

export type SessionStatus = 'resolving' | 'clean' | 'blocked';

/** Full session state snapshot returned by every endpoint. */
export interface SessionState {
  status: SessionStatus;
  program: string;
  conflicts: ConflictPair[];
  resolved: ConflictPair[];
  unresolvable: ConflictPair[];
  groups: GroupRow[];
  group_order: string[];
  order: OrderPayload;
  covers: string[][];
  cover_index: number;
  clique_cover: CliqueCoverPayload;
  clique_covers: string[][];
  graph: GraphPayload;
  history: HistoryEntry[];
}

export interface CreatedSession {
  id: string;
  state: SessionState;
  /** True when the server answered 422: every conflict is unresolvable. */
  blocked: boolean;
}

export interface ChoiceResult {
  state: SessionState;
  resolvedNow: ConflictPair[];
}
