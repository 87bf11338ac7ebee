/**
 * Read-only lookups over a session state snapshot.
 *
 * Everything here walks the server's arrays in their given order; nothing
 * is sorted, ranked, or recomputed client-side.
 */

import type {
  CliquePayload,
  ConflictPair,
  ExtensionRank,
  GroupRow,
  SessionState,
} from './types.js';

/** Unresolved groups, in the server's recommendation order. */
export function activeGroups(state: SessionState): GroupRow[] {
  const byId = new Map(state.groups.map((g) => [g.id, g]));
  const rows: GroupRow[] = [];
  for (const rank of state.order.groups) {
    const row = byId.get(rank.id);
    if (row) rows.push(row);
  }
  return rows;
}

/** Groups already settled this session, in payload order. */
export function resolvedGroups(state: SessionState): GroupRow[] {
  return state.groups.filter((g) => g.resolved);
}

/** The server-ranked extension menu for one group (empty when unknown). */
export function menuFor(state: SessionState, groupId: string): ExtensionRank[] {
  return state.order.extensions[groupId] ?? [];
}

/** The clique an extension key labels, if it exists in the current graph. */
export function cliqueFor(state: SessionState, key: string): CliquePayload | undefined {
  return state.graph.cliques.find((q) => q.label === key);
}

/** Labels of every clique touching the group, in graph order. */
export function cliqueBadges(state: SessionState, groupId: string): string[] {
  return state.graph.cliques.filter((q) => q.members.includes(groupId)).map((q) => q.label);
}

/** Rank stats for a group, when it is part of the current order. */
export function rankFor(state: SessionState, groupId: string) {
  return state.order.groups.find((r) => r.id === groupId);
}

export function pairLabel(pair: ConflictPair): string {
  return `{${pair[0]},${pair[1]}}`;
}

/** Display form of an extension key: `~x` reads "not x". */
export function keyLabel(key: string): string {
  return `{${key}}`;
}
