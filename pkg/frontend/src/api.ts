/**
 * Typed client for the workbench HTTP service.
 *
 * Every mutation waits for the authoritative state response; there is no
 * optimistic layer and no retry logic. Errors carry the server's
 * {error, detail} envelope.
 */

import type { ChoiceResult, CreatedSession, SessionState } from './types.js';

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    readonly detail: string,
  ) {
    super(`${code}: ${detail}`);
    this.name = 'ApiError';
  }
}

async function throwEnvelope(res: Response): Promise<never> {
  let code = 'unknown';
  let detail = res.statusText;
  try {
    const body = (await res.json()) as { error?: string; detail?: string };
    if (body.error) code = body.error;
    if (body.detail) detail = body.detail;
  } catch {
    // Non-JSON error body; keep the status text.
  }
  throw new ApiError(res.status, code, detail);
}

async function getJson<T>(url: string): Promise<T> {
  const res = await fetch(url);
  if (!res.ok) await throwEnvelope(res);
  return (await res.json()) as T;
}

async function postJson<T>(url: string, payload: unknown): Promise<T> {
  const res = await fetch(url, {
    method: 'POST',
    headers: { 'Content-Type': 'application/json' },
    body: JSON.stringify(payload),
  });
  if (!res.ok) await throwEnvelope(res);
  return (await res.json()) as T;
}

export async function health(base: string): Promise<boolean> {
  try {
    const res = await fetch(`${base}/health`);
    return res.ok;
  } catch {
    return false;
  }
}

export async function createSession(
  base: string,
  program: string,
  cover?: number,
  cliqueCover?: number,
): Promise<CreatedSession> {
  const body: Record<string, unknown> = { program };
  if (cover !== undefined) body.cover = cover;
  if (cliqueCover !== undefined) body.clique_cover = cliqueCover;
  const res = await fetch(`${base}/sessions`, {
    method: 'POST',
    headers: { 'Content-Type': 'application/json' },
    body: JSON.stringify(body),
  });
  // 422 still returns a stored session: blocked, but inspectable.
  if (res.status !== 201 && res.status !== 422) await throwEnvelope(res);
  const data = (await res.json()) as { id: string; state: SessionState };
  return { id: data.id, state: data.state, blocked: res.status === 422 };
}

export async function getSession(base: string, sid: string): Promise<SessionState> {
  const data = await getJson<{ id: string; state: SessionState }>(`${base}/sessions/${sid}`);
  return data.state;
}

export async function getProgram(base: string, sid: string): Promise<string> {
  const res = await fetch(`${base}/sessions/${sid}/program`);
  if (!res.ok) await throwEnvelope(res);
  return await res.text();
}

export async function getGraphDot(base: string, sid: string): Promise<string> {
  const res = await fetch(`${base}/sessions/${sid}/graph?format=dot`);
  if (!res.ok) await throwEnvelope(res);
  return await res.text();
}

export async function postChoice(
  base: string,
  sid: string,
  extension: string,
  targets: string[],
): Promise<ChoiceResult> {
  const data = await postJson<{ state: SessionState; resolved_now: [string, string][] }>(
    `${base}/sessions/${sid}/choices`,
    { extension, targets },
  );
  return { state: data.state, resolvedNow: data.resolved_now };
}

export async function postUndo(base: string, sid: string): Promise<SessionState> {
  const data = await postJson<{ state: SessionState }>(`${base}/sessions/${sid}/undo`, {});
  return data.state;
}
