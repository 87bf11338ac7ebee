/** Shared test utilities: fixture loading, DOM queries, async polling. */

import { readFileSync } from 'node:fs';
import { dirname, join } from 'node:path';
import { fileURLToPath } from 'node:url';

import type { SessionState } from '../src/types.js';

const here = dirname(fileURLToPath(import.meta.url));

/** Load a recorded service state payload from tests/fixtures. */
export function loadState(name: string): SessionState {
  const raw = readFileSync(join(here, 'fixtures', name), 'utf8');
  return JSON.parse(raw) as SessionState;
}

/** Deep-copy a state so tests can mutate payloads safely. */
export function cloneState(state: SessionState): SessionState {
  return JSON.parse(JSON.stringify(state)) as SessionState;
}

export function mount(): HTMLElement {
  const root = document.createElement('div');
  document.body.appendChild(root);
  return root;
}

export function texts(root: ParentNode, selector: string): string[] {
  return Array.from(root.querySelectorAll(selector)).map((n) => n.textContent ?? '');
}

export function click(root: ParentNode, selector: string): void {
  const node = root.querySelector<HTMLElement>(selector);
  if (!node) throw new Error(`no element matches ${selector}`);
  node.click();
}

/** Poll until `probe` returns a truthy value or the timeout elapses. */
export async function until<T>(probe: () => T, timeoutMs = 10_000, label = 'condition'): Promise<T> {
  const deadline = Date.now() + timeoutMs;
  for (;;) {
    const got = probe();
    if (got) return got;
    if (Date.now() > deadline) throw new Error(`timed out waiting for ${label}`);
    await new Promise((resolve) => setTimeout(resolve, 25));
  }
}
