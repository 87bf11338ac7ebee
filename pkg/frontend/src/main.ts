/**
 * Application wiring: setup screen, session loop, and action handlers.
 *
 * Every mutation round-trips to the service and re-renders from the
 * authoritative response; the client never updates analysis state on its
 * own. `startApp` is exported so tests can mount the app against any
 * service base URL.
 */

import { ApiError, createSession, getProgram, getSession, postChoice, postUndo } from './api.js';
import { initialUiState, renderWorkbench, type Handlers, type UiState } from './render.js';
import type { SessionState } from './types.js';
import { cliqueFor } from './viewmodel.js';

/** A 16-rule sample with nine conflicts; handy for a quick tour. */
export const SAMPLE_PROGRAM = `a :- b, not c.
-a :- b.
x :- d, e, f, not c.
-x :- d, e.
y :- g, h, f.
-y :- g.
z :- j, k, not l.
-z :- j, not l.
w :- f, m, n.
-w :- m.
-w :- n.
p :- o, h, f, not q.
-p :- o, not q.
u :- s.
-u :- s, -t, h.
-u :- s, t, h.
`;

interface AppState {
  sid: string | null;
  state: SessionState | null;
  ui: UiState;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function renderSetup(
  root: HTMLElement,
  error: string | null,
  onStart: (program: string, cover: number | undefined) => void,
): void {
  root.textContent = '';
  const panel = el('section', 'setup-panel');
  panel.appendChild(el('h1', undefined, 'Consistency workbench'));
  panel.appendChild(
    el(
      'p',
      undefined,
      'Paste a rule program (one rule per line, "-" for strong negation, "not" for default negation).',
    ),
  );
  if (error) {
    const banner = el('div', 'banner error-banner', error);
    banner.setAttribute('role', 'alert');
    panel.appendChild(banner);
  }
  const textarea = el('textarea', 'program-input') as HTMLTextAreaElement;
  textarea.rows = 16;
  textarea.placeholder = 'fly :- bird, not penguin.';
  panel.appendChild(textarea);

  const controls = el('div', 'setup-controls');
  const coverInput = el('input', 'cover-input') as HTMLInputElement;
  coverInput.type = 'number';
  coverInput.min = '0';
  coverInput.placeholder = 'cover (auto)';
  controls.appendChild(coverInput);

  const sample = el('button', 'load-sample', 'Load sample');
  sample.type = 'button';
  sample.addEventListener('click', () => {
    textarea.value = SAMPLE_PROGRAM;
  });
  controls.appendChild(sample);

  const start = el('button', 'start-session', 'Start session');
  start.type = 'button';
  start.addEventListener('click', () => {
    const cover = coverInput.value === '' ? undefined : Number(coverInput.value);
    onStart(textarea.value, cover);
  });
  controls.appendChild(start);
  panel.appendChild(controls);
  root.appendChild(panel);
}

/** Mount the app under `root`, pointing at the service at `base`. */
export function startApp(root: HTMLElement, base = ''): void {
  const app: AppState = { sid: null, state: null, ui: initialUiState() };

  const redraw = () => {
    if (!app.state) return;
    renderWorkbench(root, app.state, app.ui, handlers);
  };

  /** Run a service call; on conflict errors refresh state and show the detail inline. */
  const mutate = async (call: () => Promise<void>) => {
    if (!app.sid || app.ui.busy) return;
    app.ui.busy = true;
    app.ui.error = null;
    redraw();
    try {
      await call();
    } catch (err) {
      if (err instanceof ApiError) {
        app.ui.error = `${err.code}: ${err.detail}`;
        if (err.status === 409) {
          app.state = await getSession(base, app.sid);
          app.ui.selectedGroup = null;
          app.ui.selectedExtension = null;
          app.ui.checked = [];
        }
      } else {
        app.ui.error = `connection lost: ${String(err)}`;
      }
    }
    app.ui.busy = false;
    redraw();
  };

  const handlers: Handlers = {
    onSelectGroup(groupId) {
      app.ui.selectedGroup = groupId;
      app.ui.selectedExtension = null;
      app.ui.checked = [];
      app.ui.error = null;
      redraw();
    },
    onPickExtension(key) {
      if (!app.state || !app.ui.selectedGroup) return;
      app.ui.selectedExtension = key;
      // Pre-check every member of the extension's clique; the expert
      // may uncheck any of them before submitting.
      const clique = cliqueFor(app.state, key);
      app.ui.checked = clique ? [...clique.members] : [app.ui.selectedGroup];
      redraw();
    },
    onToggleTarget(member) {
      const at = app.ui.checked.indexOf(member);
      if (at >= 0) app.ui.checked.splice(at, 1);
      else app.ui.checked.push(member);
      redraw();
    },
    onSubmitChoice() {
      const key = app.ui.selectedExtension;
      const targets = [...app.ui.checked];
      if (!key || targets.length === 0) return;
      void mutate(async () => {
        const result = await postChoice(base, app.sid!, key, targets);
        app.state = result.state;
        app.ui.selectedGroup = null;
        app.ui.selectedExtension = null;
        app.ui.checked = [];
        app.ui.notice = result.resolvedNow.length
          ? `resolved ${result.resolvedNow.map((p) => `{${p[0]},${p[1]}}`).join(' ')}`
          : 'choice recorded';
      });
    },
    onUndo() {
      void mutate(async () => {
        app.state = await postUndo(base, app.sid!);
        app.ui.selectedGroup = null;
        app.ui.selectedExtension = null;
        app.ui.checked = [];
        app.ui.notice = 'reverted last step';
        app.ui.exportedText = null;
      });
    },
    onExport() {
      void mutate(async () => {
        app.ui.exportedText = await getProgram(base, app.sid!);
        app.ui.notice = 'program exported below';
      });
    },
  };

  const begin = (program: string, cover: number | undefined) => {
    void (async () => {
      try {
        const created = await createSession(base, program, cover);
        app.sid = created.id;
        app.state = created.state;
        app.ui = initialUiState();
        if (created.blocked) app.ui.notice = 'every conflict is unresolvable';
        redraw();
      } catch (err) {
        const message =
          err instanceof ApiError ? `${err.code}: ${err.detail}` : `connection lost: ${String(err)}`;
        renderSetup(root, message, begin);
      }
    })();
  };

  renderSetup(root, null, begin);
}
