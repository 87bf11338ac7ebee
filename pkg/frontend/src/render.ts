/**
 * Pure DOM renderers for the resolution workbench.
 *
 * `renderWorkbench` rebuilds the screen from the latest server state plus
 * a small client-only UI state (selection, checkboxes, banners). All row
 * and menu orders come straight from the payload.
 */

import { renderGraph } from './graph.js';
import type { SessionState } from './types.js';
import {
  activeGroups,
  cliqueBadges,
  cliqueFor,
  keyLabel,
  menuFor,
  pairLabel,
  rankFor,
  resolvedGroups,
} from './viewmodel.js';

/** Client-only view state; never derived from rule analysis. */
export interface UiState {
  selectedGroup: string | null;
  selectedExtension: string | null;
  /** Checked clique-member targets for the pending choice. */
  checked: string[];
  error: string | null;
  notice: string | null;
  exportedText: string | null;
  busy: boolean;
}

export function initialUiState(): UiState {
  return {
    selectedGroup: null,
    selectedExtension: null,
    checked: [],
    error: null,
    notice: null,
    exportedText: null,
    busy: false,
  };
}

export interface Handlers {
  onSelectGroup(groupId: string): void;
  onPickExtension(key: string): void;
  onToggleTarget(member: string): void;
  onSubmitChoice(): void;
  onUndo(): void;
  onExport(): void;
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

function button(label: string, className: string, onClick: () => void, disabled = false) {
  const b = el('button', className, label);
  b.type = 'button';
  b.disabled = disabled;
  b.addEventListener('click', onClick);
  return b;
}

function renderStatusBar(state: SessionState, ui: UiState, handlers: Handlers): HTMLElement {
  const bar = el('header', 'status-bar');
  bar.appendChild(el('span', `status status-${state.status}`, state.status));
  bar.appendChild(
    el('span', 'conflict-count', `${state.conflicts.length} open / ${state.resolved.length} resolved`),
  );
  bar.appendChild(
    button('Undo last step', 'undo-button', handlers.onUndo, ui.busy || state.history.length === 0),
  );
  bar.appendChild(button('Export program', 'export-button', handlers.onExport, ui.busy));
  return bar;
}

function renderBanners(ui: UiState): HTMLElement {
  const wrap = el('div', 'banners');
  if (ui.error) {
    const banner = el('div', 'banner error-banner', ui.error);
    banner.setAttribute('role', 'alert');
    wrap.appendChild(banner);
  }
  if (ui.notice) wrap.appendChild(el('div', 'banner notice-banner', ui.notice));
  return wrap;
}

function renderQueue(state: SessionState, ui: UiState, handlers: Handlers): HTMLElement {
  const section = el('section', 'conflict-queue');
  section.appendChild(el('h2', undefined, 'Conflict groups'));
  const list = el('ul', 'queue-list');
  for (const row of activeGroups(state)) {
    const item = el('li', 'queue-row');
    if (row.id === ui.selectedGroup) item.classList.add('selected');
    item.dataset.group = row.id;
    const rank = rankFor(state, row.id);
    const head = button(`cgr(${row.anchor})`, 'group-button', () => handlers.onSelectGroup(row.id));
    item.appendChild(head);
    item.appendChild(el('span', 'rep', `rep ${row.representative}`));
    item.appendChild(el('span', 'pairs', row.conflicts.map(pairLabel).join(' ')));
    item.appendChild(el('span', 'size', `size ${row.size}`));
    if (rank) item.appendChild(el('span', 'rank', `cliques ${rank.cliques} weight ${rank.weight}`));
    const badges = el('span', 'badges');
    for (const label of cliqueBadges(state, row.id)) {
      badges.appendChild(el('span', 'badge', keyLabel(label)));
    }
    item.appendChild(badges);
    list.appendChild(item);
  }
  for (const row of resolvedGroups(state)) {
    const item = el('li', 'queue-row resolved');
    item.dataset.group = row.id;
    item.appendChild(el('span', 'group-name', `cgr(${row.anchor})`));
    item.appendChild(el('span', 'pairs', row.conflicts.map(pairLabel).join(' ')));
    item.appendChild(
      el('span', 'resolution', row.extension ? `resolved with ${keyLabel(row.extension)}` : 'resolved'),
    );
    list.appendChild(item);
  }
  section.appendChild(list);
  return section;
}

function renderChoicePanel(state: SessionState, ui: UiState, handlers: Handlers): HTMLElement {
  const panel = el('section', 'choice-panel');
  if (!ui.selectedGroup) {
    panel.appendChild(el('p', 'hint', 'Pick a conflict group to see its suggested extensions.'));
    return panel;
  }
  const row = state.groups.find((g) => g.id === ui.selectedGroup);
  if (!row || row.resolved) {
    panel.appendChild(el('p', 'hint', 'This group is settled; pick another.'));
    return panel;
  }
  panel.appendChild(el('h2', undefined, `Extend cgr(${row.anchor})`));
  const rules = el('p', 'conflict-rules', row.conflicts.map(pairLabel).join('  '));
  panel.appendChild(rules);

  const menu = el('ul', 'extension-menu');
  for (const rank of menuFor(state, row.id)) {
    const item = el('li', 'extension-option');
    const label = el('label');
    const radio = el('input') as HTMLInputElement;
    radio.type = 'radio';
    radio.name = 'extension';
    radio.value = rank.key;
    radio.checked = ui.selectedExtension === rank.key;
    radio.addEventListener('change', () => handlers.onPickExtension(rank.key));
    label.appendChild(radio);
    label.appendChild(
      document.createTextNode(` ${keyLabel(rank.key)} (weight ${rank.weight})`),
    );
    item.appendChild(label);
    menu.appendChild(item);
  }
  panel.appendChild(menu);

  if (ui.selectedExtension) {
    const clique = cliqueFor(state, ui.selectedExtension);
    const members = clique ? clique.members : [row.id];
    panel.appendChild(
      el('p', 'target-hint', 'Also apply to every clique member, or uncheck some:'),
    );
    const targets = el('ul', 'target-list');
    for (const member of members) {
      const item = el('li');
      const label = el('label');
      const box = el('input') as HTMLInputElement;
      box.type = 'checkbox';
      box.value = member;
      box.checked = ui.checked.includes(member);
      box.addEventListener('change', () => handlers.onToggleTarget(member));
      label.appendChild(box);
      label.appendChild(document.createTextNode(` cgr(${member})`));
      item.appendChild(label);
      targets.appendChild(item);
    }
    panel.appendChild(targets);
  }
  panel.appendChild(
    button(
      'Apply extension',
      'submit-choice',
      handlers.onSubmitChoice,
      ui.busy || !ui.selectedExtension || ui.checked.length === 0,
    ),
  );
  return panel;
}

function renderCleanPanel(state: SessionState, ui: UiState, handlers: Handlers): HTMLElement {
  const panel = el('section', 'clean-panel');
  panel.appendChild(el('h2', undefined, 'No conflicts remain'));
  panel.appendChild(
    el('p', undefined, 'Every conflicting pair is now mutually exclusive. Export the repaired program:'),
  );
  panel.appendChild(button('Export program', 'export-button-main', handlers.onExport, ui.busy));
  return panel;
}

function renderBlockedPanel(state: SessionState): HTMLElement {
  const panel = el('section', 'blocked-panel');
  panel.appendChild(el('h2', undefined, 'Manual edit required'));
  panel.appendChild(
    el(
      'p',
      undefined,
      'These rule pairs have identical bodies, so no body extension can separate them:',
    ),
  );
  const list = el('ul', 'unresolvable-list');
  for (const pair of state.unresolvable) {
    list.appendChild(el('li', undefined, `${pairLabel(pair)} manual edit required`));
  }
  panel.appendChild(list);
  return panel;
}

function renderUnresolvableNote(state: SessionState): HTMLElement | null {
  if (state.status !== 'resolving' || state.unresolvable.length === 0) return null;
  const note = el('p', 'unresolvable-note');
  note.textContent =
    'Unresolvable (manual edit required): ' + state.unresolvable.map(pairLabel).join(' ');
  return note;
}

function renderHistory(state: SessionState): HTMLElement {
  const section = el('section', 'history-panel');
  section.appendChild(el('h2', undefined, 'History'));
  const list = el('ol', 'history-list');
  for (const entry of state.history) {
    list.appendChild(
      el('li', undefined, `${keyLabel(entry.extension)} -> ${entry.targets.join(', ')}`),
    );
  }
  section.appendChild(list);
  return section;
}

function renderProgram(state: SessionState): HTMLElement {
  const section = el('section', 'program-panel');
  section.appendChild(el('h2', undefined, 'Current program'));
  const pre = el('pre', 'program-text');
  pre.textContent = state.program;
  section.appendChild(pre);
  return section;
}

function renderExport(ui: UiState): HTMLElement | null {
  if (ui.exportedText === null) return null;
  const section = el('section', 'export-panel');
  section.appendChild(el('h2', undefined, 'Exported program'));
  const pre = el('pre', 'export-text');
  pre.textContent = ui.exportedText;
  section.appendChild(pre);
  return section;
}

/** Rebuild the workbench screen under `root` from the given state. */
export function renderWorkbench(
  root: HTMLElement,
  state: SessionState,
  ui: UiState,
  handlers: Handlers,
): void {
  root.textContent = '';
  root.appendChild(renderStatusBar(state, ui, handlers));
  root.appendChild(renderBanners(ui));
  const note = renderUnresolvableNote(state);
  if (note) root.appendChild(note);

  const main = el('div', 'workbench-grid');
  if (state.status === 'blocked') {
    main.appendChild(renderBlockedPanel(state));
  } else if (state.status === 'clean') {
    main.appendChild(renderCleanPanel(state, ui, handlers));
  } else {
    main.appendChild(renderQueue(state, ui, handlers));
    main.appendChild(renderChoicePanel(state, ui, handlers));
  }
  const graphSection = el('section', 'graph-panel');
  graphSection.appendChild(el('h2', undefined, 'Solution graph'));
  const canvas = el('div', 'graph-canvas');
  graphSection.appendChild(canvas);
  main.appendChild(graphSection);
  root.appendChild(main);
  renderGraph(canvas, state);

  root.appendChild(renderHistory(state));
  root.appendChild(renderProgram(state));
  const exported = renderExport(ui);
  if (exported) root.appendChild(exported);
}
