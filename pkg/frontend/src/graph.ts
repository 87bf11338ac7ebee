/**
 * Force-directed layout and SVG rendering of the solution graph.
 *
 * The layout is a small deterministic spring simulation (no randomness,
 * fixed iteration count) so snapshots and end-to-end runs are stable.
 * Nodes are the server's graph nodes plus any already-resolved groups,
 * which stay visible but dimmed.
 */

import type { GraphPayload, SessionState } from './types.js';
import { resolvedGroups } from './viewmodel.js';

export interface Point {
  x: number;
  y: number;
}

const SVG_NS = 'http://www.w3.org/2000/svg';

/** Deterministic HSL color per extension label. */
export function labelColor(label: string): string {
  let hash = 0;
  for (let i = 0; i < label.length; i++) {
    hash = (hash * 31 + label.charCodeAt(i)) >>> 0;
  }
  return `hsl(${hash % 360}, 62%, 42%)`;
}

/**
 * Lay out node ids with springs on edges and pairwise repulsion.
 *
 * Starts from evenly spaced positions on a circle (in the given id order)
 * and runs a fixed number of relaxation steps, so identical inputs always
 * produce identical positions.
 */
export function layoutGraph(
  ids: string[],
  edges: { a: string; b: string }[],
  width: number,
  height: number,
  iterations = 200,
): Map<string, Point> {
  const pos = new Map<string, Point>();
  const n = ids.length;
  if (n === 0) return pos;
  const cx = width / 2;
  const cy = height / 2;
  const radius = Math.min(width, height) * 0.36;
  ids.forEach((id, i) => {
    const angle = (2 * Math.PI * i) / n - Math.PI / 2;
    pos.set(id, { x: cx + radius * Math.cos(angle), y: cy + radius * Math.sin(angle) });
  });
  if (n === 1) {
    pos.set(ids[0], { x: cx, y: cy });
    return pos;
  }
  const springs = edges.filter((e) => e.a !== e.b);
  const spread = Math.min(width, height) / (Math.sqrt(n) + 1);
  for (let step = 0; step < iterations; step++) {
    const force = new Map<string, Point>(ids.map((id) => [id, { x: 0, y: 0 }]));
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        const p = pos.get(ids[i])!;
        const q = pos.get(ids[j])!;
        const dx = p.x - q.x;
        const dy = p.y - q.y;
        const dist = Math.max(Math.hypot(dx, dy), 1);
        const push = (spread * spread) / (dist * dist);
        const fi = force.get(ids[i])!;
        const fj = force.get(ids[j])!;
        fi.x += (dx / dist) * push;
        fi.y += (dy / dist) * push;
        fj.x -= (dx / dist) * push;
        fj.y -= (dy / dist) * push;
      }
    }
    for (const edge of springs) {
      const p = pos.get(edge.a);
      const q = pos.get(edge.b);
      if (!p || !q) continue;
      const dx = q.x - p.x;
      const dy = q.y - p.y;
      const dist = Math.max(Math.hypot(dx, dy), 1);
      const pull = (dist - spread) * 0.05;
      const fa = force.get(edge.a)!;
      const fb = force.get(edge.b)!;
      fa.x += (dx / dist) * pull;
      fa.y += (dy / dist) * pull;
      fb.x -= (dx / dist) * pull;
      fb.y -= (dy / dist) * pull;
    }
    const cool = 1 - step / iterations;
    for (const id of ids) {
      const p = pos.get(id)!;
      const f = force.get(id)!;
      // Gentle centering keeps disconnected pieces on canvas.
      f.x += (cx - p.x) * 0.01;
      f.y += (cy - p.y) * 0.01;
      const mag = Math.max(Math.hypot(f.x, f.y), 1e-9);
      const cap = Math.min(mag, 12 * cool + 1);
      p.x += (f.x / mag) * cap;
      p.y += (f.y / mag) * cap;
      p.x = Math.min(Math.max(p.x, 30), width - 30);
      p.y = Math.min(Math.max(p.y, 30), height - 30);
    }
  }
  return pos;
}

function svgEl(name: string): SVGElement {
  return document.createElementNS(SVG_NS, name);
}

function selfLoopPath(p: Point, r: number): string {
  // A small circle tangent to the node, drawn above it.
  const loop = r * 0.9;
  return (
    `M ${p.x - loop * 0.7} ${p.y - r * 0.8} ` +
    `a ${loop} ${loop} 0 1 1 ${loop * 1.4} 0`
  );
}

export interface GraphRenderOptions {
  width?: number;
  height?: number;
  /** Clique label to highlight (its members and edges get a class). */
  highlight?: string | null;
}

/**
 * Render the solution graph for a state snapshot into `container`.
 *
 * Active groups come from the server graph; groups resolved earlier are
 * included dimmed, without edges. Edge strokes are colored per extension
 * label, singleton cliques draw as self-loops, and a legend lists every
 * clique with hover highlighting.
 */
export function renderGraph(
  container: HTMLElement,
  state: SessionState,
  opts: GraphRenderOptions = {},
): void {
  const width = opts.width ?? 640;
  const height = opts.height ?? 420;
  container.textContent = '';
  const graph: GraphPayload = state.graph;
  const dimmed = resolvedGroups(state).map((g) => g.id);
  const ids = [...graph.nodes.map((n) => n.group), ...dimmed];
  if (ids.length === 0) {
    const empty = document.createElement('p');
    empty.className = 'graph-empty';
    empty.textContent = 'No conflicts to draw.';
    container.appendChild(empty);
    return;
  }
  const pos = layoutGraph(ids, graph.edges, width, height);
  const svg = svgEl('svg') as SVGSVGElement;
  svg.setAttribute('viewBox', `0 0 ${width} ${height}`);
  svg.setAttribute('class', 'lambda-graph');

  const weights = new Map(graph.nodes.map((n) => [n.group, n.weight]));
  const radiusOf = (id: string) => 13 + 3 * (weights.get(id) ?? 1);

  for (const edge of graph.edges) {
    const a = pos.get(edge.a);
    const b = pos.get(edge.b);
    if (!a || !b) continue;
    const inHighlight = opts.highlight === edge.label;
    let el: SVGElement;
    if (edge.a === edge.b) {
      el = svgEl('path');
      el.setAttribute('d', selfLoopPath(a, radiusOf(edge.a) + 6));
      el.setAttribute('fill', 'none');
    } else {
      el = svgEl('line');
      el.setAttribute('x1', String(a.x));
      el.setAttribute('y1', String(a.y));
      el.setAttribute('x2', String(b.x));
      el.setAttribute('y2', String(b.y));
    }
    el.setAttribute('stroke', labelColor(edge.label));
    el.setAttribute('class', `edge${inHighlight ? ' highlight' : ''}`);
    el.setAttribute('data-label', edge.label);
    svg.appendChild(el);
  }

  const highlightMembers = opts.highlight
    ? (graph.cliques.find((q) => q.label === opts.highlight)?.members ?? [])
    : [];
  for (const id of ids) {
    const p = pos.get(id)!;
    const g = svgEl('g');
    const isDim = dimmed.includes(id);
    const classes = ['node'];
    if (isDim) classes.push('dimmed');
    if (highlightMembers.includes(id)) classes.push('highlight');
    g.setAttribute('class', classes.join(' '));
    g.setAttribute('data-node', id);
    const circle = svgEl('circle');
    circle.setAttribute('cx', String(p.x));
    circle.setAttribute('cy', String(p.y));
    circle.setAttribute('r', String(radiusOf(id)));
    g.appendChild(circle);
    const label = svgEl('text');
    label.setAttribute('x', String(p.x));
    label.setAttribute('y', String(p.y + 4));
    label.setAttribute('text-anchor', 'middle');
    label.textContent = `cgr(${id})`;
    g.appendChild(label);
    const badge = svgEl('text');
    badge.setAttribute('x', String(p.x));
    badge.setAttribute('y', String(p.y + radiusOf(id) + 13));
    badge.setAttribute('text-anchor', 'middle');
    badge.setAttribute('class', 'weight-badge');
    badge.textContent = isDim ? 'resolved' : `w=${weights.get(id) ?? 0}`;
    g.appendChild(badge);
    svg.appendChild(g);
  }
  container.appendChild(svg);

  const legend = document.createElement('ul');
  legend.className = 'clique-legend';
  for (const q of graph.cliques) {
    const item = document.createElement('li');
    item.dataset.clique = q.label;
    const swatch = document.createElement('span');
    swatch.className = 'swatch';
    swatch.style.background = labelColor(q.label);
    item.appendChild(swatch);
    item.appendChild(
      document.createTextNode(` {${q.label}}  members ${q.members.join(', ')}  weight ${q.weight}`),
    );
    item.addEventListener('mouseenter', () => {
      renderGraph(container, state, { ...opts, highlight: q.label });
    });
    item.addEventListener('mouseleave', () => {
      renderGraph(container, state, { ...opts, highlight: null });
    });
    legend.appendChild(item);
  }
  container.appendChild(legend);
}
