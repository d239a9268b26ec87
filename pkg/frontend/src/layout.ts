import type { QuiverJson } from "./types.js";

/**
 * Deterministic force-directed layout.  Positions are client-only
 * state: the simulation is seeded from a circle, so the same quiver
 * JSON always lays out identically until the user drags (pins) a
 * vertex.
 */

export interface Point {
  x: number;
  y: number;
}

export interface LayoutOptions {
  width: number;
  height: number;
  iterations: number;
  springLength: number;
}

const DEFAULTS: LayoutOptions = {
  width: 640,
  height: 480,
  iterations: 300,
  springLength: 120,
};

export function circleLayout(n: number, options: Partial<LayoutOptions> = {}): Point[] {
  const { width, height } = { ...DEFAULTS, ...options };
  const radius = Math.min(width, height) / 2 - 60;
  const points: Point[] = [];
  for (let i = 0; i < n; i++) {
    const angle = (2 * Math.PI * i) / n - Math.PI / 2;
    points.push({
      x: width / 2 + radius * Math.cos(angle),
      y: height / 2 + radius * Math.sin(angle),
    });
  }
  return points;
}

export function forceLayout(
  quiver: QuiverJson,
  options: Partial<LayoutOptions> = {},
  pinned: Map<number, Point> = new Map(),
): Point[] {
  const opts = { ...DEFAULTS, ...options };
  const pos = circleLayout(quiver.n, opts);
  for (const [index, p] of pinned) pos[index] = { ...p };
  const edges = quiver.arrows
    .filter((a) => a.from < a.to)
    .map((a) => [a.from - 1, a.to - 1] as const);
  for (let iter = 0; iter < opts.iterations; iter++) {
    const force: Point[] = pos.map(() => ({ x: 0, y: 0 }));
    for (let i = 0; i < quiver.n; i++) {
      for (let j = i + 1; j < quiver.n; j++) {
        const dx = pos[i].x - pos[j].x;
        const dy = pos[i].y - pos[j].y;
        const d2 = Math.max(dx * dx + dy * dy, 1);
        const rep = 12000 / d2;
        const d = Math.sqrt(d2);
        force[i].x += (dx / d) * rep;
        force[i].y += (dy / d) * rep;
        force[j].x -= (dx / d) * rep;
        force[j].y -= (dy / d) * rep;
      }
    }
    for (const [a, b] of edges) {
      const dx = pos[b].x - pos[a].x;
      const dy = pos[b].y - pos[a].y;
      const d = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
      const pull = 0.02 * (d - opts.springLength);
      force[a].x += (dx / d) * pull * d;
      force[a].y += (dy / d) * pull * d;
      force[b].x -= (dx / d) * pull * d;
      force[b].y -= (dy / d) * pull * d;
    }
    const damp = 0.05 * (1 - iter / opts.iterations);
    for (let i = 0; i < quiver.n; i++) {
      if (pinned.has(i)) continue;
      pos[i].x += force[i].x * damp;
      pos[i].y += force[i].y * damp;
      pos[i].x = Math.min(Math.max(pos[i].x, 30), opts.width - 30);
      pos[i].y = Math.min(Math.max(pos[i].y, 30), opts.height - 30);
    }
  }
  return pos;
}
