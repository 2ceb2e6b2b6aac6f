// Pure string renderers: SeedView in, HTML/SVG markup out. Variable strings
// come from the service verbatim (escaped, never recomputed client-side),
// which is what the smoke test pins.

import type { SeedView } from "./api.js";
import { arrowsFromMatrix, type VertexPosition } from "./layout.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

const VERTEX_RADIUS = 16;

export function renderQuiverSvg(
  view: SeedView,
  positions: VertexPosition[],
  width = 420,
  height = 260,
): string {
  const arrows = arrowsFromMatrix(view.matrix);
  const parts: string[] = [];
  parts.push(
    `<svg class="quiver" viewBox="0 0 ${width} ${height}" ` +
      `xmlns="http://www.w3.org/2000/svg">`,
  );
  parts.push(
    `<defs><marker id="arrowhead" markerWidth="8" markerHeight="8" ` +
      `refX="7" refY="4" orient="auto"><path d="M0,0 L8,4 L0,8 z"/></marker></defs>`,
  );
  for (const a of arrows) {
    const p = positions[a.from - 1]!;
    const q = positions[a.to - 1]!;
    const dx = q.x - p.x;
    const dy = q.y - p.y;
    const len = Math.hypot(dx, dy) || 1;
    const sx = p.x + (dx / len) * VERTEX_RADIUS;
    const sy = p.y + (dy / len) * VERTEX_RADIUS;
    const ex = q.x - (dx / len) * (VERTEX_RADIUS + 6);
    const ey = q.y - (dy / len) * (VERTEX_RADIUS + 6);
    parts.push(
      `<line class="arrow" x1="${sx.toFixed(1)}" y1="${sy.toFixed(1)}" ` +
        `x2="${ex.toFixed(1)}" y2="${ey.toFixed(1)}" marker-end="url(#arrowhead)"/>`,
    );
    if (a.label[0] !== 1 || a.label[1] !== 1) {
      const mx = (p.x + q.x) / 2;
      const my = (p.y + q.y) / 2 - 6;
      parts.push(
        `<text class="valuation" x="${mx}" y="${my}">` +
          `(${a.label[0]},${a.label[1]})</text>`,
      );
    }
  }
  for (let v = 1; v <= view.matrix.length; v++) {
    const p = positions[v - 1]!;
    const badge = view.sinks.includes(v)
      ? " sink"
      : view.sources.includes(v)
        ? " source"
        : "";
    parts.push(
      `<g class="vertex${badge}" data-vertex="${v}">` +
        `<circle cx="${p.x}" cy="${p.y}" r="${VERTEX_RADIUS}"/>` +
        `<text x="${p.x}" y="${p.y + 4}">${v}</text></g>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

export function renderVariableCards(view: SeedView): string {
  const changed = new Set(view.changed ?? []);
  const cards = view.vars.map((variable, idx) => {
    const v = idx + 1;
    const classes = ["card"];
    if (changed.has(v)) classes.push("changed");
    const badge = view.sinks.includes(v)
      ? `<span class="badge sink">sink</span>`
      : view.sources.includes(v)
        ? `<span class="badge source">source</span>`
        : "";
    return (
      `<div class="${classes.join(" ")}" data-card="${v}">` +
      `<div class="card-head">x${v} ${badge}</div>` +
      `<code class="display">${escapeHtml(variable.display)}</code>` +
      `<div class="den">den: [${variable.den.join(", ")}]</div>` +
      `</div>`
    );
  });
  return `<div class="cards">${cards.join("")}</div>`;
}

export function renderHistory(history: number[]): string {
  if (history.length === 0) {
    return `<div class="history empty">history: (initial seed)</div>`;
  }
  const entries = history
    .map(
      (k, idx) =>
        `<button class="hist-entry" data-depth="${idx}" ` +
        `title="undo back to before this step">&mu;${k}</button>`,
    )
    .join(" ");
  return `<div class="history">history: ${entries} <button class="hist-entry undo-one" data-undo="1">undo</button></div>`;
}

export function renderErrorPanel(message: string | null): string {
  if (!message) return "";
  return `<div class="error-panel">service error: ${escapeHtml(message)}</div>`;
}

export function renderSeedView(
  view: SeedView,
  positions: VertexPosition[],
  error: string | null = null,
): string {
  return (
    renderErrorPanel(error) +
    `<div class="seed">` +
    renderQuiverSvg(view, positions) +
    renderVariableCards(view) +
    `</div>` +
    renderHistory(view.history)
  );
}

export function renderMalformed(reason: string): string {
  return `<div class="error-panel">malformed payload: ${escapeHtml(reason)}</div>`;
}
